//! Shared inputs for the benchmarks.

use seminorm_core::classify::{make_function_filling, CurveFunction};
use seminorm_core::curve::make_curve;
use seminorm_core::parse::parse_poly;

/// `(name, curve, numerator, denominator)` of increasing cost.
pub const CASES: &[(&str, &str, &str, &str)] = &[
    ("cusp", "y^2 - x^3", "y", "x"),
    ("cusp-with-conjugate-nodes", "y^2 - x^3*(x^2+1)^2", "y", "x*(x^2+1)"),
    ("quartic", "y^4 - x*(x^2+y^2)", "y^2", "x"),
    ("cubic", "y^3 - x^2*y^2 + y*x^2*(x+1) - x^4*(x+1)", "y", "x"),
];

/// A fresh function with suggested values, so no cached work is shared.
pub fn function(curve: &str, p: &str, q: &str) -> CurveFunction {
    let c = make_curve(&parse_poly(curve).expect("curve parses")).expect("curve is squarefree");
    let (p, q) = (parse_poly(p).expect("numerator parses"), parse_poly(q).expect("denominator parses"));
    make_function_filling(&c, &p, &q, &[]).expect("valid function").0
}
