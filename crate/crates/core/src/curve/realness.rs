//! Searching for nonsingular real points on each piece of a curve.
//!
//! The curve is cut into pieces without factoring: the `y`-free content
//! (vertical lines), the `x`-free content of the rest (horizontal lines),
//! and the remaining primitive part. Rational lines are separate pieces.
//! A piece is certified once a real point of it is found at which `F` has
//! a simple root along the sampling direction; such a point is a smooth
//! real point of the curve.

use super::PlaneCurve;
use crate::arith::bivariate::BiPoly;
use crate::arith::qpoly;
use crate::arith::rational::Q;
use crate::arith::roots::{count_real_roots, split_rational_roots};
use crate::arith::upoly::UPoly;
use crate::groebner::{MPoly, Var};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct PieceRealness {
    pub piece: MPoly,
    /// Sample coordinate and direction (`"x"` when `x` was fixed) of the
    /// smooth real point found, if any.
    pub witness: Option<(Var, Q)>,
}

impl PieceRealness {
    pub fn certified(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Realness {
    pub pieces: Vec<PieceRealness>,
}

impl Realness {
    pub fn certified(&self) -> bool {
        self.pieces.iter().all(|p| p.certified())
    }
}

/// Rationals in order of height: 0, 1, -1, 2, -2, 1/2, -1/2, 3, ...
pub(crate) fn samples() -> impl Iterator<Item = Q> {
    std::iter::once(Q::zero()).chain((1i64..).flat_map(|h| {
        let mut v = Vec::new();
        for q in 1..=h {
            // fractions p/q with max(|p|, q) = h
            let ps: Vec<i64> = if q == h { (1..=h).collect() } else { vec![h] };
            for p in ps {
                if p.gcd(&q) == 1 {
                    let r = Q::new(BigInt::from(p), BigInt::from(q));
                    v.push(r.clone());
                    v.push(-r);
                }
            }
        }
        v
    }))
}

/// True if some real root of `piece` is a simple root of `g`.
fn simple_real_root_on(g: &UPoly<Q>, piece: &UPoly<Q>) -> bool {
    if g.is_zero() || piece.is_zero() {
        return false;
    }
    let h = qpoly::squarefree(&qpoly::gcd(g, piece));
    if h.degree().unwrap_or(0) == 0 {
        return false;
    }
    let multiple = qpoly::gcd(&h, &g.derivative());
    let simple = h.div_exact(&multiple).unwrap();
    count_real_roots(&simple) > 0
}

/// The `x`-free content of `b`, i.e. the gcd of its coefficients in `x`.
fn y_content(b: &BiPoly) -> UPoly<Q> {
    let deg_x = b.deg_x();
    let mut g = UPoly::<Q>::zero();
    for i in 0..=deg_x {
        let c = UPoly::new(b.coeffs_y().iter().map(|cy| cy.coeff(i).cloned().unwrap_or_else(Q::zero)).collect());
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.monic().unwrap() } else { qpoly::gcd(&g, &c) };
    }
    g
}

fn split_line_pieces(c: &UPoly<Q>) -> Vec<UPoly<Q>> {
    if c.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let (roots, rest) = split_rational_roots(c);
    let mut out: Vec<UPoly<Q>> = roots.iter().map(UPoly::linear_root).collect();
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest);
    }
    out
}

pub fn certify_realness(curve: &PlaneCurve, budget: usize) -> Realness {
    let f = curve.bipoly();
    let xc = f.content();
    let rest = f.div_x(&xc);
    let yc = y_content(&rest);
    let mut pieces = Vec::new();

    for line in split_line_pieces(&xc) {
        let witness = samples().take(budget).find(|y0| simple_real_root_on(&f.eval_y(y0), &line)).map(|y0| (Var::Y, y0));
        pieces.push(PieceRealness { piece: MPoly::from_upoly(&line, Var::X), witness });
    }
    for line in split_line_pieces(&yc) {
        let witness = samples().take(budget).find(|x0| simple_real_root_on(&f.eval_x(x0), &line)).map(|x0| (Var::X, x0));
        pieces.push(PieceRealness { piece: MPoly::from_upoly(&line, Var::Y), witness });
    }
    let core = if yc.degree().unwrap_or(0) > 0 {
        let ycb = BiPoly::new(yc.coeffs().iter().map(|c| UPoly::constant(c.clone())).collect());
        divide_by_y_poly(&rest, &ycb)
    } else {
        rest
    };
    if core.deg_y().unwrap_or(0) > 0 {
        let witness = samples()
            .take(budget)
            .find(|x0| {
                let on_piece = core.eval_x(x0);
                on_piece.degree().unwrap_or(0) > 0 && simple_real_root_on(&f.eval_x(x0), &on_piece)
            })
            .map(|x0| (Var::X, x0));
        pieces.push(PieceRealness { piece: MPoly::from_bipoly(&core).primitive(), witness });
    }
    Realness { pieces }
}

/// Exact quotient of `a` by a polynomial in `y` alone.
fn divide_by_y_poly(a: &BiPoly, d: &BiPoly) -> BiPoly {
    let dd = d.deg_y().unwrap();
    let lc = d.coeffs_y()[dd].coeffs()[0].clone();
    let mut r: Vec<UPoly<Q>> = a.coeffs_y().to_vec();
    let mut quo = vec![UPoly::<Q>::zero(); r.len().saturating_sub(dd).max(1)];
    while r.len() > dd && r.iter().any(|c| !c.is_zero()) {
        let k = r.len() - 1;
        let c = r[k].scale(&(Q::one() / &lc));
        for (j, dc) in d.coeffs_y().iter().enumerate() {
            r[k - dd + j] = r[k - dd + j].fsub(&c.scale(&dc.coeffs()[0]));
        }
        quo[k - dd] = c;
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    BiPoly::new(quo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::make_curve;
    use crate::parse::parse_poly;

    fn realness(s: &str, budget: usize) -> Realness {
        certify_realness(&make_curve(&parse_poly(s).unwrap()).unwrap(), budget)
    }

    #[test]
    fn sample_order() {
        let v: Vec<String> = samples().take(9).map(|q| q.to_string()).collect();
        assert_eq!(v, ["0", "1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3"]);
    }

    #[test]
    fn examples() {
        assert!(realness("y^2 - x^3", 10).certified());
        assert!(!realness("y^2 + x^2 + 1", 200).certified());
        assert!(realness("y^2 - x^2*(x+1)", 10).certified());
    }

    #[test]
    fn lines_are_separate_pieces() {
        let r = realness("(x - 1)*(x^2 + 1)*(y^2 + x^2 + 1)", 50);
        assert_eq!(r.pieces.len(), 3);
        assert!(r.pieces[0].certified());
        assert!(!r.pieces[1].certified());
        assert!(!r.pieces[2].certified());
        let r = realness("(y - 2)*(y^2 - x)", 20);
        assert_eq!(r.pieces.len(), 2);
        assert!(r.certified());
    }

    #[test]
    fn isolated_real_point_is_not_certified() {
        // x^2 + y^2 = 0 has the single real point (0, 0), a singular one
        assert!(!realness("x^2 + y^2", 100).certified());
    }
}
