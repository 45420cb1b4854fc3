//! Membership decisions: regular functions, the seminormal and
//! R-seminormal closures, and integrality.

use super::fiber::FiberReport;
use super::function::CurveFunction;
use crate::arith::tower::Cursor;
use crate::arith::FieldElem;
use crate::curve::certify_realness;
use crate::error::Result;
use crate::groebner::{buchberger, normal_form, MPoly, MonomialOrder, Var};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Regularity {
    /// `p/q` agrees with the polynomial `h` off the bad points and at them.
    Yes { h: MPoly },
    /// `p` is not in `<F, q>`; `normal_form` is its remainder.
    NotInIdeal { normal_form: MPoly },
    /// `p/q = h` off the bad points but `h` misses an assigned value.
    ValueMismatch { h: MPoly, point: String },
}

impl Regularity {
    pub fn is_yes(&self) -> bool {
        matches!(self, Regularity::Yes { .. })
    }
}

pub fn is_regular(f: &CurveFunction) -> Regularity {
    let gb = buchberger(&[f.curve().poly().clone(), f.q().clone()], MonomialOrder::GrevLex);
    let nf = normal_form(f.p(), &gb);
    if !nf.is_zero() {
        return Regularity::NotInIdeal { normal_form: nf };
    }
    // t - h lies in the graph ideal, so the normal form of t is h mod F
    let h = normal_form(&MPoly::var(Var::T), f.graph().lex_basis());
    debug_assert!(!h.involves(Var::T));
    for (i, rp) in f.real_points().iter().enumerate() {
        let bp = &f.bad_points()[rp.class];
        let (x, y) = bp.coords();
        let hv = h.eval_nf(&[(Var::X, x), (Var::Y, y)]);
        let mut cur = Cursor::new(bp.field(), rp.emb);
        if cur.sign(&hv.fsub(&f.values()[i])) != Ordering::Equal {
            return Regularity::ValueMismatch { h, point: rp.label() };
        }
    }
    Regularity::Yes { h }
}

/// The monic relation, if the function is integral.
pub fn is_integral(f: &CurveFunction) -> Option<MPoly> {
    f.graph().integral_relation().cloned()
}

/// A failed condition: the point and what was seen there.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub point: String,
    pub detail: String,
}

fn real_fibers(f: &CurveFunction) -> Result<Vec<FiberReport>> {
    Ok(f.fibers()?.iter().filter(|r| r.real).cloned().collect())
}

/// The real graph is closed iff over every real bad point the real fibre
/// roots are exactly the assigned value.
pub fn graph_real_closed(f: &CurveFunction) -> Result<Option<Witness>> {
    for r in real_fibers(f)? {
        let ok = r.distinct_real == Some(1) && r.assigned_is_root == Some(true);
        if !ok {
            let roots = if r.distinct_complex.is_none() { "every t".to_string() } else { format!("{{{}}}", r.real_roots.join(", ")) };
            return Ok(Some(Witness {
                point: r.point.clone(),
                detail: format!("real fibre roots {roots}, assigned {}", r.assigned.clone().unwrap_or_default()),
            }));
        }
    }
    Ok(None)
}

fn count_text(n: Option<usize>) -> String {
    n.map_or("infinitely many".into(), |n| n.to_string())
}

fn singleton_failure(r: &FiberReport) -> Option<Witness> {
    let ok = r.distinct_complex == Some(1) && r.matches != Some(false);
    if ok {
        return None;
    }
    let detail = if r.distinct_complex == Some(1) {
        format!("fibre {} has the single root {} but the assigned value is {}", r.fiber_poly, r.singleton_text.clone().unwrap_or_default(), r.assigned.clone().unwrap_or_default())
    } else {
        let real = r.distinct_real.map(|n| format!(" ({n} real)")).unwrap_or_default();
        format!("fibre {} has {} distinct complex roots{real}", r.fiber_poly, count_text(r.distinct_complex))
    };
    Some(Witness { point: r.point.clone(), detail })
}

/// One condition of the membership criteria with its outcome.
#[derive(Clone, Debug, PartialEq)]
pub struct Condition {
    pub index: u8,
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Membership {
    pub verdict: Verdict,
    pub conditions: Vec<Condition>,
}

/// The four conditions for membership in the R-seminormal closure.
pub fn in_krplus(f: &CurveFunction) -> Result<Membership> {
    let integral = is_integral(f);
    let closed = graph_real_closed(f)?;
    let c4 = real_fibers(f)?.iter().find_map(singleton_failure);
    let conditions = vec![
        Condition { index: 1, name: "rational", passed: true, witness: None },
        Condition {
            index: 2,
            name: "integral",
            passed: integral.is_some(),
            witness: integral.is_none().then(|| Witness { point: "-".into(), detail: "no relation monic in t".into() }),
        },
        Condition { index: 3, name: "closed real graph", passed: closed.is_none(), witness: closed },
        Condition { index: 4, name: "singleton real fibres", passed: c4.is_none(), witness: c4 },
    ];
    let verdict = Verdict::from_bool(conditions.iter().all(|c| c.passed));
    Ok(Membership { verdict, conditions })
}

/// Membership in the seminormal closure: the R-seminormal conditions plus
/// singleton fibres over the non-real bad points.
pub fn in_kplus(f: &CurveFunction) -> Result<Membership> {
    let mut m = in_krplus(f)?;
    let w = f.fibers()?.iter().filter(|r| !r.real).find_map(singleton_failure);
    m.conditions.push(Condition { index: 5, name: "singleton non-real fibres", passed: w.is_none(), witness: w });
    m.verdict = Verdict::from_bool(m.conditions.iter().all(|c| c.passed));
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub regular: Verdict,
    pub k_plus: Verdict,
    pub k_r_plus: Verdict,
    pub integral: Verdict,
}

impl Verdicts {
    /// `regular => k_plus => k_r_plus => integral`.
    pub fn monotone(&self) -> bool {
        let chain = [self.regular, self.k_plus, self.k_r_plus, self.integral];
        chain.windows(2).all(|w| !w[0].is_yes() || w[1].is_yes())
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub verdicts: Verdicts,
    pub integral_relation: Option<MPoly>,
    pub regularity: Regularity,
    pub conditions: Vec<Condition>,
    pub fibers: Vec<FiberReport>,
    pub hierarchy_consistent: bool,
    pub caveats: Vec<String>,
}

pub const DEFAULT_REALNESS_BUDGET: usize = 64;

pub fn classify(f: &CurveFunction) -> Result<ClassificationReport> {
    classify_with(f, DEFAULT_REALNESS_BUDGET)
}

pub fn classify_with(f: &CurveFunction, realness_budget: usize) -> Result<ClassificationReport> {
    let regularity = is_regular(f);
    let kplus = in_kplus(f)?;
    let krplus_ok = kplus.conditions.iter().filter(|c| c.index <= 4).all(|c| c.passed);
    let relation = is_integral(f);
    let verdicts = Verdicts {
        regular: Verdict::from_bool(regularity.is_yes()),
        k_plus: kplus.verdict,
        k_r_plus: Verdict::from_bool(krplus_ok),
        integral: Verdict::from_bool(relation.is_some()),
    };
    let mut caveats = Vec::new();
    let realness = certify_realness(f.curve(), realness_budget);
    for piece in realness.pieces.iter().filter(|p| !p.certified()) {
        caveats.push(format!(
            "realness of the component {} = 0 is unverified after {realness_budget} samples; k_plus and k_r_plus assume its real points are dense",
            piece.piece
        ));
    }
    let hierarchy_consistent = verdicts.monotone();
    if !hierarchy_consistent {
        caveats.push("verdicts violate the inclusion chain".into());
    }
    Ok(ClassificationReport {
        verdicts,
        integral_relation: relation,
        regularity,
        conditions: kplus.conditions,
        fibers: f.fibers()?.to_vec(),
        hierarchy_consistent,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::function::{make_function, Assignment};
    use crate::curve::make_curve;
    use crate::parse::parse_poly;

    fn func(c: &str, p: &str, q: &str, vals: &[i64]) -> CurveFunction {
        let c = make_curve(&parse_poly(c).unwrap()).unwrap();
        let a: Vec<Assignment> = vals.iter().map(|&v| Assignment::at_origin(v)).collect();
        make_function(&c, &parse_poly(p).unwrap(), &parse_poly(q).unwrap(), &a).unwrap()
    }

    fn v(r: bool, kp: bool, krp: bool, i: bool) -> Verdicts {
        let f = Verdict::from_bool;
        Verdicts { regular: f(r), k_plus: f(kp), k_r_plus: f(krp), integral: f(i) }
    }

    #[test]
    fn regularity() {
        let f = func("y^2 - x^3", "x*y", "x", &[0]);
        assert_eq!(is_regular(&f), Regularity::Yes { h: parse_poly("y").unwrap() });
        let f = func("y^2 - x^3", "y", "x", &[0]);
        assert!(matches!(is_regular(&f), Regularity::NotInIdeal { normal_form } if normal_form == parse_poly("y").unwrap()));
        let f = func("y^2 - x^3", "x*y", "x", &[5]);
        assert!(matches!(is_regular(&f), Regularity::ValueMismatch { .. }));
    }

    #[test]
    fn examples() {
        let r = classify(&func("y^2 - x^3", "y", "x", &[0])).unwrap();
        assert_eq!(r.verdicts, v(false, true, true, true));
        assert_eq!(r.integral_relation.unwrap().to_string(), "t^2 - x");
        let r = classify(&func("y^2 - x^3*(x^2+1)^2", "y", "x*(x^2+1)", &[0])).unwrap();
        assert_eq!(r.verdicts, v(false, false, true, true));
        let r = classify(&func("y^4 - x*(x^2+y^2)", "y^2", "x", &[0])).unwrap();
        assert_eq!(r.verdicts, v(false, false, false, true));
        assert!(!r.conditions[2].passed);
        let r = classify(&func("y^3 - x^2*y^2 + y*x^2*(x+1) - x^4*(x+1)", "y", "x", &[0])).unwrap();
        assert_eq!(r.verdicts, v(false, false, false, true));
        assert!(r.conditions[2].passed && !r.conditions[3].passed);
        let r = classify(&func("y^2 - x^3", "x^2 + y", "1", &[])).unwrap();
        assert_eq!(r.verdicts, v(true, true, true, true));
        assert!(r.caveats.is_empty());
    }

    #[test]
    fn krplus_witnesses() {
        let f = func("y^3 - x^2*y^2 + y*x^2*(x+1) - x^4*(x+1)", "y", "x", &[0]);
        let m = in_krplus(&f).unwrap();
        let w = m.conditions[3].witness.clone().unwrap();
        assert_eq!(w.point, "(0, 0)");
        assert!(w.detail.contains("3 distinct complex roots (1 real)"), "{}", w.detail);
        let f = func("y^4 - x*(x^2+y^2)", "y^2", "x", &[0]);
        let w = graph_real_closed(&f).unwrap().unwrap();
        assert!(w.detail.contains("{0, 1}"), "{}", w.detail);
    }

    #[test]
    fn unverified_realness_is_a_caveat() {
        let r = classify(&func("y^2 + x^2 + 1", "y", "1", &[])).unwrap();
        assert_eq!(r.caveats.len(), 1);
    }
}
