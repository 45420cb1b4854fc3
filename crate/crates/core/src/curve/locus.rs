//! Zero-dimensional loci on a curve as triangular systems
//! `m1(x) = 0, m2(x, y) = 0` held in number-field towers.

use super::PlaneCurve;
use crate::arith::bivariate::{resultant_y, BiPoly};
use crate::arith::qpoly;
use crate::arith::rational::{fmt_q, to_f64, Q};
use crate::arith::roots::split_rational_roots;
use crate::arith::tower::{split_eval, Cursor, NfElem, NumberField};
use crate::arith::upoly::UPoly;
use crate::arith::FieldElem;
use crate::error::{Error, Result};
use crate::groebner::{MPoly, Var};
use std::sync::Arc;

/// A class of conjugate points: the points of a depth-two tower
/// `Q[x]/(m1)[y]/(m2)`. Real points are the real embeddings of the tower.
#[derive(Clone, Debug)]
pub struct BadPoint {
    field: Arc<NumberField>,
}

impl BadPoint {
    pub(crate) fn new(field: Arc<NumberField>) -> Self {
        debug_assert_eq!(field.depth(), 2);
        BadPoint { field }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// Coordinates `(x, y)` as tower elements.
    pub fn coords(&self) -> (NfElem, NfElem) {
        let g = self.field.gens();
        (g[0].clone(), g[1].clone())
    }

    /// Number of complex points in the class.
    pub fn class_size(&self) -> usize {
        self.field.total_degree()
    }

    /// Number of real points in the class.
    pub fn real_count(&self) -> usize {
        self.field.embeddings().len()
    }

    pub fn is_real(&self) -> bool {
        self.real_count() > 0
    }

    pub fn m1(&self) -> UPoly<Q> {
        self.field.level(1).modulus_q().unwrap()
    }

    /// `m2` as a polynomial in `x` and `y`.
    pub fn m2(&self) -> MPoly {
        let mut acc = MPoly::zero();
        for (k, c) in self.field.modulus().coeffs().iter().enumerate() {
            let term = MPoly::from_nf(c, [Var::X, Var::Y]).mul(&MPoly::var(Var::Y).pow(k as u32));
            acc = acc.add(&term);
        }
        acc
    }

    /// The point itself when the class is a single rational point.
    pub fn rational_point(&self) -> Option<(Q, Q)> {
        if !self.field.is_rational() {
            return None;
        }
        let (x, y) = self.coords();
        Some((x.as_rational()?.clone(), y.as_rational()?.clone()))
    }

    /// Approximate coordinates of real point `emb`.
    pub fn approx(&self, emb: usize) -> (f64, f64) {
        let mut cur = Cursor::new(&self.field, emb);
        cur.refine_to(&Q::new(1.into(), (1u64 << 40).into()));
        let b = cur.boxes();
        (to_f64(&b[0].mid()), to_f64(&b[1].mid()))
    }

    /// `(a, b)` for a rational point, otherwise the defining system.
    pub fn label(&self) -> String {
        if let Some((a, b)) = self.rational_point() {
            return format!("({}, {})", fmt_q(&a), fmt_q(&b));
        }
        format!("{{{} = 0, {} = 0}}", MPoly::from_upoly(&self.m1(), Var::X), self.m2())
    }

    /// True if `p(x, y)` vanishes at every point of the class.
    pub fn vanishes(&self, p: &MPoly) -> bool {
        let (x, y) = self.coords();
        p.eval_nf(&[(Var::X, x), (Var::Y, y)]).fis_zero()
    }

    fn sort_key(&self) -> (u8, Vec<f64>, usize, String) {
        if self.is_real() {
            let mut pts: Vec<(f64, f64)> = (0..self.real_count()).map(|i| self.approx(i)).collect();
            pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
            (0, vec![pts[0].0, pts[0].1], 0, self.label())
        } else {
            (1, Vec::new(), self.class_size(), self.label())
        }
    }
}

/// Real classes first by their leftmost point, then non-real classes by
/// size and label.
pub(crate) fn sort_points(v: &mut [BadPoint]) {
    let mut keyed: Vec<_> = v.iter().map(|p| (p.sort_key(), p.clone())).collect();
    keyed.sort_by(|a, b| {
        let (ka, kb) = (&a.0, &b.0);
        ka.0.cmp(&kb.0)
            .then(ka.1.partial_cmp(&kb.1).unwrap())
            .then(ka.2.cmp(&kb.2))
            .then(ka.3.cmp(&kb.3))
    });
    for (slot, (_, p)) in v.iter_mut().zip(keyed) {
        *slot = p;
    }
}

/// Common zeros of `sys`, whose `x`-coordinates are among the roots of `r`.
pub(crate) fn decompose(sys: &[BiPoly], r: &UPoly<Q>) -> Result<Vec<BadPoint>> {
    let mut x_moduli = Vec::new();
    for (piece, _) in qpoly::yun(r) {
        let (roots, rest) = split_rational_roots(&piece);
        x_moduli.extend(roots.iter().map(UPoly::linear_root));
        if rest.degree().unwrap_or(0) > 0 {
            x_moduli.push(rest);
        }
    }
    let mut out = Vec::new();
    for m1 in x_moduli {
        let k1 = NumberField::simple(&m1)?;
        let branches = split_eval(&k1, |k| {
            let a = k.gen();
            let ps: Vec<UPoly<NfElem>> = sys.iter().map(|p| p.eval_x_nf(&a)).collect();
            match UPoly::gcd_all(ps.iter())? {
                None => Ok(None),
                Some(g) => Ok(Some(g.squarefree_part()?)),
            }
        })?;
        for (k, g) in branches {
            let g = g.ok_or_else(|| Error::Degenerate("system vanishes on a whole vertical line".into()))?;
            if g.degree().unwrap_or(0) == 0 {
                continue;
            }
            for m2 in split_rational_factors(&k, g) {
                let fields = split_eval(&k, |kk| NumberField::extend(kk, &kk.import_poly(&m2)))?;
                out.extend(fields.into_iter().map(|(_, f)| BadPoint::new(f)));
            }
        }
    }
    sort_points(&mut out);
    Ok(out)
}

/// Over a rational point, splits off the rational roots of `g` so rational
/// points form their own classes.
fn split_rational_factors(k: &Arc<NumberField>, g: UPoly<NfElem>) -> Vec<UPoly<NfElem>> {
    if !k.is_rational() {
        return vec![g];
    }
    let Ok(gq) = g.try_map(|c| c.as_rational().cloned().ok_or(())) else {
        return vec![g];
    };
    let (roots, rest) = split_rational_roots(&gq);
    let lift = |p: &UPoly<Q>| p.map(|c| NfElem::Rat(c.clone()));
    let mut out: Vec<UPoly<NfElem>> = roots.iter().map(|r| lift(&UPoly::linear_root(r))).collect();
    if rest.degree().unwrap_or(0) > 0 {
        out.push(lift(&rest));
    }
    out
}

fn y_free(b: &BiPoly) -> Option<UPoly<Q>> {
    match b.deg_y() {
        None => Some(UPoly::zero()),
        Some(0) => Some(b.coeffs_y()[0].clone()),
        _ => None,
    }
}

pub(crate) fn singular_locus(f: &BiPoly) -> Result<Vec<BadPoint>> {
    let fy = f.d_dy();
    let fx = f.d_dx();
    let r = match (f.deg_y(), y_free(&fy)) {
        (Some(0), _) => return Ok(Vec::new()),
        (_, Some(a)) => a,
        _ => resultant_y(f, &fy),
    };
    if r.is_zero() {
        return Err(Error::Degenerate("discriminant vanishes identically".into()));
    }
    if r.degree() == Some(0) {
        return Ok(Vec::new());
    }
    decompose(&[fy, f.clone(), fx], &r)
}

/// Real and non-real points of the curve where `q` vanishes.
pub fn bad_locus(curve: &PlaneCurve, q: &MPoly) -> Result<Vec<BadPoint>> {
    let qb = q
        .to_bipoly()
        .ok_or_else(|| Error::Precondition("denominator may only use x and y".into()))?;
    if qb.is_zero() {
        return Err(Error::ZeroDivisor { component: curve.poly().to_string() });
    }
    if q.is_constant() {
        return Ok(Vec::new());
    }
    let f = curve.bipoly();
    let g = f.gcd(&qb);
    if g.deg_y().unwrap_or(0) > 0 || g.deg_x() > 0 {
        return Err(Error::ZeroDivisor { component: MPoly::from_bipoly(&g).primitive().to_string() });
    }
    let r = match (y_free(f), y_free(&qb)) {
        (Some(a), Some(b)) => qpoly::gcd(&a, &b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => resultant_y(f, &qb),
    };
    if r.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    decompose(&[qb, f.clone()], &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::make_curve;
    use crate::parse::parse_poly;

    fn curve(s: &str) -> PlaneCurve {
        make_curve(&parse_poly(s).unwrap()).unwrap()
    }

    fn labels(v: &[BadPoint]) -> Vec<String> {
        v.iter().map(|p| p.label()).collect()
    }

    fn parity(v: &[BadPoint]) {
        for p in v {
            assert_eq!((p.class_size() - p.real_count()) % 2, 0, "{}", p.label());
        }
    }

    #[test]
    fn singular_examples() {
        let c = curve("y^2 - x^3");
        assert_eq!(labels(c.singular_locus().unwrap()), ["(0, 0)"]);
        let c = curve("y^2 - x^2*(x+1)");
        assert_eq!(labels(c.singular_locus().unwrap()), ["(0, 0)"]);
        let c = curve("y^2 - x^3*(x^2+1)^2");
        let s = c.singular_locus().unwrap();
        assert_eq!(labels(s), ["(0, 0)", "{x^2 + 1 = 0, y = 0}"]);
        assert!(!s[1].is_real());
        assert_eq!(s[1].class_size(), 2);
        parity(s);
        assert!(curve("y - x^2").singular_locus().unwrap().is_empty());
        assert!(curve("x^2 - 1").singular_locus().unwrap().is_empty());
    }

    #[test]
    fn bad_examples() {
        let c = curve("y^2 - x^3");
        assert_eq!(labels(&bad_locus(&c, &parse_poly("x").unwrap()).unwrap()), ["(0, 0)"]);
        let c = curve("y^2 - x^3*(x^2+1)^2");
        let q = parse_poly("x*(x^2+1)").unwrap();
        let b = bad_locus(&c, &q).unwrap();
        assert_eq!(labels(&b), ["(0, 0)", "{x^2 + 1 = 0, y = 0}"]);
        for p in &b {
            assert!(p.vanishes(c.poly()) && p.vanishes(&q));
        }
        parity(&b);
        let c = curve("y^4 - x*(x^2+y^2)");
        assert_eq!(labels(&bad_locus(&c, &parse_poly("x").unwrap()).unwrap()), ["(0, 0)"]);
    }

    #[test]
    fn bad_locus_degenerate_denominators() {
        let c = curve("y^2 - x^3");
        assert!(bad_locus(&c, &parse_poly("7").unwrap()).unwrap().is_empty());
        assert!(matches!(bad_locus(&c, &parse_poly("0").unwrap()), Err(Error::ZeroDivisor { .. })));
        let c = curve("x*(y - 1)");
        assert!(matches!(bad_locus(&c, &parse_poly("x^2").unwrap()), Err(Error::ZeroDivisor { .. })));
        let b = bad_locus(&c, &parse_poly("y").unwrap()).unwrap();
        assert_eq!(labels(&b), ["(0, 0)"]);
        let c = curve("y^2 - x");
        let b = bad_locus(&c, &parse_poly("x - 4").unwrap()).unwrap();
        assert_eq!(labels(&b), ["(4, -2)", "(4, 2)"]);
        let b = bad_locus(&c, &parse_poly("x - 2").unwrap()).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].real_count(), 2);
        assert_eq!(b[0].label(), "{x - 2 = 0, y^2 - 2 = 0}");
    }

    #[test]
    fn mixed_class_parity() {
        let c = curve("y - x^3 + 2");
        let b = bad_locus(&c, &parse_poly("y").unwrap()).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!((b[0].class_size(), b[0].real_count()), (3, 1));
    }

    #[test]
    fn three_real_singular_points() {
        let c = curve("(y^4+x^6)*(y^2-(x-1)^3*(x-2)^2*(x^2+1)^2*(x^2+4)^3)");
        let s = c.singular_locus().unwrap();
        let names = labels(s);
        for want in ["(0, 0)", "(1, 0)", "(2, 0)", "{x^2 + 1 = 0, y = 0}", "{x^2 + 4 = 0, y = 0}"] {
            assert!(names.iter().any(|n| n == want), "{want} missing from {names:?}");
        }
        let points: usize = s.iter().map(|p| p.class_size()).sum();
        assert!(points >= 7, "{names:?}");
        parity(s);
        for p in s {
            assert!(p.vanishes(c.poly()));
        }
    }
}
