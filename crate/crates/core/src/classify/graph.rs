//! The closure of the graph of `p/q` in `X x A^1`, cut out by
//! `J = <F, q*t - p> : q^inf`.

use crate::arith::bivariate::{resultant_y, BiPoly};
use crate::arith::{UPoly, Q};
use crate::curve::PlaneCurve;
use crate::groebner::{buchberger, monic_in_t_witness, saturate, GroebnerBasis, MPoly, MonomialOrder, PolyIdeal, Var};

#[derive(Clone, Debug)]
pub struct GraphIdeal {
    j: PolyIdeal,
    lex: GroebnerBasis,
    relation: Option<MPoly>,
}

pub(crate) fn build_graph(curve: &PlaneCurve, p: &MPoly, q: &MPoly) -> GraphIdeal {
    let qt_p = q.mul(&MPoly::var(Var::T)).sub(p);
    let base = PolyIdeal::new(vec![curve.poly().clone(), qt_p]).expect("curve equation is nonzero");
    let j = saturate(&base, q).expect("denominator is nonzero and free of s");
    let lex = buchberger(j.generators(), MonomialOrder::Lex);
    let relation = monic_in_t_witness(&lex)
        .map(|w| relation_by_resultant(curve.poly(), p, q).or_else(|| relation_in_t_x(&j)).unwrap_or(w));
    GraphIdeal { j, lex, relation }
}

/// Swaps `t` and `y`, so that a polynomial in `t, x` becomes a `BiPoly`.
const T_AS_Y: [Var; 4] = [Var::S, Var::Y, Var::X, Var::T];

/// The generator of `J ∩ Q[t, x]` for a curve whose leading coefficient in
/// `y` is constant: the squarefree part of the primitive part in `t` of
/// `Res_y(F, q*t - p)`, interpolated from integer values of `t`.
fn relation_by_resultant(f: &MPoly, p: &MPoly, q: &MPoly) -> Option<MPoly> {
    let (fb, pb, qb) = (f.to_bipoly()?, p.to_bipoly()?, q.to_bipoly()?);
    let n = fb.deg_y()?;
    if n == 0 || !fb.coeffs_y().last()?.is_constant() {
        return None;
    }
    let at = |c: &Q| {
        let cq: Vec<UPoly<Q>> = qb.coeffs_y().iter().map(|a| a.scale(c)).collect();
        let mut ys = pb.coeffs_y().iter().map(UPoly::fneg).collect::<Vec<_>>();
        ys.resize(ys.len().max(cq.len()), UPoly::zero());
        for (y, a) in ys.iter_mut().zip(cq) {
            *y = y.fadd(&a);
        }
        BiPoly::new(ys)
    };
    let d = (0..=n as i64 + 1).filter_map(|c| at(&Q::from_integer(c.into())).deg_y()).max()?;
    if d == 0 {
        return None;
    }
    let mut nodes = Vec::new();
    let mut c = 0i64;
    while nodes.len() <= n {
        let cq = Q::from_integer(c.into());
        let b = at(&cq);
        if b.deg_y() == Some(d) {
            nodes.push((cq, resultant_y(&fb, &b)));
        }
        c += 1;
    }
    let mut r = MPoly::zero();
    for (k, (ck, rk)) in nodes.iter().enumerate() {
        let mut lagrange = MPoly::from_upoly(rk, Var::X);
        for (j, (cj, _)) in nodes.iter().enumerate() {
            if j != k {
                let lin = MPoly::var(Var::T).sub(&MPoly::constant(cj.clone()));
                lagrange = lagrange.mul(&lin).scale(&(ck - cj).recip());
            }
        }
        r = r.add(&lagrange);
    }
    let rb = r.permute(T_AS_Y).to_bipoly()?.primitive();
    if !rb.coeffs_y().last()?.is_constant() {
        return None;
    }
    let g = rb.gcd(&rb.d_dy()).primitive();
    let sf = div_monic_y(&rb, &g)?;
    let rel = MPoly::from_bipoly(&sf).permute(T_AS_Y);
    let lc = rel.coefficients_in(Var::T).pop()?.constant_value()?;
    Some(rel.scale(&lc.recip()))
}

/// Exact quotient by a divisor monic in `y`.
fn div_monic_y(a: &BiPoly, d: &BiPoly) -> Option<BiPoly> {
    let (ac, dc) = (a.coeffs_y(), d.coeffs_y());
    if dc.last()?.degree() != Some(0) || dc.len() > ac.len() {
        return None;
    }
    let lc = dc.last()?.lc()?.recip();
    let mut r = ac.to_vec();
    let mut quot = vec![UPoly::zero(); ac.len() - dc.len() + 1];
    for k in (0..quot.len()).rev() {
        let coef = r[k + dc.len() - 1].scale(&lc);
        for (j, dj) in dc.iter().enumerate() {
            r[k + j] = r[k + j].fsub(&coef.fmul(dj));
        }
        quot[k] = coef;
    }
    r.iter().all(UPoly::is_zero).then(|| BiPoly::new(quot))
}

/// The generator of `J ∩ Q[t, x]` made monic in `t`, when its leading
/// coefficient in `t` is a constant.
fn relation_in_t_x(j: &PolyIdeal) -> Option<MPoly> {
    // swap y into the eliminated slot
    let perm = [Var::Y, Var::T, Var::X, Var::S];
    let swapped: Vec<MPoly> = j.generators().iter().map(|g| g.permute(perm)).collect();
    let gb = buchberger(&swapped, MonomialOrder::ElimS);
    let free: Vec<MPoly> = gb.basis().iter().filter(|g| !g.involves(Var::S)).map(|g| g.permute(perm)).collect();
    let [g] = free.as_slice() else { return None };
    let lc = g.coefficients_in(Var::T).pop()?.constant_value()?;
    if g.degree_in(Var::T) == 0 {
        return None;
    }
    Some(g.scale(&lc.recip()))
}

impl GraphIdeal {
    pub fn ideal(&self) -> &PolyIdeal {
        &self.j
    }

    /// Reduced basis for lex with `t > x > y`.
    pub fn lex_basis(&self) -> &GroebnerBasis {
        &self.lex
    }

    /// A relation `P(t)` monic in `t` with coefficients in `Q[x, y]`, present
    /// iff the function is integral over the coordinate ring.
    pub fn integral_relation(&self) -> Option<&MPoly> {
        self.relation.as_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::make_curve;
    use crate::parse::{parse_poly, parse_with, STXY};

    fn graph(c: &str, p: &str, q: &str) -> GraphIdeal {
        let c = make_curve(&parse_poly(c).unwrap()).unwrap();
        build_graph(&c, &parse_poly(p).unwrap(), &parse_poly(q).unwrap())
    }

    fn tp(s: &str) -> MPoly {
        parse_with(s, STXY).unwrap()
    }

    #[test]
    fn cusp() {
        let g = graph("y^2 - x^3", "y", "x");
        for r in ["y^2 - x^3", "x*t - y", "t^2 - x", "t*y - x^2"] {
            assert!(g.lex_basis().contains(&tp(r)), "{r}");
        }
        assert_eq!(g.integral_relation(), Some(&tp("t^2 - x")));
    }

    #[test]
    fn example_relations() {
        let g = graph("y^2 - x^3*(x^2+1)^2", "y", "x*(x^2+1)");
        assert!(g.lex_basis().contains(&tp("t^2 - x")));
        assert_eq!(g.integral_relation(), Some(&tp("t^2 - x")));
        let g = graph("y^4 - x*(x^2+y^2)", "y^2", "x");
        assert_eq!(g.integral_relation(), Some(&tp("t^2 - t - x")));
        let g = graph("y^3 - x^2*y^2 + y*x^2*(x+1) - x^4*(x+1)", "y", "x");
        assert_eq!(g.integral_relation(), Some(&tp("t^3 - x*t^2 + t*(x+1) - x*(x+1)")));
    }

    #[test]
    fn resultant_matches_elimination() {
        let cases = [
            ("y^2 - x^3", "y", "x"),
            ("y^4 - x*(x^2+y^2)", "y^2", "x"),
            ("y^2 - x^2*(x+1)", "y", "x"),
            ("y^3 - x^2*y^2 + y*x^2*(x+1) - x^4*(x+1)", "x*y^2 + y^3 + 2*x^2 - 3*y", "-x"),
            ("(y - x^2)*(y + x^2)", "y", "x"),
        ];
        for (c, p, q) in cases {
            let g = graph(c, p, q);
            let (p, q) = (parse_poly(p).unwrap(), parse_poly(q).unwrap());
            let fast = relation_by_resultant(&parse_poly(c).unwrap(), &p, &q);
            assert!(fast.is_some(), "{c}");
            if c.starts_with("y^3") {
                let r = fast.unwrap();
                let base = PolyIdeal::new(g.ideal().generators().to_vec()).unwrap();
                assert!(base.groebner(MonomialOrder::GrevLex).contains(&r));
            } else {
                assert_eq!(fast, relation_in_t_x(g.ideal()), "{c}");
            }
        }
        assert_eq!(relation_by_resultant(&parse_poly("x*y^2 - 1").unwrap(), &MPoly::one(), &MPoly::var(Var::X)), None);
    }

    #[test]
    fn inverse_is_not_integral() {
        let g = graph("y", "1", "x");
        assert_eq!(g.integral_relation(), None);
    }
}
