//! Ideals: saturation, elimination and the integrality witness.

use super::buchberger::{buchberger, leading, normal_form, GroebnerBasis};
use super::mpoly::{MPoly, Var};
use super::order::MonomialOrder;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct PolyIdeal {
    generators: Vec<MPoly>,
}

impl PolyIdeal {
    /// Zero generators are dropped; at least one nonzero generator is needed.
    pub fn new(gens: Vec<MPoly>) -> Result<Self> {
        let generators: Vec<MPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.is_empty() {
            return Err(Error::Degenerate("ideal needs a nonzero generator".into()));
        }
        Ok(PolyIdeal { generators })
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn groebner(&self, o: MonomialOrder) -> GroebnerBasis {
        buchberger(&self.generators, o)
    }

    /// Containment of ideals by normal forms against a basis of `self`.
    pub fn contains_ideal(&self, other: &PolyIdeal) -> bool {
        let gb = self.groebner(MonomialOrder::GrevLex);
        other.generators.iter().all(|g| normal_form(g, &gb).is_zero())
    }

    pub fn same_as(&self, other: &PolyIdeal) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }
}

/// `I : q^inf`, from the `s`-free part of a basis of `I + <1 - s*q>` under an
/// order eliminating `s`. The result is given by a reduced basis.
pub fn saturate(i: &PolyIdeal, q: &MPoly) -> Result<PolyIdeal> {
    if q.is_zero() {
        return Err(Error::Degenerate("saturation by zero".into()));
    }
    if i.generators.iter().chain(std::iter::once(q)).any(|g| g.involves(Var::S)) {
        return Err(Error::Precondition("the variable s is reserved for saturation".into()));
    }
    let mut gens = i.generators.clone();
    gens.push(MPoly::one().sub(&MPoly::var(Var::S).mul(q)));
    let gb = buchberger(&gens, MonomialOrder::ElimS);
    let kept: Vec<MPoly> = gb.basis().iter().filter(|g| !g.involves(Var::S)).cloned().collect();
    PolyIdeal::new(kept)
}

/// Generators of `I ∩ Q[keep]` read off a basis whose order eliminates the
/// other variables. `keep` must be a suffix of `s, t, x, y`.
pub fn eliminate(gb: &GroebnerBasis, keep: &[Var]) -> Result<PolyIdeal> {
    let first_kept = keep.iter().map(|v| v.index()).min().unwrap_or(4);
    let suffix = (first_kept..4).all(|k| keep.iter().any(|v| v.index() == k));
    if !suffix || !gb.order().eliminates_prefix(first_kept) {
        return Err(Error::OrderMismatch);
    }
    let kept: Vec<MPoly> = gb
        .basis()
        .iter()
        .filter(|g| Var::ALL[..first_kept].iter().all(|&v| !g.involves(v)))
        .cloned()
        .collect();
    if kept.is_empty() {
        return Ok(PolyIdeal { generators: vec![MPoly::zero()] });
    }
    PolyIdeal::new(kept)
}

/// The basis element of least degree whose lex leading monomial is a pure
/// power of `t`: a monic relation for `t` over the remaining variables.
pub fn monic_in_t_witness(gb: &GroebnerBasis) -> Option<MPoly> {
    if gb.order() != MonomialOrder::Lex {
        return None;
    }
    gb.basis()
        .iter()
        .filter(|g| {
            let (e, _) = leading(g, MonomialOrder::Lex);
            e[Var::T.index()] > 0 && e[Var::S.index()] == 0 && e[Var::X.index()] == 0 && e[Var::Y.index()] == 0
        })
        .min_by_key(|g| g.degree_in(Var::T))
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::mpoly::{c, s, t, x, y};

    fn ideal(g: Vec<MPoly>) -> PolyIdeal {
        PolyIdeal::new(g).unwrap()
    }

    fn cusp_graph() -> PolyIdeal {
        saturate(&ideal(vec![y().pow(2).sub(&x().pow(3)), x().mul(&t()).sub(&y())]), &x()).unwrap()
    }

    #[test]
    fn cusp_saturation() {
        let j = cusp_graph();
        let gb = j.groebner(MonomialOrder::Lex);
        for g in [t().pow(2).sub(&x()), t().mul(&y()).sub(&x().pow(2)), x().mul(&t()).sub(&y()), y().pow(2).sub(&x().pow(3))] {
            assert!(gb.contains(&g), "{g}");
        }
        assert!(gb.basis().contains(&t().pow(2).sub(&x())));
        assert_eq!(monic_in_t_witness(&gb), Some(t().pow(2).sub(&x())));
        let e = eliminate(&gb, &[Var::X, Var::Y]).unwrap();
        assert_eq!(e.generators(), &[x().pow(3).sub(&y().pow(2))]);
    }

    #[test]
    fn simple_saturations() {
        let j = saturate(&ideal(vec![x().mul(&y())]), &x()).unwrap();
        assert!(j.same_as(&ideal(vec![y()])));
        let j = saturate(&ideal(vec![y()]), &x()).unwrap();
        assert!(j.same_as(&ideal(vec![y()])));
    }

    #[test]
    fn no_monic_witness_for_inverse() {
        let j = saturate(&ideal(vec![y(), x().mul(&t()).sub(&c(1))]), &x()).unwrap();
        assert_eq!(monic_in_t_witness(&j.groebner(MonomialOrder::Lex)), None);
    }

    #[test]
    fn eliminations() {
        let gb = buchberger(&[t().sub(&x().pow(2)), t().sub(&y())], MonomialOrder::Lex);
        let e = eliminate(&gb, &[Var::X, Var::Y]).unwrap();
        assert!(e.same_as(&ideal(vec![y().sub(&x().pow(2))])));
        let gb = buchberger(&[s().mul(&x()).sub(&c(1)), y()], MonomialOrder::Lex);
        let e = eliminate(&gb, &[Var::T, Var::X, Var::Y]).unwrap();
        assert!(e.same_as(&ideal(vec![y()])));
        let gb = buchberger(&[x(), y()], MonomialOrder::GrevLex);
        assert!(matches!(eliminate(&gb, &[Var::Y]), Err(Error::OrderMismatch)));
        assert!(matches!(eliminate(&gb, &[Var::X]), Err(Error::OrderMismatch)));
    }
}
