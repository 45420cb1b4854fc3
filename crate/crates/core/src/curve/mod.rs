//! Plane curves `F(x, y) = 0` over the rationals: validation, a realness
//! semi-decision, singular and bad loci as triangular systems, and fibre
//! checks for parametrisations.

mod locus;
mod morphism;
mod realness;

pub use locus::{bad_locus, BadPoint};
pub use morphism::{fiber_constancy_check, W_NAMES, FiberCheck, FiberWitness, PresentedMorphism};
pub use realness::{certify_realness, PieceRealness, Realness};

use crate::arith::bivariate::BiPoly;
use crate::arith::qpoly;
use crate::error::{Error, Result};
use crate::groebner::{MPoly, Var};
use std::sync::OnceLock;

/// A validated squarefree plane curve.
#[derive(Debug)]
pub struct PlaneCurve {
    f: MPoly,
    bi: BiPoly,
    singular: OnceLock<Result<Vec<BadPoint>>>,
}

impl Clone for PlaneCurve {
    fn clone(&self) -> Self {
        let singular = OnceLock::new();
        if let Some(v) = self.singular.get() {
            let _ = singular.set(v.clone());
        }
        PlaneCurve { f: self.f.clone(), bi: self.bi.clone(), singular }
    }
}

pub fn make_curve(f: &MPoly) -> Result<PlaneCurve> {
    if f.involves(Var::S) || f.involves(Var::T) {
        return Err(Error::Precondition("a curve equation may only use x and y".into()));
    }
    if f.is_constant() {
        return Err(Error::Degenerate("curve equation is constant".into()));
    }
    let bi = f.to_bipoly().unwrap();
    let content = bi.content();
    if !qpoly::is_squarefree(&content) {
        let rep = qpoly::squarefree(&qpoly::gcd(&content, &content.derivative()));
        return Err(Error::NotSquarefree { witness: MPoly::from_upoly(&rep, Var::X).primitive().to_string() });
    }
    let prim = bi.primitive();
    if prim.deg_y().unwrap_or(0) > 0 {
        let g = prim.gcd(&prim.d_dy());
        if g.deg_y().unwrap_or(0) > 0 {
            return Err(Error::NotSquarefree { witness: MPoly::from_bipoly(&g).primitive().to_string() });
        }
    }
    Ok(PlaneCurve { f: f.clone(), bi, singular: OnceLock::new() })
}

impl PlaneCurve {
    pub fn poly(&self) -> &MPoly {
        &self.f
    }

    pub fn bipoly(&self) -> &BiPoly {
        &self.bi
    }

    /// Points where `F`, `F_x` and `F_y` vanish, computed once.
    pub fn singular_locus(&self) -> Result<&[BadPoint]> {
        self.singular
            .get_or_init(|| locus::singular_locus(&self.bi))
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(|e| e.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn curve(s: &str) -> Result<PlaneCurve> {
        make_curve(&parse_poly(s).unwrap())
    }

    #[test]
    fn validation() {
        assert!(curve("y^2 - x^3").is_ok());
        assert!(curve("y^4 - x*(x^2+y^2)").is_ok());
        match curve("(y - x)^2") {
            Err(Error::NotSquarefree { witness }) => assert_eq!(parse_poly(&witness).unwrap(), parse_poly("x - y").unwrap()),
            other => panic!("{other:?}"),
        }
        match curve("x^2*(y - 1)") {
            Err(Error::NotSquarefree { witness }) => assert_eq!(witness, "x"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(curve("3"), Err(Error::Degenerate(_))));
        assert!(matches!(curve("0"), Err(Error::Degenerate(_))));
    }
}
