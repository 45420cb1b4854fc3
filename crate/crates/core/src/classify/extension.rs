//! The ring `Q[x, y, t] / J` obtained by adjoining the function, and the
//! fibre conditions on the morphism back to the curve.

use super::fiber::{class_fibers, FiberReport};
use super::function::CurveFunction;
use super::verdict::Witness;
use crate::arith::tower::{Cursor, NfElem};
use crate::arith::upoly::UPoly;
use crate::error::{Error, Result};
use crate::groebner::{eliminate, MPoly, PolyIdeal, Var};
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct Presentation {
    /// Reduced lex basis of `J`, `t > x > y`.
    pub relations: Vec<MPoly>,
    /// Finiteness: a relation monic in `t`.
    pub integral_relation: MPoly,
    /// `J ∩ Q[x, y]`; equal to `<F>` for a birational extension.
    pub elimination: Vec<MPoly>,
    pub birational: bool,
    pub fibers: Vec<FiberReport>,
}

pub fn present_extension(f: &CurveFunction) -> Result<Presentation> {
    let g = f.graph();
    let relation = g.integral_relation().cloned().ok_or(Error::NotIntegral)?;
    let elim = eliminate(g.lex_basis(), &[Var::X, Var::Y])?;
    let curve = PolyIdeal::new(vec![f.curve().poly().clone()])?;
    Ok(Presentation {
        relations: g.lex_basis().basis().to_vec(),
        integral_relation: relation,
        birational: elim.same_as(&curve),
        elimination: elim.generators().to_vec(),
        fibers: f.fibers()?.to_vec(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Subintegrality {
    /// One point over each real point of the curve.
    pub r_subintegral: bool,
    /// One point over every point of the curve.
    pub subintegral: bool,
    pub witnesses: Vec<Witness>,
}

/// Checks the fibres of `Y -> X` along a second route: the grevlex basis
/// produced by saturation, specialised pointwise at each real embedding
/// instead of per class. The assigned value counts as a point of the fibre.
pub fn verify_r_subintegral(f: &CurveFunction) -> Result<Subintegrality> {
    if f.graph().integral_relation().is_none() {
        return Err(Error::NotIntegral);
    }
    let basis = f.graph().ideal().generators().to_vec();
    let mut witnesses = Vec::new();
    let mut r_ok = true;
    for (i, rp) in f.real_points().iter().enumerate() {
        let bp = &f.bad_points()[rp.class];
        let (x, y) = bp.coords();
        let vals = [(Var::X, x), (Var::Y, y)];
        let mut cur = Cursor::new(bp.field(), rp.emb);
        let mut g = UPoly::<NfElem>::zero();
        for b in &basis {
            g = cur.gcd(&g, &b.specialize(Var::T, &vals));
        }
        let distinct = cur.distinct_complex(&g);
        let value = &f.values()[i];
        let at_value = cur.trim(&g).eval(value);
        let value_on_fibre = cur.sign(&at_value) == Ordering::Equal;
        if distinct != 1 || !value_on_fibre {
            r_ok = false;
            let detail = if distinct == 1 {
                format!("assigned value {} is not the fibre point", f.value_label(i))
            } else {
                format!("{distinct} complex points over it")
            };
            witnesses.push(Witness { point: rp.label(), detail });
        }
    }
    let mut all_ok = r_ok;
    for bp in f.bad_points() {
        for (k, data) in class_fibers(&basis, bp.field())? {
            if k.total_degree() == k.embeddings().len() {
                continue;
            }
            let n = data.as_ref().map(|(_, sq)| sq.degree().unwrap_or(0));
            if n != Some(1) {
                all_ok = false;
                let label = crate::curve::BadPoint::new(k.clone()).label();
                let detail = n.map_or("a whole line over it".into(), |n| format!("{n} complex points over it"));
                witnesses.push(Witness { point: label, detail });
            }
        }
    }
    Ok(Subintegrality { r_subintegral: r_ok, subintegral: all_ok, witnesses })
}
