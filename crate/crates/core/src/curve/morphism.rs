//! Polynomial parametrisations `w -> (u(w), v(w))` of a curve and the check
//! that a function of `w` is constant on the fibres over real points.
//!
//! Points with more than one preimage are found from the divided
//! differences `(u(s) - u(t)) / (s - t)` and `(v(s) - v(t)) / (s - t)`: their
//! resultant in `s` vanishes at every parameter sharing its image with
//! another one (and at the critical parameters, whose fibres are checked
//! and dropped if they turn out to be singletons).

use super::locus::decompose;
use super::PlaneCurve;
use crate::arith::bivariate::{resultant_y, BiPoly};
use crate::arith::rational::{fmt_q, Q};
use crate::arith::roots::rational_roots;
use crate::arith::tower::{split_eval, Cursor, NfElem};
use crate::arith::upoly::UPoly;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, eliminate, monic_in_t_witness, MPoly, MonomialOrder, Var};
use std::cmp::Ordering;

/// Names used when printing polynomials in the parameter.
pub const W_NAMES: [&str; 4] = ["s", "w", "x", "y"];

#[derive(Clone, Debug)]
pub struct PresentedMorphism {
    u: UPoly<Q>,
    v: UPoly<Q>,
    target: PlaneCurve,
}

impl PresentedMorphism {
    /// Checks that `F(u(w), v(w))` vanishes identically.
    pub fn new(u: UPoly<Q>, v: UPoly<Q>, target: &PlaneCurve) -> Result<Self> {
        let (um, vm) = (MPoly::from_upoly(&u, Var::T), MPoly::from_upoly(&v, Var::T));
        if !target.poly().subst(Var::X, &um).subst(Var::Y, &vm).is_zero() {
            return Err(Error::NotOnCurve);
        }
        Ok(PresentedMorphism { u, v, target: target.clone() })
    }

    /// From polynomials in the parameter, written with the variable `t`.
    pub fn from_polys(u: &MPoly, v: &MPoly, target: &PlaneCurve) -> Result<Self> {
        let conv = |p: &MPoly| {
            p.to_upoly(Var::T)
                .ok_or_else(|| Error::Precondition("a parametrisation may only use its parameter".into()))
        };
        Self::new(conv(u)?, conv(v)?, target)
    }

    pub fn target(&self) -> &PlaneCurve {
        &self.target
    }

    pub fn u(&self) -> &UPoly<Q> {
        &self.u
    }

    pub fn v(&self) -> &UPoly<Q> {
        &self.v
    }

    fn map_ideal(&self) -> Vec<MPoly> {
        vec![
            MPoly::var(Var::X).sub(&MPoly::from_upoly(&self.u, Var::T)),
            MPoly::var(Var::Y).sub(&MPoly::from_upoly(&self.v, Var::T)),
        ]
    }
}

/// A target point with several preimages.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberWitness {
    pub point: String,
    pub real: bool,
    /// Squarefree polynomial in `w` whose roots form the fibre.
    pub fiber: String,
    pub distinct: usize,
    pub constant: bool,
    /// Values of the function at rational fibre points, as `w -> value`.
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberCheck {
    pub constant_on_real_fibers: bool,
    pub fibers: Vec<FiberWitness>,
}

/// `(a(s) - a(t)) / (s - t)` with `t` in the `x` slot and `s` in the `y` slot.
fn divided_difference(a: &UPoly<Q>) -> BiPoly {
    let mut terms = Vec::new();
    for (k, c) in a.coeffs().iter().enumerate().skip(1) {
        for i in 0..k {
            terms.push((c.clone(), (k - 1 - i) as u32, i as u32));
        }
    }
    BiPoly::from_terms(terms.iter().map(|(c, a, b)| (c, *a, *b)))
}

fn lift(p: &UPoly<Q>) -> UPoly<NfElem> {
    p.map(|c| NfElem::Rat(c.clone()))
}

fn nf_poly_text(p: &UPoly<NfElem>) -> String {
    let mut acc = MPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        acc = acc.add(&MPoly::from_nf(c, [Var::X, Var::Y]).mul(&MPoly::var(Var::T).pow(k as u32)));
    }
    acc.display_with(W_NAMES)
}

pub fn fiber_constancy_check(m: &PresentedMorphism, p: &UPoly<Q>) -> Result<FiberCheck> {
    let gb = buchberger(&m.map_ideal(), MonomialOrder::Lex);
    if monic_in_t_witness(&gb).is_none() {
        return Err(Error::NotFinite);
    }
    let (du, dv) = (divided_difference(&m.u), divided_difference(&m.v));
    let injective = FiberCheck { constant_on_real_fibers: true, fibers: Vec::new() };
    let r = match (du.deg_y(), dv.deg_y()) {
        // a linear coordinate separates all parameters
        (Some(0), _) | (_, Some(0)) => return Ok(injective),
        (None, None) => return Err(Error::NotFinite),
        (None, Some(d)) | (Some(d), None) => return Err(Error::NotBirational(d + 1)),
        _ => resultant_y(&du, &dv),
    };
    if r.is_zero() {
        let g = du.gcd(&dv);
        return Err(Error::NotBirational(g.deg_y().unwrap_or(0) + 1));
    }
    if r.degree() == Some(0) {
        return Ok(injective);
    }

    // image of the roots of r, as an ideal in x and y
    let rt = MPoly::from_upoly(&r, Var::T);
    let mut gens = m.map_ideal();
    gens.push(rt);
    let img = eliminate(&buchberger(&gens, MonomialOrder::Lex), &[Var::X, Var::Y])?;
    let sys: Vec<BiPoly> = img.generators().iter().map(|g| g.to_bipoly().unwrap()).collect();
    let r_as_t = BiPoly::new(r.coeffs().iter().map(|c| UPoly::constant(c.clone())).collect());
    let x_minus_u = BiPoly::new(
        m.u.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k == 0 { UPoly::new(vec![-c.clone(), Q::from_integer(1.into())]) } else { UPoly::constant(-c.clone()) })
            .collect(),
    );
    let rx = resultant_y(&x_minus_u, &r_as_t);
    let points = decompose(&sys, &rx)?;

    let (ul, vl, pl) = (lift(&m.u), lift(&m.v), lift(p));
    let mut fibers = Vec::new();
    for bp in &points {
        let branches = split_eval(bp.field(), |k| {
            let g = k.gens();
            let a = ul.fsub(&UPoly::constant(g[0].clone()));
            let b = vl.fsub(&UPoly::constant(g[1].clone()));
            let fib = a.gcd(&b)?.squarefree_part()?;
            let rem = pl.rem(&fib)?;
            Ok((fib, rem))
        })?;
        for (k, (fib, rem)) in branches {
            let distinct = fib.degree().unwrap_or(0);
            if distinct < 2 {
                continue;
            }
            let text = nf_poly_text(&fib);
            for emb in 0..k.embeddings().len() {
                let mut cur = Cursor::new(&k, emb);
                let constant = rem.coeffs().iter().skip(1).all(|c| cur.sign(c) == Ordering::Equal);
                let point = match bp.rational_point() {
                    Some((a, b)) => format!("({}, {})", fmt_q(&a), fmt_q(&b)),
                    None => {
                        let (a, b) = bp.approx(0);
                        format!("({a:.6}, {b:.6}) on {}", bp.label())
                    }
                };
                let values = rational_values(&fib, p);
                fibers.push(FiberWitness { point, real: true, fiber: text.clone(), distinct, constant, values });
            }
            if k.total_degree() > k.embeddings().len() {
                fibers.push(FiberWitness {
                    point: bp.label(),
                    real: false,
                    fiber: text,
                    distinct,
                    constant: rem.degree().unwrap_or(0) == 0,
                    values: Vec::new(),
                });
            }
        }
    }
    let constant_on_real_fibers = fibers.iter().all(|f| !f.real || f.constant);
    Ok(FiberCheck { constant_on_real_fibers, fibers })
}

/// `w -> p(w)` for the rational roots of a fibre polynomial with rational
/// coefficients.
fn rational_values(fib: &UPoly<NfElem>, p: &UPoly<Q>) -> Vec<String> {
    let Ok(fq) = fib.try_map(|c| c.as_rational().cloned().ok_or(())) else {
        return Vec::new();
    };
    rational_roots(&fq)
        .iter()
        .map(|w| format!("{} -> {}", fmt_q(w), fmt_q(&p.eval(w))))
        .collect()
}
