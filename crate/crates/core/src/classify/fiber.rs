//! Fibres of the graph closure over the bad points.
//!
//! Over a point of the curve the ideal `J` specialises to a principal ideal
//! of `K[t]`; its generator is the gcd of the specialised basis elements.
//! The computation runs once per class with dynamic evaluation; counts at a
//! real point are then read at the corresponding embedding.

use super::function::{value_text, CurveFunction};
use crate::arith::rational::{fmt_q, mid, to_f64, Q};
use crate::arith::roots::{isolate_real_roots, rational_roots, refine, Refined};
use crate::arith::tower::{split_eval, Cursor, Embedding, NfElem, NumberField};
use crate::arith::upoly::UPoly;
use crate::arith::FieldElem;
use crate::curve::BadPoint;
use crate::error::Result;
use crate::groebner::{MPoly, Var};
use std::cmp::Ordering;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct FiberReport {
    /// Index of the bad-point class.
    pub class: usize,
    /// Index into the real points for a real point, `None` for a class of
    /// non-real points.
    pub real_index: Option<usize>,
    pub point: String,
    pub real: bool,
    /// Generator of the fibre ideal in `t`; coefficients are written in the
    /// point's coordinates.
    pub fiber_poly: String,
    /// `None` when the fibre is the whole line.
    pub distinct_complex: Option<usize>,
    pub distinct_real: Option<usize>,
    pub singleton: Option<NfElem>,
    pub singleton_text: Option<String>,
    pub assigned: Option<String>,
    pub matches: Option<bool>,
    /// Whether the assigned value is a root of the fibre.
    pub assigned_is_root: Option<bool>,
    pub real_roots: Vec<String>,
    pub rational_real_roots: Vec<Q>,
}

fn poly_text(p: &UPoly<NfElem>) -> String {
    let mut acc = MPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        acc = acc.add(&MPoly::from_nf(c, [Var::X, Var::Y]).mul(&MPoly::var(Var::T).pow(k as u32)));
    }
    acc.to_string()
}

fn embedding_key(k: &NumberField, emb: usize) -> (Q, Q, Q, Q) {
    let e: &Embedding = &k.embeddings()[emb];
    let p = &k.base().unwrap().embeddings()[e.parent.unwrap()];
    (p.lo.clone(), p.hi.clone(), e.lo.clone(), e.hi.clone())
}

/// Real roots of the specialisation of a squarefree `sq`, as exact
/// rationals where possible and decimals otherwise.
fn describe_real_roots(sq: &UPoly<NfElem>, cur: &mut Cursor) -> (Vec<String>, Vec<Q>) {
    if let Ok(sq_q) = sq.try_map(|c| c.as_rational().cloned().ok_or(())) {
        let rats = rational_roots(&sq_q);
        let w = Q::new(1.into(), (1u64 << 30).into());
        let mut items: Vec<(f64, String)> = Vec::new();
        for iv in isolate_real_roots(&sq_q) {
            if let Some(r) = rats.iter().find(|r| iv.contains(r)) {
                items.push((to_f64(r), fmt_q(r)));
                continue;
            }
            let v = match refine(&sq_q, &iv, &w) {
                Refined::Exact(r) => to_f64(&r),
                Refined::Interval(i) => to_f64(&i.mid()),
            };
            items.push((v, format!("{v:.6}")));
        }
        items.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        return (items.into_iter().map(|(_, s)| s).collect(), rats);
    }
    let mut out = Vec::new();
    for (mut lo, mut hi) in cur.isolate(sq) {
        let s_lo = cur.sign(&sq.eval(&NfElem::Rat(lo.clone())));
        for _ in 0..30 {
            let m = mid(&lo, &hi);
            let s = cur.sign(&sq.eval(&NfElem::Rat(m.clone())));
            if s == Ordering::Equal {
                lo = m.clone();
                hi = m;
                break;
            }
            if s == s_lo {
                lo = m;
            } else {
                hi = m;
            }
        }
        out.push(format!("{:.6}", to_f64(&mid(&lo, &hi))));
    }
    (out, Vec::new())
}

type FiberData = Option<(UPoly<NfElem>, UPoly<NfElem>)>;

/// Fibre generator and its squarefree part on each branch of a class.
pub(crate) fn class_fibers(basis: &[MPoly], field: &Arc<NumberField>) -> Result<Vec<(Arc<NumberField>, FiberData)>> {
    Ok(split_eval(field, |k| {
        let g = k.gens();
        let vals = [(Var::X, g[0].clone()), (Var::Y, g[1].clone())];
        let ps: Vec<UPoly<NfElem>> = basis.iter().map(|b| b.specialize(Var::T, &vals)).collect();
        match UPoly::gcd_all(ps.iter())? {
            None => Ok(None),
            Some(fib) => {
                let sq = fib.squarefree_part()?;
                Ok(Some((fib, sq)))
            }
        }
    })?)
}

pub(crate) fn compute_fibers(f: &CurveFunction) -> Result<Vec<FiberReport>> {
    // any generating set of J specialises to generators of the fibre; the
    // saturation output is far smaller than the lex basis
    let mut basis: Vec<MPoly> = f.graph().ideal().generators().iter().filter(|g| g.involves(Var::T)).cloned().collect();
    basis.sort_by_key(|g| (g.degree_in(Var::T), g.terms().len()));
    let mut real_reports: Vec<Option<FiberReport>> = vec![None; f.real_points().len()];
    let mut other = Vec::new();
    for (ci, bp) in f.bad_points().iter().enumerate() {
        let keys: Vec<_> = (0..bp.real_count()).map(|e| embedding_key(bp.field(), e)).collect();
        for (k, data) in class_fibers(&basis, bp.field())? {
            let (text, distinct) = match &data {
                None => ("0".to_string(), None),
                Some((fib, sq)) => (poly_text(fib), Some(sq.degree().unwrap_or(0))),
            };
            let singleton = match &data {
                Some((_, sq)) if sq.degree() == Some(1) => Some(sq.coeffs()[0].fneg()),
                _ => None,
            };
            for emb in 0..k.embeddings().len() {
                let key = embedding_key(&k, emb);
                let orig = keys.iter().position(|x| *x == key).expect("branch embedding comes from the class");
                let ri = f.real_points().iter().position(|rp| rp.class == ci && rp.emb == orig).unwrap();
                let value = k.import(&f.values()[ri]);
                let mut cur = Cursor::new(&k, emb);
                let mut rep = FiberReport {
                    class: ci,
                    real_index: Some(ri),
                    point: f.real_points()[ri].label(),
                    real: true,
                    fiber_poly: text.clone(),
                    distinct_complex: distinct,
                    distinct_real: None,
                    singleton: singleton.clone(),
                    singleton_text: None,
                    assigned: Some(f.value_label(ri)),
                    matches: None,
                    assigned_is_root: None,
                    real_roots: Vec::new(),
                    rational_real_roots: Vec::new(),
                };
                if let Some((_, sq)) = &data {
                    rep.distinct_real = Some(cur.count_real_roots(sq, None, None));
                    rep.assigned_is_root = Some(cur.sign(&sq.eval(&value)) == Ordering::Equal);
                    let (texts, rats) = describe_real_roots(sq, &mut cur);
                    rep.real_roots = texts;
                    rep.rational_real_roots = rats;
                }
                if let Some(s) = &singleton {
                    rep.singleton_text = Some(value_text(s));
                    rep.matches = Some(cur.sign(&s.fsub(&value)) == Ordering::Equal);
                }
                real_reports[ri] = Some(rep);
            }
            if k.total_degree() > k.embeddings().len() {
                other.push(FiberReport {
                    class: ci,
                    real_index: None,
                    point: BadPoint::new(k.clone()).label(),
                    real: false,
                    fiber_poly: text,
                    distinct_complex: distinct,
                    distinct_real: None,
                    singleton_text: singleton.as_ref().map(value_text),
                    singleton,
                    assigned: None,
                    matches: None,
                    assigned_is_root: None,
                    real_roots: Vec::new(),
                    rational_real_roots: Vec::new(),
                });
            }
        }
    }
    let mut out: Vec<FiberReport> = real_reports.into_iter().map(|r| r.expect("every real point reported")).collect();
    out.extend(other);
    Ok(out)
}
