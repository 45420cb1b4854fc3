//! Rational functions `p/q` on a curve with values assigned at the real
//! points where `q` vanishes.

use super::fiber::{compute_fibers, FiberReport};
use super::graph::{build_graph, GraphIdeal};
use crate::arith::rational::{fmt_q, Q};
use crate::arith::tower::{Cursor, NfElem};
use crate::arith::FieldElem;
use crate::curve::{bad_locus, BadPoint, PlaneCurve};
use crate::error::{Error, Result};
use crate::groebner::{MPoly, Var};
use std::sync::{Arc, OnceLock};

/// Where an assigned value lives: exact rational coordinates, or an index
/// into [`CurveFunction::real_points`] (needed for irrational points).
#[derive(Clone, Debug, PartialEq)]
pub enum Locator {
    Coords(Q, Q),
    Index(usize),
}

/// A value given as a polynomial in the point's coordinates; at a real
/// point this is a real algebraic number.
#[derive(Clone, Debug, PartialEq)]
pub struct Assignment {
    pub at: Locator,
    pub value: MPoly,
}

impl Assignment {
    pub fn at_origin(value: i64) -> Self {
        Assignment { at: Locator::Coords(Q::from_integer(0.into()), Q::from_integer(0.into())), value: MPoly::constant(Q::from_integer(value.into())) }
    }
}

/// One real point of the bad locus: embedding `emb` of class `class`.
#[derive(Clone, Debug)]
pub struct RealPoint {
    pub class: usize,
    pub emb: usize,
    pub approx: (f64, f64),
    pub exact: Option<(Q, Q)>,
}

impl RealPoint {
    pub fn label(&self) -> String {
        match &self.exact {
            Some((a, b)) => format!("({}, {})", fmt_q(a), fmt_q(b)),
            None => format!("({:.6}, {:.6})", self.approx.0, self.approx.1),
        }
    }
}

#[derive(Debug)]
struct Inner {
    curve: PlaneCurve,
    p: MPoly,
    q: MPoly,
    bad: Vec<BadPoint>,
    real_points: Vec<RealPoint>,
    values: Vec<NfElem>,
    graph: OnceLock<GraphIdeal>,
    fibers: OnceLock<Result<Vec<FiberReport>>>,
}

/// A validated function; cheap to clone, caches its graph ideal and fibres.
#[derive(Clone, Debug)]
pub struct CurveFunction(Arc<Inner>);

fn check_xy(p: &MPoly, what: &str) -> Result<()> {
    if p.involves(Var::S) || p.involves(Var::T) {
        return Err(Error::Precondition(format!("{what} may only use x and y")));
    }
    Ok(())
}

fn real_points(bad: &[BadPoint]) -> Vec<RealPoint> {
    let mut out = Vec::new();
    for (class, bp) in bad.iter().enumerate() {
        for emb in 0..bp.real_count() {
            out.push(RealPoint { class, emb, approx: bp.approx(emb), exact: bp.rational_point() });
        }
    }
    out.sort_by(|a, b| a.approx.partial_cmp(&b.approx).unwrap().then((a.class, a.emb).cmp(&(b.class, b.emb))));
    out
}

/// Index of the real point at rational coordinates `(a, b)`, if any.
fn find_rational(points: &[RealPoint], bad: &[BadPoint], a: &Q, b: &Q) -> Option<usize> {
    points.iter().position(|rp| {
        let bp = &bad[rp.class];
        if let Some((x, y)) = &rp.exact {
            return x == a && y == b;
        }
        let (x, y) = bp.coords();
        let mut cur = Cursor::new(bp.field(), rp.emb);
        let dx = x.fsub(&NfElem::Rat(a.clone()));
        let dy = y.fsub(&NfElem::Rat(b.clone()));
        cur.sign(&dx).is_eq() && cur.sign(&dy).is_eq()
    })
}

/// Validates `p/q` on the curve with the given values.
pub fn make_function(curve: &PlaneCurve, p: &MPoly, q: &MPoly, assignments: &[Assignment]) -> Result<CurveFunction> {
    Ok(assign(unassigned(curve, p, q)?, assignments, false)?.0)
}

/// Like [`make_function`], but real points without a value get the one from
/// [`suggest_assignments`]; their indices are returned.
pub fn make_function_filling(curve: &PlaneCurve, p: &MPoly, q: &MPoly, assignments: &[Assignment]) -> Result<(CurveFunction, Vec<usize>)> {
    assign(unassigned(curve, p, q)?, assignments, true)
}

fn assign(f: CurveFunction, assignments: &[Assignment], fill: bool) -> Result<(CurveFunction, Vec<usize>)> {
    let inner = &f.0;
    let mut values: Vec<Option<NfElem>> = vec![None; inner.real_points.len()];
    for a in assignments {
        check_xy(&a.value, "an assigned value").map_err(|_| Error::InvalidAssignment("values are polynomials in x and y".into()))?;
        let idx = match &a.at {
            Locator::Index(i) => {
                if *i >= inner.real_points.len() {
                    return Err(Error::ExtraAssignment(format!("no real bad point with index {i}")));
                }
                *i
            }
            Locator::Coords(x, y) => find_rational(&inner.real_points, &inner.bad, x, y)
                .ok_or_else(|| Error::ExtraAssignment(format!("({}, {})", fmt_q(x), fmt_q(y))))?,
        };
        if values[idx].is_some() {
            return Err(Error::InvalidAssignment(format!("two values at {}", inner.real_points[idx].label())));
        }
        let bp = &inner.bad[inner.real_points[idx].class];
        let (x, y) = bp.coords();
        values[idx] = Some(a.value.eval_nf(&[(Var::X, x), (Var::Y, y)]));
    }
    let mut filled = Vec::new();
    if fill && values.iter().any(Option::is_none) {
        for (i, a) in suggestions(&f)?.into_iter().enumerate() {
            if values[i].is_none() {
                let bp = &inner.bad[inner.real_points[i].class];
                let (x, y) = bp.coords();
                values[i] = Some(a.value.eval_nf(&[(Var::X, x), (Var::Y, y)]));
                filled.push(i);
            }
        }
    }
    let mut resolved = Vec::with_capacity(values.len());
    for (i, v) in values.into_iter().enumerate() {
        resolved.push(v.ok_or_else(|| Error::MissingAssignment(inner.real_points[i].label()))?);
    }
    let inner = Inner {
        curve: inner.curve.clone(),
        p: inner.p.clone(),
        q: inner.q.clone(),
        bad: inner.bad.clone(),
        real_points: inner.real_points.clone(),
        values: resolved,
        graph: OnceLock::new(),
        fibers: OnceLock::new(),
    };
    if let Some(g) = f.0.graph.get() {
        let _ = inner.graph.set(g.clone());
    }
    Ok((CurveFunction(Arc::new(inner)), filled))
}

/// The function with placeholder zero values, for inspecting fibres before
/// values are chosen.
fn unassigned(curve: &PlaneCurve, p: &MPoly, q: &MPoly) -> Result<CurveFunction> {
    check_xy(p, "a numerator")?;
    check_xy(q, "a denominator")?;
    let bad = bad_locus(curve, q)?;
    let real_points = real_points(&bad);
    let values = vec![NfElem::Rat(Q::from_integer(0.into())); real_points.len()];
    Ok(CurveFunction(Arc::new(Inner {
        curve: curve.clone(),
        p: p.clone(),
        q: q.clone(),
        bad,
        real_points,
        values,
        graph: OnceLock::new(),
        fibers: OnceLock::new(),
    })))
}

/// Values making `p/q` as well-behaved as the fibres allow: the singleton
/// fibre value where there is one, else the unique real fibre root when it
/// is rational, else 0.
pub fn suggest_assignments(curve: &PlaneCurve, p: &MPoly, q: &MPoly) -> Result<Vec<Assignment>> {
    suggestions(&unassigned(curve, p, q)?)
}

fn suggestions(f: &CurveFunction) -> Result<Vec<Assignment>> {
    let fibers = f.fibers()?;
    let mut out = Vec::new();
    for (i, _) in f.real_points().iter().enumerate() {
        let rep = fibers.iter().find(|r| r.real_index == Some(i)).expect("a report per real point");
        let value = match (&rep.singleton, &rep.rational_real_roots[..]) {
            (Some(v), _) => MPoly::from_nf(v, [Var::X, Var::Y]),
            (None, [r]) if rep.distinct_real == Some(1) => MPoly::constant(r.clone()),
            _ => MPoly::zero(),
        };
        out.push(Assignment { at: Locator::Index(i), value });
    }
    Ok(out)
}

impl CurveFunction {
    pub fn curve(&self) -> &PlaneCurve {
        &self.0.curve
    }

    pub fn p(&self) -> &MPoly {
        &self.0.p
    }

    pub fn q(&self) -> &MPoly {
        &self.0.q
    }

    /// Classes of points where `q` vanishes on the curve.
    pub fn bad_points(&self) -> &[BadPoint] {
        &self.0.bad
    }

    /// Real bad points in ascending coordinate order.
    pub fn real_points(&self) -> &[RealPoint] {
        &self.0.real_points
    }

    /// Assigned value at each real point, as an element of its tower.
    pub fn values(&self) -> &[NfElem] {
        &self.0.values
    }

    /// Text of the value assigned at real point `i`.
    pub fn value_label(&self, i: usize) -> String {
        value_text(&self.0.values[i])
    }

    pub fn graph(&self) -> &GraphIdeal {
        self.0.graph.get_or_init(|| build_graph(&self.0.curve, &self.0.p, &self.0.q))
    }

    /// One report per real bad point (in order), then one per class of
    /// non-real points.
    pub fn fibers(&self) -> Result<&[FiberReport]> {
        self.0.fibers.get_or_init(|| compute_fibers(self)).as_ref().map(|v| v.as_slice()).map_err(|e| e.clone())
    }

    /// The same function with `(p, q)` replaced; values are kept.
    pub fn with_representative(&self, p: &MPoly, q: &MPoly) -> Result<CurveFunction> {
        let assignments: Vec<Assignment> = (0..self.0.real_points.len())
            .map(|i| Assignment { at: Locator::Index(i), value: MPoly::from_nf(&self.0.values[i], [Var::X, Var::Y]) })
            .collect();
        make_function(&self.0.curve, p, q, &assignments)
    }
}

/// A tower element as text: a rational, or a polynomial in the coordinates.
pub(crate) fn value_text(e: &NfElem) -> String {
    match e.as_rational() {
        Some(c) => fmt_q(c),
        None => MPoly::from_nf(e, [Var::X, Var::Y]).to_string(),
    }
}
