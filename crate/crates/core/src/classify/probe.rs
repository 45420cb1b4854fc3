//! Numeric falsifier for continuity at a real bad point: walks real curve
//! points toward the point and watches `p/q` in interval arithmetic.
//!
//! Branches are sampled on the verticals `x = a ± δ_k` among the real roots
//! of `F(a ± δ_k, y)` within `δ_k^(1/deg F)` of `b`; each root is refined to
//! width `δ_k^2`. A branch is flagged when at the last step its enclosure
//! sits further from the assigned value than its own width and that gap did
//! not shrink by the factor expected from a Puiseux branch.

use super::function::CurveFunction;
use crate::arith::interval::Interval;
use crate::arith::rational::{from_f64, to_f64, Q};
use crate::arith::roots::{isolate_real_roots, refine, Refined};
use crate::arith::tower::Cursor;
use crate::groebner::MPoly;
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct ProbeSchedule {
    pub initial_radius: Q,
    pub shrink: Q,
    pub steps: usize,
}

impl Default for ProbeSchedule {
    fn default() -> Self {
        ProbeSchedule { initial_radius: Q::new(1.into(), 10.into()), shrink: Q::new(1.into(), 10.into()), steps: 6 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeSample {
    pub x: f64,
    pub y: f64,
    pub value: f64,
    pub expected: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ProbeOutcome {
    /// Every sampled branch approaches the assigned value.
    Consistent { branches: usize },
    Violated(ProbeSample),
    /// No real curve points were found near the point.
    Inconclusive,
}

fn eval_interval(p: &MPoly, x: &Q, y: &Interval) -> Interval {
    let mut acc = Interval::point(Q::zero());
    for (e, c) in p.terms() {
        let mut term = Interval::point(c * num_traits::pow(x.clone(), e[2] as usize));
        for _ in 0..e[3] {
            term = term.mul(y);
        }
        acc = acc.add(&term);
    }
    acc
}

struct Sample {
    y: Interval,
    value: Interval,
}

/// Curve points on the vertical `x = x0` near `b`, with enclosures of `p/q`.
fn samples_at(f: &CurveFunction, x0: &Q, b: &Interval, radius: &Q, width: &Q) -> Vec<Sample> {
    let g = f.curve().bipoly().eval_x(x0);
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for iv in isolate_real_roots(&g) {
        let mut y = match refine(&g, &iv, width) {
            Refined::Exact(r) => Interval::point(r),
            Refined::Interval(i) => Interval::new(i.low, i.high),
        };
        if y.gap(b) > *radius {
            continue;
        }
        let mut qv = eval_interval(f.q(), x0, &y);
        let mut tries = 0;
        while qv.contains_zero() && tries < 40 && !y.is_point() {
            let w = y.width() / Q::from_integer(4.into());
            y = match refine(&g, &crate::arith::roots::IsolatingInterval { low: y.lo.clone(), high: y.hi.clone() }, &w) {
                Refined::Exact(r) => Interval::point(r),
                Refined::Interval(i) => Interval::new(i.low, i.high),
            };
            qv = eval_interval(f.q(), x0, &y);
            tries += 1;
        }
        if let Some(value) = eval_interval(f.p(), x0, &y).div(&qv) {
            out.push(Sample { y, value });
        }
    }
    out
}

pub fn continuity_probe(f: &CurveFunction, real_index: usize, schedule: &ProbeSchedule) -> ProbeOutcome {
    let rp = &f.real_points()[real_index];
    let bp = &f.bad_points()[rp.class];
    let deg = f.curve().poly().total_degree().max(1) as f64;
    let mut delta = schedule.initial_radius.clone();
    let mut deltas = Vec::new();
    for _ in 0..schedule.steps.max(2) {
        deltas.push(delta.clone());
        delta = &delta * &schedule.shrink;
    }
    let last = deltas.last().unwrap().clone();
    let mut cur = Cursor::new(bp.field(), rp.emb);
    cur.refine_to(&(&last * &last * &last));
    let boxes = cur.boxes();
    let (a, b) = (boxes[0].mid(), boxes[1].clone());
    let v = cur.enclose(&f.values()[real_index]);
    let gamma = to_f64(&schedule.shrink).powf(1.0 / (2.0 * deg));

    // per side: samples at the last two steps
    let mut history: Vec<[Vec<Sample>; 2]> = Vec::new();
    for d in &deltas[deltas.len() - 2..] {
        let radius = from_f64(to_f64(d).powf(1.0 / deg));
        let width = d * d;
        let plus = samples_at(f, &(&a + d), &b, &radius, &width);
        let minus = samples_at(f, &(&a - d), &b, &radius, &width);
        history.push([plus, minus]);
    }
    let (prev, fin) = (&history[0], &history[1]);
    let branches = fin[0].len() + fin[1].len();
    if branches == 0 {
        return ProbeOutcome::Inconclusive;
    }
    for side in 0..2 {
        let x0 = if side == 0 { &a + &last } else { &a - &last };
        for (r, s) in fin[side].iter().enumerate() {
            let gap = to_f64(&s.value.gap(&v));
            if gap <= to_f64(&s.value.width()) {
                continue;
            }
            let before = if prev[side].len() == fin[side].len() {
                to_f64(&prev[side][r].value.gap(&v))
            } else {
                prev[side].iter().map(|p| to_f64(&p.value.gap(&v))).fold(0.0, f64::max)
            };
            if gap > gamma * before {
                return ProbeOutcome::Violated(ProbeSample {
                    x: to_f64(&x0),
                    y: to_f64(&s.y.mid()),
                    value: to_f64(&s.value.mid()),
                    expected: to_f64(&v.mid()),
                });
            }
        }
    }
    ProbeOutcome::Consistent { branches }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::function::{make_function, Assignment};
    use crate::curve::make_curve;
    use crate::parse::parse_poly;

    fn probe(c: &str, p: &str, q: &str, v: i64) -> ProbeOutcome {
        let c = make_curve(&parse_poly(c).unwrap()).unwrap();
        let f = make_function(&c, &parse_poly(p).unwrap(), &parse_poly(q).unwrap(), &[Assignment::at_origin(v)]).unwrap();
        continuity_probe(&f, 0, &ProbeSchedule::default())
    }

    #[test]
    fn examples() {
        assert!(matches!(probe("y^2 - x^3", "y", "x", 0), ProbeOutcome::Consistent { branches: 2 }));
        match probe("y^2 - x^2*(x+1)", "y", "x", 1) {
            ProbeOutcome::Violated(s) => assert!((s.value + 1.0).abs() < 1e-3, "{s:?}"),
            other => panic!("{other:?}"),
        }
        match probe("y^4 - x*(x^2+y^2)", "y^2", "x", 0) {
            ProbeOutcome::Violated(s) => assert!((s.value - 1.0).abs() < 1e-3, "{s:?}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(probe("y^2 - x^3*(x^2+1)^2", "y", "x*(x^2+1)", 0), ProbeOutcome::Consistent { .. }));
        assert!(matches!(probe("y^2 + x^2", "y", "x", 0), ProbeOutcome::Inconclusive));
    }
}
