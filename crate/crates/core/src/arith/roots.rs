//! Real root isolation for rational polynomials by Sturm bisection.

use super::qpoly::{cauchy_bound, primitive_int, sign_at_int, squarefree};
use super::rational::{q, qi, Q};
use super::sturm::{Bound, SturmChain};
use super::upoly::UPoly;
use num_bigint::BigInt;
use num_traits::Signed;
use std::cmp::Ordering;

/// Open interval `(low, high)` holding exactly one real root of the polynomial
/// it was computed for. Endpoints are never roots.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatingInterval {
    pub low: Q,
    pub high: Q,
}

impl IsolatingInterval {
    pub fn width(&self) -> Q {
        &self.high - &self.low
    }

    pub fn mid(&self) -> Q {
        super::rational::mid(&self.low, &self.high)
    }

    pub fn contains(&self, x: &Q) -> bool {
        &self.low < x && x < &self.high
    }
}

/// Points strictly inside `(lo, hi)` tried in turn when the midpoint is a root.
pub(crate) fn split_points<'a>(lo: &'a Q, hi: &'a Q) -> impl Iterator<Item = Q> + 'a {
    const FRACS: [(i64, i64); 8] = [(1, 2), (1, 3), (2, 3), (1, 5), (2, 5), (3, 5), (4, 5), (1, 7)];
    let w = hi - lo;
    FRACS
        .iter()
        .map(move |&(n, d)| lo + &w * Q::new(BigInt::from(n), BigInt::from(d)))
        .chain((3..).map(move |k| lo + (hi - lo) / q(1 << k.min(60)) / q(3)))
}

/// Isolating intervals, ascending, one per distinct real root.
pub fn isolate_real_roots(a: &UPoly<Q>) -> Vec<IsolatingInterval> {
    if a.is_zero() || a.degree() == Some(0) {
        return Vec::new();
    }
    let sq = squarefree(a);
    let chain = SturmChain::new(&sq);
    let b = cauchy_bound(&sq);
    isolate_with(&chain, -b.clone(), b)
}

fn isolate_with(chain: &SturmChain, lo: Q, hi: Q) -> Vec<IsolatingInterval> {
    let p = chain.poly().to_vec();
    let mut out = Vec::new();
    let n = chain.count(&Bound::At(lo.clone()), &Bound::At(hi.clone()));
    let mut stack = vec![(lo, hi, n)];
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(IsolatingInterval { low: lo, high: hi }),
            _ => {
                let m = split_points(&lo, &hi)
                    .find(|m| sign_at_int(&p, m) != Ordering::Equal)
                    .unwrap();
                let nl = chain.count(&Bound::At(lo.clone()), &Bound::At(m.clone()));
                stack.push((m.clone(), hi, n - nl));
                stack.push((lo, m, nl));
            }
        }
    }
    out.sort_by(|a, b| a.low.cmp(&b.low));
    out
}

/// Result of narrowing an isolating interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Refined {
    Interval(IsolatingInterval),
    Exact(Q),
}

/// Bisects until the width is at most `width` or the root is hit exactly.
/// `p` must have exactly one simple root in `iv`.
pub fn refine(p: &UPoly<Q>, iv: &IsolatingInterval, width: &Q) -> Refined {
    let pi = primitive_int(p);
    refine_int(&pi, iv, width)
}

pub(crate) fn refine_int(pi: &[BigInt], iv: &IsolatingInterval, width: &Q) -> Refined {
    let (mut lo, mut hi) = (iv.low.clone(), iv.high.clone());
    let slo = sign_at_int(pi, &lo);
    while &(&hi - &lo) > width {
        let m = super::rational::mid(&lo, &hi);
        let sm = sign_at_int(pi, &m);
        if sm == Ordering::Equal {
            return Refined::Exact(m);
        }
        if sm == slo {
            lo = m;
        } else {
            hi = m;
        }
    }
    Refined::Interval(IsolatingInterval { low: lo, high: hi })
}

/// All rational roots, ascending. A rational root `a/b` in lowest terms has
/// `b | lc`, so it lies on the lattice `(1/lc) Z`; once an isolating interval
/// is narrower than `1/lc` at most one lattice point remains to test.
pub fn rational_roots(a: &UPoly<Q>) -> Vec<Q> {
    if a.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sq = squarefree(a);
    let pi = primitive_int(&sq);
    let lc = pi.last().unwrap().abs();
    let w = Q::new(BigInt::from(1), lc.clone());
    let mut out = Vec::new();
    for iv in isolate_real_roots(&sq) {
        match refine_int(&pi, &iv, &w) {
            Refined::Exact(r) => out.push(r),
            Refined::Interval(iv) => {
                let k = (&iv.low * qi(lc.clone())).ceil();
                let cand = k / qi(lc.clone());
                if iv.contains(&cand) && sign_at_int(&pi, &cand) == Ordering::Equal {
                    out.push(cand);
                }
            }
        }
    }
    out
}

/// Splits off the rational roots: `(roots, a / prod (t - r))`, the cofactor
/// monic and squarefree.
pub fn split_rational_roots(a: &UPoly<Q>) -> (Vec<Q>, UPoly<Q>) {
    let sq = squarefree(a);
    let roots = rational_roots(&sq);
    let mut rest = sq;
    for r in &roots {
        rest = rest.div_exact(&UPoly::linear_root(r)).unwrap();
    }
    (roots, rest.monic().unwrap())
}

pub fn count_real_roots(a: &UPoly<Q>) -> usize {
    if a.degree().unwrap_or(0) == 0 {
        return 0;
    }
    SturmChain::new(&squarefree(a)).count(&Bound::NegInf, &Bound::PosInf)
}
