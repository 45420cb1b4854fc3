//! Sturm sequences over Q with primitive pseudo-remainders.

use super::qpoly::{divide_content, is_squarefree, prem_int, primitive_int, sign_at_int};
use super::rational::Q;
use super::upoly::UPoly;
use crate::error::Error;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// An endpoint of an open real interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    At(Q),
    PosInf,
}

#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<Vec<BigInt>>,
}

impl SturmChain {
    /// Chain of `p, p', -rem, ...` scaled by positive constants only.
    pub fn new(p: &UPoly<Q>) -> Self {
        let p0 = primitive_int(p);
        assert!(!p0.is_empty(), "Sturm chain of zero polynomial");
        let mut seq = vec![p0];
        let d = primitive_int(&p.derivative());
        if d.is_empty() {
            return SturmChain { seq };
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            let (mut r, steps) = prem_int(a, b);
            if r.is_empty() {
                break;
            }
            if b.last().unwrap().is_negative() && steps % 2 == 1 {
                for c in r.iter_mut() {
                    *c = -&*c;
                }
            }
            for c in r.iter_mut() {
                *c = -&*c;
            }
            seq.push(divide_content(r));
        }
        SturmChain { seq }
    }

    fn signs_at(&self, b: &Bound) -> Vec<Ordering> {
        self.seq
            .iter()
            .map(|p| {
                let deg = p.len() - 1;
                let lc = p.last().unwrap().cmp(&BigInt::zero());
                match b {
                    Bound::PosInf => lc,
                    Bound::NegInf => {
                        if deg % 2 == 0 {
                            lc
                        } else {
                            lc.reverse()
                        }
                    }
                    Bound::At(x) => sign_at_int(p, x),
                }
            })
            .collect()
    }

    pub fn variations(&self, b: &Bound) -> usize {
        count_variations(&self.signs_at(b))
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let v = self.variations(lo) as i64 - self.variations(hi) as i64;
        let at_hi = matches!(hi, Bound::At(x) if sign_at_int(&self.seq[0], x) == Ordering::Equal);
        (v - at_hi as i64).max(0) as usize
    }

    pub fn poly(&self) -> &[BigInt] {
        &self.seq[0]
    }
}

pub(crate) fn count_variations(signs: &[Ordering]) -> usize {
    let mut last = Ordering::Equal;
    let mut v = 0;
    for &s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Exact number of distinct real roots of a squarefree rational polynomial in
/// the open interval `(lo, hi)`.
pub fn sturm_count(a: &UPoly<Q>, lo: &Bound, hi: &Bound) -> Result<usize, Error> {
    if a.is_zero() {
        return Err(Error::Degenerate("Sturm count of the zero polynomial".into()));
    }
    if !is_squarefree(a) {
        return Err(Error::Precondition("Sturm count needs a squarefree polynomial".into()));
    }
    Ok(SturmChain::new(a).count(lo, hi))
}
