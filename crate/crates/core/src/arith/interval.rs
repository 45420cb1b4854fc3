//! Closed intervals with exact rational endpoints.

use super::rational::Q;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
}

impl Interval {
    pub fn new(lo: Q, hi: Q) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Q) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Q {
        super::rational::mid(&self.lo, &self.hi)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `Some(sign)` when the interval lies strictly on one side of zero, or is
    /// exactly the point zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Self {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_point() && o.is_point() {
            return Interval::point(&self.lo * &o.lo);
        }
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, k: &Q) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    /// `None` if the divisor straddles zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.contains_zero() {
            return None;
        }
        let inv = Interval::new(o.hi.recip(), o.lo.recip());
        Some(self.mul(&inv))
    }

    pub fn abs_max(&self) -> Q {
        self.lo.abs().max(self.hi.abs())
    }

    /// Distance between the sets, zero if they overlap.
    pub fn gap(&self, o: &Self) -> Q {
        if self.hi < o.lo {
            &o.lo - &self.hi
        } else if o.hi < self.lo {
            &self.lo - &o.hi
        } else {
            Q::zero()
        }
    }
}

/// Horner evaluation of a rational polynomial on an interval.
pub fn eval_q_poly(coeffs: &[Q], x: &Interval) -> Interval {
    let mut acc = Interval::point(Q::zero());
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(&Interval::point(c.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{q, qf};

    #[test]
    fn arithmetic_encloses() {
        let a = Interval::new(q(-1), q(2));
        let b = Interval::new(q(3), q(4));
        assert_eq!(a.mul(&b), Interval::new(q(-4), q(8)));
        assert_eq!(a.sub(&b), Interval::new(q(-5), q(-1)));
        assert_eq!(b.div(&b).unwrap(), Interval::new(qf(3, 4), qf(4, 3)));
        assert!(b.div(&a).is_none());
        assert_eq!(a.sign(), None);
        assert_eq!(b.sign(), Some(Ordering::Greater));
    }
}
