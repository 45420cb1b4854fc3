//! The minimal field interface shared by `Q` and number-field elements.

use super::rational::Q;
use super::tower::SplitEvent;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    /// A zero divisor was met while inverting in a tower whose moduli are not
    /// irreducible. The caller splits the tower and re-runs on each branch.
    #[error("zero divisor found at tower level {}", .0.level)]
    Split(SplitEvent),
}

pub type ArithResult<T> = Result<T, ArithError>;

/// Field operations. Elements carry their own context (the tower they live
/// in), so constants are produced from an existing element.
pub trait FieldElem: Clone + PartialEq + fmt::Debug {
    fn fis_zero(&self) -> bool;
    fn fis_one(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn rational_like(&self, c: &Q) -> Self;
    fn fadd(&self, o: &Self) -> Self;
    fn fsub(&self, o: &Self) -> Self;
    fn fmul(&self, o: &Self) -> Self;
    fn fneg(&self) -> Self;
    fn finv(&self) -> ArithResult<Self>;

    fn fdiv(&self, o: &Self) -> ArithResult<Self> {
        Ok(self.fmul(&o.finv()?))
    }

    fn scale_int(&self, k: i64) -> Self {
        self.fmul(&self.rational_like(&super::rational::q(k)))
    }
}

impl FieldElem for Q {
    fn fis_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn fis_one(&self) -> bool {
        One::is_one(self)
    }
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn one_like(&self) -> Self {
        Q::one()
    }
    fn rational_like(&self, c: &Q) -> Self {
        c.clone()
    }
    fn fadd(&self, o: &Self) -> Self {
        self + o
    }
    fn fsub(&self, o: &Self) -> Self {
        self - o
    }
    fn fmul(&self, o: &Self) -> Self {
        self * o
    }
    fn fneg(&self) -> Self {
        -self
    }
    fn finv(&self) -> ArithResult<Self> {
        if Zero::is_zero(self) {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}
