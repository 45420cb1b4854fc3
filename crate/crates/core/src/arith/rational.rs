//! Helpers around `BigRational`, the coefficient field of everything user-facing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: BigInt) -> Q {
    Q::from_integer(n)
}

pub fn sign(x: &Q) -> Ordering {
    if x.is_zero() {
        Ordering::Equal
    } else if x.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

pub fn sign_int(x: &BigInt) -> Ordering {
    x.cmp(&BigInt::zero())
}

/// Canonical text: `-3`, `1/2`.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Q) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // huge numerator or denominator: shift both down before dividing
            let nb = x.numer().bits() as i64;
            let db = x.denom().bits() as i64;
            let shift = (nb.max(db) - 900).max(0) as usize;
            let n = (x.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (x.denom() >> shift).to_f64().unwrap_or(1.0);
            if d == 0.0 {
                if n == 0.0 {
                    0.0
                } else {
                    n.signum() * f64::INFINITY
                }
            } else {
                n / d
            }
        }
    }
}

/// Exact rational value of a finite double.
pub fn from_f64(x: f64) -> Q {
    Q::from_float(x).unwrap_or_else(Q::zero)
}

/// lcm of denominators of a coefficient slice.
pub fn denominators_lcm<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

pub fn mid(a: &Q, b: &Q) -> Q {
    (a + b) / q(2)
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}
