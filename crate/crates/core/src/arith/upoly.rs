//! Dense univariate polynomials over any [`FieldElem`].

use super::field::{ArithError, ArithResult, FieldElem};
use super::rational::Q;

/// Coefficients lowest degree first; never a trailing zero.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<C> {
    coeffs: Vec<C>,
}

impl<C: FieldElem> UPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.fis_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: C, k: usize) -> Self {
        if c.fis_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        UPoly { coeffs }
    }

    /// `t - c`
    pub fn linear_root(c: &C) -> Self {
        UPoly { coeffs: vec![c.fneg(), c.one_like()] }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Option<&C> {
        self.coeffs.get(k)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn fadd(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.fadd(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    pub fn fneg(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|c| c.fneg()).collect() }
    }

    pub fn fsub(&self, o: &Self) -> Self {
        self.fadd(&o.fneg())
    }

    pub fn fmul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut out = vec![z; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.fis_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].fadd(&a.fmul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.fmul(c)).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![self.coeffs[0].zero_like(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = match self.coeffs.first() {
            Some(c) => Self::constant(c.one_like()),
            None => return if e == 0 { panic!("0^0 without context") } else { Self::zero() },
        };
        for _ in 0..e {
            acc = acc.fmul(self);
        }
        acc
    }

    /// Horner evaluation; `x` supplies the context for the zero polynomial.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.fmul(x).fadd(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale_int(k as i64))
                .collect(),
        )
    }

    pub fn map<D: FieldElem>(&self, f: impl Fn(&C) -> D) -> UPoly<D> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<D: FieldElem, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<UPoly<D>, E> {
        Ok(UPoly::new(self.coeffs.iter().map(f).collect::<Result<_, _>>()?))
    }

    pub fn monic(&self) -> ArithResult<Self> {
        match self.lc() {
            None => Ok(Self::zero()),
            Some(l) if l.fis_one() => Ok(self.clone()),
            Some(l) => Ok(self.scale(&l.finv()?)),
        }
    }

    /// Division by a divisor with unit leading coefficient.
    pub fn divrem(&self, d: &Self) -> ArithResult<(Self, Self)> {
        let dd = d.degree().ok_or(ArithError::DivisionByZero)?;
        let lc_inv = {
            let l = d.lc().unwrap();
            if l.fis_one() {
                l.clone()
            } else {
                l.finv()?
            }
        };
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let z = r[0].zero_like();
        let mut quot = vec![z; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = r[k].fmul(&lc_inv);
            if c.fis_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + j] = r[k - dd + j].fsub(&c.fmul(dc));
            }
            quot[k - dd] = c;
        }
        r.truncate(dd);
        Ok((Self::new(quot), Self::new(r)))
    }

    pub fn rem(&self, d: &Self) -> ArithResult<Self> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> ArithResult<Self> {
        let (qq, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(ArithError::Degenerate("inexact polynomial division"));
        }
        Ok(qq)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, o: &Self) -> ArithResult<Self> {
        if self.is_zero() && o.is_zero() {
            return Err(ArithError::Degenerate("gcd of two zero polynomials"));
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn xgcd(&self, o: &Self) -> ArithResult<(Self, Self, Self)> {
        if self.is_zero() && o.is_zero() {
            return Err(ArithError::Degenerate("gcd of two zero polynomials"));
        }
        let one = self
            .coeffs
            .first()
            .or(o.coeffs.first())
            .map(|c| c.one_like())
            .unwrap();
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::constant(one.clone()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(one));
        while !r1.is_zero() {
            let (qq, r) = r0.divrem(&r1)?;
            let s = s0.fsub(&qq.fmul(&s1));
            let t = t0.fsub(&qq.fmul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.lc().unwrap().finv()?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> ArithResult<Self> {
        if self.is_zero() {
            return Err(ArithError::Degenerate("squarefree part of the zero polynomial"));
        }
        if self.degree() == Some(0) {
            return self.monic();
        }
        let g = self.gcd(&self.derivative())?;
        self.div_exact(&g)?.monic()
    }

    /// Gcd of a list; zero entries are ignored. `None` if all are zero.
    pub fn gcd_all<'a>(ps: impl IntoIterator<Item = &'a Self>) -> ArithResult<Option<Self>>
    where
        C: 'a,
    {
        let mut acc: Option<Self> = None;
        for p in ps {
            if p.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => p.monic()?,
                Some(a) => a.gcd(p)?,
            });
            if acc.as_ref().is_some_and(|a| a.degree() == Some(0)) {
                break;
            }
        }
        Ok(acc)
    }
}

impl UPoly<Q> {
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| super::rational::q(c)).collect())
    }

    pub fn from_qs(cs: &[Q]) -> Self {
        Self::new(cs.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UPoly<Q> {
        UPoly::from_ints(cs)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[0, 1])).unwrap(), p(&[1]));
        // t^3 - t and t^2 - 2t + 1 share only t - 1
        assert_eq!(p(&[0, -1, 0, 1]).gcd(&p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn gcd_of_zeros_is_degenerate() {
        assert!(matches!(
            UPoly::<Q>::zero().gcd(&UPoly::zero()),
            Err(ArithError::Degenerate(_))
        ));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(p(&[0, 0, 1]).squarefree_part().unwrap(), p(&[0, 1]));
        assert_eq!(p(&[2, -3, 0, 1]).squarefree_part().unwrap(), p(&[-2, 1, 1]));
        assert!(UPoly::<Q>::zero().squarefree_part().is_err());
    }

    #[test]
    fn xgcd_bezout() {
        let a = p(&[1, 0, 1]);
        let b = p(&[-1, 1, 3]);
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert_eq!(s.fmul(&a).fadd(&t.fmul(&b)), g);
        assert_eq!(g, p(&[1]));
    }
}
