//! Dense polynomials in `Q[x][y]`: resultants in `y`, primitive gcds and
//! specialisation of either variable.

use super::qpoly;
use super::rational::{denominators_lcm, q, qi, Q};
use super::tower::NfElem;
use super::upoly::UPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `sum_j ys[j](x) * y^j`, no trailing zero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly {
    ys: Vec<UPoly<Q>>,
}

impl BiPoly {
    pub fn new(mut ys: Vec<UPoly<Q>>) -> Self {
        while ys.last().is_some_and(|c| c.is_zero()) {
            ys.pop();
        }
        BiPoly { ys }
    }

    pub fn zero() -> Self {
        BiPoly { ys: Vec::new() }
    }

    /// From `(coefficient, x exponent, y exponent)` triples.
    pub fn from_terms<'a>(terms: impl IntoIterator<Item = (&'a Q, u32, u32)>) -> Self {
        let mut ys: Vec<Vec<Q>> = Vec::new();
        for (c, ex, ey) in terms {
            let (ex, ey) = (ex as usize, ey as usize);
            if ys.len() <= ey {
                ys.resize(ey + 1, Vec::new());
            }
            let row = &mut ys[ey];
            if row.len() <= ex {
                row.resize(ex + 1, Q::zero());
            }
            row[ex] += c;
        }
        Self::new(ys.into_iter().map(UPoly::new).collect())
    }

    pub fn terms(&self) -> Vec<(Q, u32, u32)> {
        let mut out = Vec::new();
        for (j, c) in self.ys.iter().enumerate() {
            for (i, v) in c.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    out.push((v.clone(), i as u32, j as u32));
                }
            }
        }
        out
    }

    pub fn coeffs_y(&self) -> &[UPoly<Q>] {
        &self.ys
    }

    pub fn is_zero(&self) -> bool {
        self.ys.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.ys.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> usize {
        self.ys.iter().filter_map(|c| c.degree()).max().unwrap_or(0)
    }

    pub fn from_x(p: UPoly<Q>) -> Self {
        Self::new(vec![p])
    }

    pub fn d_dy(&self) -> Self {
        Self::new(self.ys.iter().enumerate().skip(1).map(|(j, c)| c.scale(&q(j as i64))).collect())
    }

    pub fn d_dx(&self) -> Self {
        Self::new(self.ys.iter().map(|c| c.derivative()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![UPoly::zero(); self.ys.len() + o.ys.len() - 1];
        for (i, a) in self.ys.iter().enumerate() {
            for (j, b) in o.ys.iter().enumerate() {
                out[i + j] = out[i + j].fadd(&a.fmul(b));
            }
        }
        Self::new(out)
    }

    /// `F(x0, y)`.
    pub fn eval_x(&self, x0: &Q) -> UPoly<Q> {
        UPoly::new(self.ys.iter().map(|c| c.eval(x0)).collect())
    }

    /// `F(x, y0)`.
    pub fn eval_y(&self, y0: &Q) -> UPoly<Q> {
        let mut acc = UPoly::zero();
        for c in self.ys.iter().rev() {
            acc = acc.scale(y0).fadd(c);
        }
        acc
    }

    /// `F(a, y)` with `a` in a tower.
    pub fn eval_x_nf(&self, a: &NfElem) -> UPoly<NfElem> {
        UPoly::new(self.ys.iter().map(|c| c.map(|v| NfElem::Rat(v.clone())).eval(a)).collect())
    }

    pub fn eval_nf(&self, a: &NfElem, b: &NfElem) -> NfElem {
        self.eval_x_nf(a).eval(b)
    }

    /// Gcd of the `y`-coefficients, monic in `x`.
    pub fn content(&self) -> UPoly<Q> {
        let mut g = UPoly::zero();
        for c in &self.ys {
            g = if g.is_zero() { c.monic().unwrap() } else { qpoly::gcd(&g, c) };
            if g.degree() == Some(0) {
                break;
            }
        }
        g
    }

    pub fn div_x(&self, c: &UPoly<Q>) -> Self {
        Self::new(self.ys.iter().map(|a| a.div_exact(c).expect("content divides")).collect())
    }

    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        let p = self.div_x(&c);
        let lc = p.ys.last().unwrap().lc().unwrap().clone();
        Self::new(p.ys.iter().map(|a| a.scale(&lc.recip())).collect())
    }

    /// `lc^k a - Q b` in `Q[x][y]`.
    fn prem(a: &Self, b: &Self) -> Self {
        let db = b.ys.len() - 1;
        let lb = b.ys.last().unwrap().clone();
        let mut r = a.clone();
        while !r.is_zero() && r.ys.len() > db {
            let k = r.ys.len() - 1;
            let lr = r.ys[k].clone();
            let mut next: Vec<UPoly<Q>> = r.ys.iter().map(|c| c.fmul(&lb)).collect();
            for (j, bc) in b.ys.iter().enumerate() {
                next[k - db + j] = next[k - db + j].fsub(&lr.fmul(bc));
            }
            r = Self::new(next);
        }
        r
    }

    /// Gcd in `Q[x][y]`, normalised to be primitive with monic leading
    /// coefficient (up to a power of the content gcd).
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive_with_content();
        }
        if o.is_zero() {
            return self.primitive_with_content();
        }
        let c = {
            let (ca, cb) = (self.content(), o.content());
            qpoly::gcd(&ca, &cb)
        };
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.ys.len() < b.ys.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.ys.len() == 1 {
                // nonzero y-free remainder: primitive parts coprime
                return Self::from_x(c);
            }
            let r = Self::prem(&a, &b);
            if r.is_zero() {
                return b.mul(&Self::from_x(c));
            }
            a = b;
            b = r.primitive();
        }
    }

    fn primitive_with_content(&self) -> Self {
        let c = self.content();
        self.primitive().mul(&Self::from_x(c))
    }

    /// Integer coefficients: multiply by the lcm of all denominators.
    fn integral(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let l = denominators_lcm(self.ys.iter().flat_map(|c| c.coeffs().iter()));
        let rows = self
            .ys
            .iter()
            .map(|c| c.coeffs().iter().map(|v| (v * qi(l.clone())).to_integer()).collect())
            .collect();
        (rows, l)
    }
}

fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Fraction-free determinant (Bareiss) of a square integer matrix.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant of the Sylvester matrix of two integer polynomials with the
/// given formal degrees (leading entries may vanish).
fn sylvester_det(a: &[BigInt], da: usize, b: &[BigInt], db: usize) -> BigInt {
    let n = da + db;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for r in 0..db {
        for (j, c) in a.iter().enumerate() {
            m[r][r + da - j] = c.clone();
        }
    }
    for r in 0..da {
        for (j, c) in b.iter().enumerate() {
            m[db + r][r + db - j] = c.clone();
        }
    }
    bareiss_det(m)
}

/// `Res_y(a, b)` as a polynomial in `x`. Both inputs must have positive
/// `y`-degree. Computed by evaluating `x` at integer points, taking
/// Sylvester determinants, and interpolating.
pub fn resultant_y(a: &BiPoly, b: &BiPoly) -> UPoly<Q> {
    let (m, n) = (a.deg_y().unwrap(), b.deg_y().unwrap());
    assert!(m > 0 && n > 0, "resultant needs positive y-degrees");
    let (ai, la) = a.integral();
    let (bi, lb) = b.integral();
    let bound = n * a.deg_x() + m * b.deg_x();
    let half = (bound / 2) as i64;
    let xs: Vec<BigInt> = (0..=bound as i64).map(|i| BigInt::from(i - half)).collect();
    let vals: Vec<BigInt> = xs
        .iter()
        .map(|x0| {
            let av: Vec<BigInt> = ai.iter().map(|c| eval_int(c, x0)).collect();
            let bv: Vec<BigInt> = bi.iter().map(|c| eval_int(c, x0)).collect();
            sylvester_det(&av, m, &bv, n)
        })
        .collect();
    let r = newton_interpolate(&xs, &vals);
    // undo the integer scaling: Res(la a, lb b) = la^n lb^m Res(a, b)
    let scale = Q::new(BigInt::one(), la.pow(n as u32) * lb.pow(m as u32));
    r.scale(&scale)
}

/// Interpolating polynomial through `(xs[i], vals[i])`, integer nodes.
fn newton_interpolate(xs: &[BigInt], vals: &[BigInt]) -> UPoly<Q> {
    let n = xs.len();
    let mut dd: Vec<Q> = vals.iter().cloned().map(qi).collect();
    for k in 1..n {
        for i in (k..n).rev() {
            let den = qi(&xs[i] - &xs[i - k]);
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    // Horner on the Newton form
    let mut acc = UPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = UPoly::new(vec![-qi(xs[i].clone()), Q::one()]);
        acc = acc.fmul(&lin).fadd(&UPoly::constant(dd[i].clone()));
    }
    acc
}
