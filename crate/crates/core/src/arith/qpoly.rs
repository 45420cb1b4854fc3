//! Rational-coefficient specialisations: primitive integer forms, a
//! fraction-free gcd, Yun's squarefree decomposition and rational roots.

use super::rational::{qi, Q};
use super::upoly::UPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Integer coefficients, lowest degree first, content 1, positive leading
/// coefficient. Zero maps to the empty vector.
pub fn primitive_int(p: &UPoly<Q>) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let l = super::rational::denominators_lcm(p.coeffs());
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * qi(l.clone())).to_integer()).collect();
    make_primitive(ints)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Divides by the positive content, preserving signs.
pub(crate) fn divide_content(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            return v;
        }
    }
    if !g.is_zero() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

pub fn from_int(v: &[BigInt]) -> UPoly<Q> {
    UPoly::new(v.iter().cloned().map(qi).collect())
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`, together with the number of
/// multiplications by `lc(b)` that were performed.
pub(crate) fn prem_int(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, usize) {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = 0;
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let lr = r[k].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = k - db;
        for (j, bc) in b.iter().enumerate() {
            r[off + j] -= &lr * bc;
        }
        steps += 1;
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    (r, steps)
}

/// Monic gcd over Q via the primitive pseudo-remainder sequence.
pub fn gcd(a: &UPoly<Q>, b: &UPoly<Q>) -> UPoly<Q> {
    let (mut x, mut y) = (primitive_int(a), primitive_int(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    if y.is_empty() {
        return from_int(&x).monic().unwrap();
    }
    loop {
        let (r, _) = prem_int(&x, &y);
        if r.is_empty() {
            return from_int(&y).monic().unwrap();
        }
        x = y;
        y = make_primitive(r);
    }
}

pub fn squarefree(a: &UPoly<Q>) -> UPoly<Q> {
    assert!(!a.is_zero(), "squarefree part of zero");
    if a.degree() == Some(0) {
        return UPoly::from_ints(&[1]);
    }
    let g = gcd(a, &a.derivative());
    a.div_exact(&g).unwrap().monic().unwrap()
}

pub fn is_squarefree(a: &UPoly<Q>) -> bool {
    a.degree().is_some_and(|d| d == 0 || gcd(a, &a.derivative()).degree() == Some(0))
}

/// Yun's algorithm: `(factor, multiplicity)` with monic squarefree pairwise
/// coprime factors, constant factors omitted.
pub fn yun(a: &UPoly<Q>) -> Vec<(UPoly<Q>, usize)> {
    let mut out = Vec::new();
    if a.degree().unwrap_or(0) == 0 {
        return out;
    }
    let a = a.monic().unwrap();
    let da = a.derivative();
    let b = gcd(&a, &da);
    let mut c = a.div_exact(&b).unwrap();
    let mut d = da.div_exact(&b).unwrap().fsub(&c.derivative());
    let mut i = 1;
    while c.degree().unwrap_or(0) > 0 {
        let g = gcd(&c, &d);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), i));
        }
        c = c.div_exact(&g).unwrap();
        d = d.div_exact(&g).unwrap().fsub(&c.derivative());
        i += 1;
    }
    out
}

/// Sign of an integer polynomial at a rational point, evaluated exactly
/// without leaving the integers.
pub fn sign_at_int(p: &[BigInt], x: &Q) -> Ordering {
    if p.is_empty() {
        return Ordering::Equal;
    }
    let (n, d) = (x.numer(), x.denom());
    // sum c_i n^i d^(deg-i), d > 0
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    let deg = p.len() - 1;
    let mut terms = vec![BigInt::zero(); p.len()];
    for i in (0..=deg).rev() {
        terms[i] = dpow.clone();
        dpow *= d;
    }
    let mut npow = BigInt::one();
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            acc += c * &npow * &terms[i];
        }
        npow *= n;
    }
    acc.cmp(&BigInt::zero())
}

/// Strict bound: every complex root has modulus `< 1 + max |c_i / c_n|`.
pub fn cauchy_bound(p: &UPoly<Q>) -> Q {
    let n = p.degree().expect("bound of zero polynomial");
    let lc = p.lc().unwrap().abs();
    let mut m = Q::zero();
    for c in &p.coeffs()[..n] {
        let r = c.abs() / &lc;
        if r > m {
            m = r;
        }
    }
    m + Q::one()
}
