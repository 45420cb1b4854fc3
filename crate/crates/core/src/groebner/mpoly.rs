//! Sparse polynomials over `Q` in the fixed variables `s, t, x, y`.

use crate::arith::bivariate::BiPoly;
use crate::arith::rational::{fmt_q, q, Q};
use crate::arith::tower::NfElem;
use crate::arith::{FieldElem, UPoly};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Variables in precedence order; `s` is reserved for saturation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S = 0,
    T = 1,
    X = 2,
    Y = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::S, Var::T, Var::X, Var::Y];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["s", "t", "x", "y"][self as usize]
    }
}

pub type Exp = [u32; 4];

pub fn total_degree(e: &Exp) -> u32 {
    e.iter().sum()
}

pub fn divides(a: &Exp, b: &Exp) -> bool {
    (0..4).all(|i| a[i] <= b[i])
}

pub fn lcm(a: &Exp, b: &Exp) -> Exp {
    std::array::from_fn(|i| a[i].max(b[i]))
}

pub fn exp_sub(a: &Exp, b: &Exp) -> Exp {
    std::array::from_fn(|i| a[i] - b[i])
}

pub fn exp_add(a: &Exp, b: &Exp) -> Exp {
    std::array::from_fn(|i| a[i] + b[i])
}

/// Terms are kept sorted by descending exponent vector (lex with
/// `s > t > x > y`) with no zero coefficients, so equal polynomials are
/// structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Exp, Q)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_terms(vec![([0; 4], c)])
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        MPoly { terms: vec![(e, Q::one())] }
    }

    pub fn monomial(e: Exp, c: Q) -> Self {
        Self::from_terms(vec![(e, c)])
    }

    /// Sums duplicate exponents and drops zeros.
    pub fn from_terms(terms: Vec<(Exp, Q)>) -> Self {
        let mut m: BTreeMap<Exp, Q> = BTreeMap::new();
        for (e, c) in terms {
            *m.entry(e).or_insert_with(Q::zero) += c;
        }
        let mut terms: Vec<(Exp, Q)> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        MPoly { terms }
    }

    pub fn terms(&self) -> &[(Exp, Q)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| *e == [0; 4])
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(e, c)] if *e == [0; 4] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(e, _)| e[v.index()]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| total_degree(e)).max().unwrap_or(0)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.iter().any(|(e, _)| e[v.index()] > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.involves(v)).collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        MPoly { terms: out }
    }

    pub fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Exp, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(e, v)| (exp_add(e, m), v * c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<Exp, Q> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                *acc.entry(exp_add(ea, eb)).or_insert_with(Q::zero) += ca * cb;
            }
        }
        let mut terms: Vec<(Exp, Q)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        MPoly { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Lex-leading coefficient made 1.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Scales so coefficients are coprime integers with positive lex-leading
    /// coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = crate::arith::rational::denominators_lcm(self.terms.iter().map(|(_, c)| c));
        let mut g = num_bigint::BigInt::zero();
        for (_, c) in &self.terms {
            g = num_integer::Integer::gcd(&g, &(c * crate::arith::rational::qi(l.clone())).to_integer());
        }
        let mut s = Q::new(l, g);
        if self.terms[0].1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Substitutes `v := r`.
    pub fn subst(&self, v: Var, r: &MPoly) -> Self {
        let d = self.degree_in(v) as usize;
        let mut pows = vec![Self::one()];
        for k in 1..=d {
            pows.push(pows[k - 1].mul(r));
        }
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2[v.index()] as usize;
            e2[v.index()] = 0;
            acc = acc.add(&pows[k].mul_monomial(&e2, c));
        }
        acc
    }

    /// Renames variables: the exponent of variable `i` moves to slot `perm[i]`.
    pub fn permute(&self, perm: [Var; 4]) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| {
                    let mut f = [0; 4];
                    for i in 0..4 {
                        f[perm[i].index()] += e[i];
                    }
                    (f, c.clone())
                })
                .collect(),
        )
    }

    /// Coefficients of the powers of `v`, lowest first.
    pub fn coefficients_in(&self, v: Var) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Exp, Q)>> = vec![Vec::new(); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2[v.index()] as usize;
            e2[v.index()] = 0;
            buckets[k].push((e2, c.clone()));
        }
        buckets.into_iter().map(MPoly::from_terms).collect()
    }

    /// Univariate view when `v` is the only variable present.
    pub fn to_upoly(&self, v: Var) -> Option<UPoly<Q>> {
        if self.terms.iter().any(|(e, _)| (0..4).any(|i| i != v.index() && e[i] > 0)) {
            return None;
        }
        let d = self.degree_in(v) as usize;
        let mut cs = vec![Q::zero(); d + 1];
        for (e, c) in &self.terms {
            cs[e[v.index()] as usize] = c.clone();
        }
        Some(UPoly::new(cs))
    }

    pub fn from_upoly(p: &UPoly<Q>, v: Var) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let mut e = [0; 4];
                    e[v.index()] = k as u32;
                    (e, c.clone())
                })
                .collect(),
        )
    }

    /// `Q[x][y]` view; `None` if `s` or `t` occurs.
    pub fn to_bipoly(&self) -> Option<BiPoly> {
        if self.involves(Var::S) || self.involves(Var::T) {
            return None;
        }
        let ts: Vec<(Q, u32, u32)> = self.terms.iter().map(|(e, c)| (c.clone(), e[2], e[3])).collect();
        Some(BiPoly::from_terms(ts.iter().map(|(c, a, b)| (c, *a, *b))))
    }

    pub fn from_bipoly(b: &BiPoly) -> Self {
        Self::from_terms(b.terms().into_iter().map(|(c, i, j)| ([0, 0, i, j], c)).collect())
    }

    /// Evaluates at tower elements; variables absent from `vals` must not occur.
    pub fn eval_nf(&self, vals: &[(Var, NfElem)]) -> NfElem {
        let mut acc = NfElem::Rat(Q::zero());
        let mut cache: BTreeMap<(usize, u32), NfElem> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut term = NfElem::Rat(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let base = &vals.iter().find(|(v, _)| v.index() == i).expect("unassigned variable").1;
                let p = cache.entry((i, k)).or_insert_with(|| {
                    let mut r = base.clone();
                    for _ in 1..k {
                        r = r.fmul(base);
                    }
                    r
                });
                term = term.fmul(p);
            }
            acc = acc.fadd(&term);
        }
        acc
    }

    /// Univariate polynomial in `v` over a tower, the other variables
    /// evaluated at `vals`.
    pub fn specialize(&self, v: Var, vals: &[(Var, NfElem)]) -> UPoly<NfElem> {
        UPoly::new(self.coefficients_in(v).iter().map(|c| c.eval_nf(vals)).collect())
    }

    /// Evaluation at rationals of every occurring variable.
    pub fn eval_q(&self, vals: &[(Var, Q)]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let b = &vals.iter().find(|(v, _)| v.index() == i).expect("unassigned variable").1;
                    term *= num_traits::pow(b.clone(), k as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Builds a polynomial from a tower element, mapping the level
    /// generators to `vars`.
    pub fn from_nf(e: &NfElem, vars: [Var; 2]) -> Self {
        Self::from_terms(
            e.terms()
                .into_iter()
                .map(|(c, ex)| {
                    let mut f = [0; 4];
                    f[vars[0].index()] += ex[0];
                    f[vars[1].index()] += ex[1];
                    (f, c)
                })
                .collect(),
        )
    }

    /// Terms in printing order: graded, then lex with `s > t > x > y`.
    fn print_order(&self) -> Vec<&(Exp, Q)> {
        let mut v: Vec<&(Exp, Q)> = self.terms.iter().collect();
        v.sort_by(|a, b| total_degree(&b.0).cmp(&total_degree(&a.0)).then(b.0.cmp(&a.0)));
        v
    }
}

fn fmt_monomial(e: &Exp, names: [&str; 4]) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match e[v.index()] {
            0 => {}
            1 => parts.push(names[v.index()].to_string()),
            k => parts.push(format!("{}^{}", names[v.index()], k)),
        }
    }
    parts.join("*")
}

impl MPoly {
    /// Canonical text with custom variable names.
    pub fn display_with(&self, names: [&str; 4]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.print_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let m = fmt_monomial(e, names);
            if m.is_empty() {
                out.push_str(&fmt_q(&a));
            } else if a.is_one() {
                out.push_str(&m);
            } else {
                out.push_str(&format!("{}*{m}", fmt_q(&a)));
            }
        }
        out
    }
}

/// Canonical text: graded order, `*` between factors, `^` for powers,
/// unit coefficients omitted, e.g. `t^2 - x`, `1/2*x + y`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(["s", "t", "x", "y"]))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Shorthand constructors used throughout.
pub fn s() -> MPoly {
    MPoly::var(Var::S)
}
pub fn t() -> MPoly {
    MPoly::var(Var::T)
}
pub fn x() -> MPoly {
    MPoly::var(Var::X)
}
pub fn y() -> MPoly {
    MPoly::var(Var::Y)
}
pub fn c(n: i64) -> MPoly {
    MPoly::constant(q(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing() {
        assert_eq!(t().pow(2).sub(&x()).to_string(), "t^2 - x");
        let p = x().scale(&crate::arith::rational::qf(1, 2)).add(&y());
        assert_eq!(p.to_string(), "1/2*x + y");
        assert_eq!(y().pow(2).sub(&x().pow(3)).to_string(), "-x^3 + y^2");
        assert_eq!(c(-3).to_string(), "-3");
        assert_eq!(MPoly::zero().to_string(), "0");
        assert_eq!(x().mul(&y()).scale(&q(-2)).add(&c(1)).to_string(), "-2*x*y + 1");
    }

    #[test]
    fn arithmetic() {
        let a = x().add(&y());
        let b = x().sub(&y());
        assert_eq!(a.mul(&b), x().pow(2).sub(&y().pow(2)));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.subst(Var::Y, &x()), x().scale(&q(2)));
        assert_eq!(x().permute([Var::S, Var::T, Var::Y, Var::X]), y());
    }
}
