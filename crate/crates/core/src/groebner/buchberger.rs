//! Buchberger's algorithm with the product and chain criteria and the normal
//! selection strategy, producing reduced bases.

use super::mpoly::{divides, exp_sub, lcm, Exp, MPoly};
use super::order::MonomialOrder;
use crate::arith::Q;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::HashSet;

type Terms = Vec<(Exp, Q)>;

/// A reduced Gröbner basis: monic, no leading term divides a term of
/// another element, sorted by descending leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<MPoly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[MPoly] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomial(&self, i: usize) -> Exp {
        leading(&self.basis[i], self.order).0
    }

    pub fn contains(&self, p: &MPoly) -> bool {
        normal_form(p, self).is_zero()
    }
}

fn sorted(p: &MPoly, o: MonomialOrder) -> Terms {
    let mut v = p.terms().to_vec();
    v.sort_by(|a, b| o.cmp(&b.0, &a.0));
    v
}

fn unsorted(t: Terms) -> MPoly {
    MPoly::from_terms(t)
}

/// Leading term of `p` under `o`.
pub fn leading(p: &MPoly, o: MonomialOrder) -> (Exp, Q) {
    p.terms()
        .iter()
        .max_by(|a, b| o.cmp(&a.0, &b.0))
        .cloned()
        .expect("leading term of zero")
}

/// `p - c * X^m * g`, all sorted by `o`.
fn sub_mul(p: &[(Exp, Q)], c: &Q, m: &Exp, g: &[(Exp, Q)], o: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let shifted = |j: usize| -> Exp { std::array::from_fn(|k| g[j].0[k] + m[k]) };
    while i < p.len() && j < g.len() {
        let e = shifted(j);
        match o.cmp(&p[i].0, &e) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((e, -(c * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &p[i].1 - c * &g[j].1;
                if !v.is_zero() {
                    out.push((e, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&p[i..]);
    while j < g.len() {
        out.push((shifted(j), -(c * &g[j].1)));
        j += 1;
    }
    out
}

fn make_monic(mut t: Terms) -> Terms {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.recip();
            for (_, v) in t.iter_mut() {
                *v *= &inv;
            }
        }
    }
    t
}

/// Full reduction of `p` by monic sorted divisors. `pick` chooses among the
/// indices of divisors whose leading monomial divides the current term.
fn reduce(p: Terms, g: &[Terms], o: MonomialOrder, pick: &mut dyn FnMut(&[usize]) -> usize) -> Terms {
    let mut p = p;
    let mut rem: Terms = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (e, c) = p[start].clone();
        let cands: Vec<usize> = (0..g.len()).filter(|&k| divides(&g[k][0].0, &e)).collect();
        if cands.is_empty() {
            rem.push((e, c));
            start += 1;
            continue;
        }
        let k = cands[pick(&cands)];
        let m = exp_sub(&e, &g[k][0].0);
        p = sub_mul(&p[start..], &c, &m, &g[k], o);
        start = 0;
    }
    rem
}

fn first(_: &[usize]) -> usize {
    0
}

/// Remainder of `p` on division by `gb`; zero iff `p` lies in the ideal.
pub fn normal_form(p: &MPoly, gb: &GroebnerBasis) -> MPoly {
    normal_form_with(p, gb, &mut first)
}

/// Division with a caller-chosen divisor at each step. For a Gröbner basis
/// the result does not depend on the choices.
pub fn normal_form_with(p: &MPoly, gb: &GroebnerBasis, pick: &mut dyn FnMut(&[usize]) -> usize) -> MPoly {
    let o = gb.order;
    let g: Vec<Terms> = gb.basis.iter().map(|b| sorted(b, o)).collect();
    unsorted(reduce(sorted(p, o), &g, o, pick))
}

/// Remainder of multivariate division by an arbitrary list of divisors.
pub fn divide_by(p: &MPoly, divisors: &[MPoly], o: MonomialOrder) -> MPoly {
    let g: Vec<Terms> = divisors.iter().filter(|d| !d.is_zero()).map(|b| make_monic(sorted(b, o))).collect();
    unsorted(reduce(sorted(p, o), &g, o, &mut first))
}

fn spoly(a: &Terms, b: &Terms, o: MonomialOrder) -> Terms {
    let l = lcm(&a[0].0, &b[0].0);
    let ma = exp_sub(&l, &a[0].0);
    let mb = exp_sub(&l, &b[0].0);
    let pa: Terms = a[1..].iter().map(|(e, c)| (std::array::from_fn(|k| e[k] + ma[k]), c.clone())).collect();
    sub_mul(&pa, &Q::one(), &mb, &b[1..], o)
}

fn coprime(a: &Exp, b: &Exp) -> bool {
    (0..4).all(|k| a[k] == 0 || b[k] == 0)
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `o`.
/// Zero generators are ignored; the zero ideal gives an empty basis.
pub fn buchberger(gens: &[MPoly], o: MonomialOrder) -> GroebnerBasis {
    let mut g: Vec<Terms> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |p: Terms, g: &mut Vec<Terms>, pending: &mut HashSet<(usize, usize)>| {
        let k = g.len();
        for i in 0..k {
            pending.insert((i, k));
        }
        g.push(p);
    };

    for p in gens {
        if p.is_zero() {
            continue;
        }
        let r = reduce(sorted(p, o), &g, o, &mut first);
        if !r.is_empty() {
            add(make_monic(r), &mut g, &mut pending);
        }
    }

    while !pending.is_empty() {
        // normal strategy: smallest lcm, ties by index
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = lcm(&g[a.0][0].0, &g[a.1][0].0);
                let lb = lcm(&g[b.0][0].0, &g[b.1][0].0);
                o.cmp(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (li, lj) = (g[i][0].0, g[j][0].0);
        if coprime(&li, &lj) {
            continue;
        }
        let l = lcm(&li, &lj);
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && divides(&g[k][0].0, &l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = spoly(&g[i], &g[j], o);
        let r = reduce(s, &g, o, &mut first);
        if r.is_empty() {
            continue;
        }
        let r = make_monic(r);
        if r[0].0 == [0; 4] {
            return GroebnerBasis { order: o, basis: vec![MPoly::one()] };
        }
        add(r, &mut g, &mut pending);
    }

    GroebnerBasis { order: o, basis: interreduce(g, o) }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn interreduce(g: Vec<Terms>, o: MonomialOrder) -> Vec<MPoly> {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Terms> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(j, q)| {
            j != i && divides(&q[0].0, &p[0].0) && (q[0].0 != p[0].0 || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut out: Vec<Terms> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<Terms> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let head = keep[i][0].clone();
        let tail = reduce(keep[i][1..].to_vec(), &others, o, &mut first);
        let mut r = vec![head];
        r.extend(tail);
        out.push(make_monic(r));
    }
    out.sort_by(|a, b| o.cmp(&b[0].0, &a[0].0));
    out.into_iter().map(unsorted).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::mpoly::{c, t, x, y};

    #[test]
    fn trivial_basis() {
        let gb = buchberger(&[x(), y()], MonomialOrder::Lex);
        assert_eq!(gb.basis(), &[x(), y()]);
    }

    #[test]
    fn substitution() {
        let gb = buchberger(&[y().sub(&x().pow(2)), t().sub(&y())], MonomialOrder::Lex);
        assert!(gb.contains(&t().sub(&x().pow(2))));
        assert_eq!(gb.basis(), &[t().sub(&y()), x().pow(2).sub(&y())]);
    }

    #[test]
    fn normal_forms() {
        let gb = buchberger(&[x().pow(2)], MonomialOrder::GrevLex);
        assert!(normal_form(&x().pow(2), &gb).is_zero());
        let gb = buchberger(&[y().pow(2).sub(&x().pow(3)), x()], MonomialOrder::GrevLex);
        assert_eq!(gb.basis().len(), 2);
        assert!(gb.contains(&y().pow(2)));
        assert_eq!(normal_form(&y(), &gb), y());
        assert!(normal_form(&x().mul(&y()), &gb).is_zero());
    }

    #[test]
    fn unit_ideal() {
        let gb = buchberger(&[x(), x().sub(&c(1))], MonomialOrder::GrevLex);
        assert!(gb.is_unit());
    }
}
