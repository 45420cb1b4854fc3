//! Algebraic number towers of depth at most two.
//!
//! A tower is `Q[x]/(m1)` optionally followed by `K1[y]/(m2)`. Moduli are
//! squarefree but not necessarily irreducible: inverting a zero divisor
//! raises [`SplitEvent`], and [`split_eval`] re-runs a computation on each
//! factor (dynamic evaluation).
//!
//! Real embeddings are isolating boxes. Signs at an embedding are decided by
//! rational interval refinement, escalating to an exact zero test after a
//! fixed number of bisections.

use super::field::{ArithError, ArithResult, FieldElem};
use super::interval::{eval_q_poly, Interval};
use super::qpoly;
use super::rational::{mid, sign, Q};
use super::roots::{isolate_real_roots, split_points};
use super::sturm::count_variations;
use super::upoly::UPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

/// Bisections attempted before the exact zero test.
pub const REFINE_CAP: usize = 64;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// One real root of a level modulus. For level 2, `parent` indexes the
/// embedding of the base field the box lives over. `lo == hi` marks an
/// exactly known rational root; otherwise the open interval `(lo, hi)`
/// isolates the root and neither endpoint is a root.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    pub parent: Option<usize>,
    pub lo: Q,
    pub hi: Q,
}

impl Embedding {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

pub struct NumberField {
    id: u64,
    depth: usize,
    base: Option<Arc<NumberField>>,
    modulus: UPoly<NfElem>,
    embeddings: Vec<Embedding>,
}

/// Raised when a modulus turns out to be reducible. `factor` is a proper
/// monic factor of the modulus of `field`, which sits at `level` of the tower.
#[derive(Clone)]
pub struct SplitEvent {
    pub level: usize,
    pub field: Arc<NumberField>,
    pub factor: UPoly<NfElem>,
}

impl fmt::Debug for SplitEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SplitEvent(level {}, factor {:?})", self.level, self.factor)
    }
}

/// Element of a tower: a rational, or a reduced polynomial of positive
/// degree in the generator of `field` with coefficients in its base.
#[derive(Clone)]
pub enum NfElem {
    Rat(Q),
    Alg(Arc<NumberField>, UPoly<NfElem>),
}

fn rat_poly(p: &UPoly<NfElem>) -> UPoly<Q> {
    p.map(|c| match c {
        NfElem::Rat(v) => v.clone(),
        NfElem::Alg(..) => panic!("expected rational coefficients"),
    })
}

fn lift_q(p: &UPoly<Q>) -> UPoly<NfElem> {
    p.map(|c| NfElem::Rat(c.clone()))
}

impl NumberField {
    /// `Q[x]/(m)` for a squarefree rational `m` of positive degree.
    pub fn simple(m: &UPoly<Q>) -> ArithResult<Arc<Self>> {
        if m.degree().unwrap_or(0) == 0 {
            return Err(ArithError::Degenerate("field modulus must have positive degree"));
        }
        if !qpoly::is_squarefree(m) {
            return Err(ArithError::Degenerate("field modulus must be squarefree"));
        }
        let m = m.monic()?;
        let embeddings = if m.degree() == Some(1) {
            let a = -m.coeffs()[0].clone();
            vec![Embedding { parent: None, lo: a.clone(), hi: a }]
        } else {
            isolate_real_roots(&m)
                .into_iter()
                .map(|iv| Embedding { parent: None, lo: iv.low, hi: iv.high })
                .collect()
        };
        Ok(Arc::new(NumberField {
            id: NEXT_ID.fetch_add(1, AtomicOrdering::Relaxed),
            depth: 1,
            base: None,
            modulus: lift_q(&m),
            embeddings,
        }))
    }

    /// `base[y]/(m)`; `m` is made monic, which may split `base`.
    pub fn extend(base: &Arc<Self>, m: &UPoly<NfElem>) -> ArithResult<Arc<Self>> {
        if base.depth != 1 {
            return Err(ArithError::Degenerate("towers have at most two levels"));
        }
        let m = m.map(|c| base.import(c));
        if m.degree().unwrap_or(0) == 0 {
            return Err(ArithError::Degenerate("field modulus must have positive degree"));
        }
        let m = m.monic()?;
        let mut embeddings = Vec::new();
        for j in 0..base.embeddings.len() {
            let mut cur = Cursor::new(base, j);
            if m.degree() == Some(1) {
                if let NfElem::Rat(c) = &m.coeffs()[0] {
                    let r = -c.clone();
                    embeddings.push(Embedding { parent: Some(j), lo: r.clone(), hi: r });
                    continue;
                }
            }
            for (lo, hi) in cur.isolate(&m) {
                embeddings.push(Embedding { parent: Some(j), lo, hi });
            }
        }
        Ok(Self::raw(Some(base.clone()), m, embeddings))
    }

    fn raw(base: Option<Arc<Self>>, modulus: UPoly<NfElem>, embeddings: Vec<Embedding>) -> Arc<Self> {
        let depth = base.as_ref().map_or(1, |b| b.depth + 1);
        Arc::new(NumberField {
            id: NEXT_ID.fetch_add(1, AtomicOrdering::Relaxed),
            depth,
            base,
            modulus,
            embeddings,
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn base(&self) -> Option<&Arc<NumberField>> {
        self.base.as_ref()
    }

    pub fn modulus(&self) -> &UPoly<NfElem> {
        &self.modulus
    }

    /// Rational modulus of a first level.
    pub fn modulus_q(&self) -> Option<UPoly<Q>> {
        (self.depth == 1).then(|| rat_poly(&self.modulus))
    }

    pub fn embeddings(&self) -> &[Embedding] {
        &self.embeddings
    }

    /// Degree of this level's modulus.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// Number of complex points: product of level degrees.
    pub fn total_degree(&self) -> usize {
        self.degree() * self.base.as_ref().map_or(1, |b| b.total_degree())
    }

    /// The field at depth `d` of this tower.
    pub fn level(self: &Arc<Self>, d: usize) -> Arc<Self> {
        assert!(d >= 1 && d <= self.depth, "no level {d} in a depth-{} tower", self.depth);
        let mut k = self.clone();
        while k.depth > d {
            k = k.base.clone().unwrap();
        }
        k
    }

    /// Generator of this level.
    pub fn gen(self: &Arc<Self>) -> NfElem {
        let x = UPoly::new(vec![NfElem::Rat(Q::zero()), NfElem::Rat(Q::one())]);
        self.reduce(x)
    }

    /// Generators of every level, outermost last.
    pub fn gens(self: &Arc<Self>) -> Vec<NfElem> {
        (1..=self.depth).map(|d| self.level(d).gen()).collect()
    }

    /// Canonical element for a polynomial already reduced in degree.
    fn canon(self: &Arc<Self>, p: UPoly<NfElem>) -> NfElem {
        match p.degree() {
            None => NfElem::Rat(Q::zero()),
            Some(0) => p.coeffs()[0].clone(),
            Some(_) => NfElem::Alg(self.clone(), p),
        }
    }

    /// Element represented by an arbitrary polynomial in the generator.
    pub fn reduce(self: &Arc<Self>, p: UPoly<NfElem>) -> NfElem {
        let r = if p.degree() >= self.modulus.degree() {
            p.rem(&self.modulus).expect("monic modulus")
        } else {
            p
        };
        self.canon(r)
    }

    /// Maps an element of a tower this one was split from (or of one of its
    /// levels) into this tower by reducing modulo the current moduli.
    pub fn import(self: &Arc<Self>, e: &NfElem) -> NfElem {
        match e {
            NfElem::Rat(_) => e.clone(),
            NfElem::Alg(k, p) => {
                let target = self.level(k.depth);
                if target.id == k.id {
                    return e.clone();
                }
                let mapped = match &target.base {
                    None => p.clone(),
                    Some(b) => p.map(|c| b.import(c)),
                };
                target.reduce(mapped)
            }
        }
    }

    pub fn import_poly(self: &Arc<Self>, p: &UPoly<NfElem>) -> UPoly<NfElem> {
        p.map(|c| self.import(c))
    }

    /// True when every level is linear, so every element is rational.
    pub fn is_rational(&self) -> bool {
        self.total_degree() == 1
    }

    /// Exact rational coordinates of embedding `emb`, level by level, when
    /// they are known to be rational.
    pub fn exact_point(&self, emb: usize) -> Vec<Option<Q>> {
        let e = &self.embeddings[emb];
        let mut out = match (&self.base, e.parent) {
            (Some(b), Some(j)) => b.exact_point(j),
            _ => Vec::new(),
        };
        out.push(e.is_exact().then(|| e.lo.clone()));
        out
    }

    /// Splits the tower along `ev`. Returns the two branches in factor order.
    pub fn split(self: &Arc<Self>, ev: &SplitEvent) -> ArithResult<Vec<Arc<NumberField>>> {
        if ev.level > self.depth {
            return Err(ArithError::Degenerate("split event from a foreign tower"));
        }
        let lvl = self.level(ev.level);
        if lvl.id != ev.field.id {
            return Err(ArithError::Degenerate("split event from a foreign tower"));
        }
        let g = ev.factor.monic()?;
        let h = lvl.modulus.div_exact(&g)?;
        let parts = [g, h];
        let mut owner = Vec::with_capacity(lvl.embeddings.len());
        for i in 0..lvl.embeddings.len() {
            let mut cur = Cursor::new(&lvl, i);
            owner.push(if cur.top_is_root_of(&parts[0]) { 0 } else { 1 });
        }
        let mut index = vec![0; owner.len()];
        let mut levels = Vec::new();
        for (b, m) in parts.iter().enumerate() {
            let mut embs = Vec::new();
            for (i, e) in lvl.embeddings.iter().enumerate() {
                if owner[i] == b {
                    index[i] = embs.len();
                    embs.push(e.clone());
                }
            }
            levels.push(Self::raw(lvl.base.clone(), m.clone(), embs));
        }
        if self.depth == lvl.depth {
            return Ok(levels);
        }
        let mut out = Vec::new();
        for (b, nb) in levels.iter().enumerate() {
            let m = nb.import_poly(&self.modulus);
            let embs = self
                .embeddings
                .iter()
                .filter(|e| owner[e.parent.unwrap()] == b)
                .map(|e| Embedding { parent: Some(index[e.parent.unwrap()]), lo: e.lo.clone(), hi: e.hi.clone() })
                .collect();
            out.push(Self::raw(Some(nb.clone()), m, embs));
        }
        Ok(out)
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(b) = &self.base {
            write!(f, "{b:?} / ")?;
        }
        write!(f, "[{}] {:?}", self.id, self.modulus)
    }
}

/// Runs `f` on `field`, splitting and re-running whenever it reports a zero
/// divisor. Each result is paired with the branch it holds on; the branches
/// partition the points of `field`.
pub fn split_eval<T>(
    field: &Arc<NumberField>,
    mut f: impl FnMut(&Arc<NumberField>) -> ArithResult<T>,
) -> ArithResult<Vec<(Arc<NumberField>, T)>> {
    let mut work = vec![field.clone()];
    let mut out = Vec::new();
    let mut splits = 0usize;
    while let Some(k) = work.pop() {
        match f(&k) {
            Ok(v) => out.push((k, v)),
            Err(ArithError::Split(ev)) => {
                splits += 1;
                if splits > 4096 {
                    return Err(ArithError::Degenerate("runaway tower splitting"));
                }
                for p in k.split(&ev)?.into_iter().rev() {
                    work.push(p);
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

impl NfElem {
    pub fn rat(c: Q) -> Self {
        NfElem::Rat(c)
    }

    pub fn depth(&self) -> usize {
        match self {
            NfElem::Rat(_) => 0,
            NfElem::Alg(k, _) => k.depth,
        }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        match self {
            NfElem::Rat(_) => None,
            NfElem::Alg(k, _) => Some(k),
        }
    }

    pub fn as_rational(&self) -> Option<&Q> {
        match self {
            NfElem::Rat(c) => Some(c),
            NfElem::Alg(..) => None,
        }
    }

    fn as_poly_in(&self, k: &Arc<NumberField>) -> UPoly<NfElem> {
        match self {
            NfElem::Alg(f, p) if f.id == k.id => p.clone(),
            _ => UPoly::constant(self.clone()),
        }
    }

    /// Monomials `(coefficient, [exponent of level-1 generator, exponent of
    /// level-2 generator])`.
    pub fn terms(&self) -> Vec<(Q, [u32; 2])> {
        match self {
            NfElem::Rat(c) if c.is_zero() => Vec::new(),
            NfElem::Rat(c) => vec![(c.clone(), [0, 0])],
            NfElem::Alg(k, p) => {
                let mut out = Vec::new();
                for (i, c) in p.coeffs().iter().enumerate() {
                    for (v, mut e) in c.terms() {
                        e[k.depth - 1] += i as u32;
                        out.push((v, e));
                    }
                }
                out
            }
        }
    }
}

fn top_field(a: &NfElem, b: &NfElem) -> Arc<NumberField> {
    match (a, b) {
        (NfElem::Alg(ka, _), NfElem::Alg(kb, _)) => {
            if ka.depth == kb.depth {
                assert_eq!(ka.id, kb.id, "mixing elements of unrelated towers");
                ka.clone()
            } else if ka.depth > kb.depth {
                ka.clone()
            } else {
                kb.clone()
            }
        }
        (NfElem::Alg(k, _), _) | (_, NfElem::Alg(k, _)) => k.clone(),
        _ => unreachable!(),
    }
}

impl PartialEq for NfElem {
    fn eq(&self, o: &Self) -> bool {
        match (self, o) {
            (NfElem::Rat(a), NfElem::Rat(b)) => a == b,
            (NfElem::Alg(ka, pa), NfElem::Alg(kb, pb)) => ka.id == kb.id && pa == pb,
            _ => false,
        }
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NfElem::Rat(c) => write!(f, "{}", super::rational::fmt_q(c)),
            NfElem::Alg(k, p) => {
                let v = if k.depth == 1 { "a" } else { "b" };
                write!(f, "(")?;
                for (i, c) in p.coeffs().iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{c:?}*{v}^{i}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FieldElem for NfElem {
    fn fis_zero(&self) -> bool {
        matches!(self, NfElem::Rat(c) if c.is_zero())
    }

    fn fis_one(&self) -> bool {
        matches!(self, NfElem::Rat(c) if c.is_one())
    }

    fn zero_like(&self) -> Self {
        NfElem::Rat(Q::zero())
    }

    fn one_like(&self) -> Self {
        NfElem::Rat(Q::one())
    }

    fn rational_like(&self, c: &Q) -> Self {
        NfElem::Rat(c.clone())
    }

    fn fadd(&self, o: &Self) -> Self {
        if let (NfElem::Rat(a), NfElem::Rat(b)) = (self, o) {
            return NfElem::Rat(a + b);
        }
        let k = top_field(self, o);
        k.canon(self.as_poly_in(&k).fadd(&o.as_poly_in(&k)))
    }

    fn fsub(&self, o: &Self) -> Self {
        self.fadd(&o.fneg())
    }

    fn fmul(&self, o: &Self) -> Self {
        match (self, o) {
            (NfElem::Rat(a), NfElem::Rat(b)) => NfElem::Rat(a * b),
            (NfElem::Rat(a), x) | (x, NfElem::Rat(a)) => {
                if a.is_zero() {
                    NfElem::Rat(Q::zero())
                } else if let NfElem::Alg(k, p) = x {
                    NfElem::Alg(k.clone(), p.map(|c| c.fmul(&NfElem::Rat(a.clone()))))
                } else {
                    unreachable!()
                }
            }
            _ => {
                let k = top_field(self, o);
                k.reduce(self.as_poly_in(&k).fmul(&o.as_poly_in(&k)))
            }
        }
    }

    fn fneg(&self) -> Self {
        match self {
            NfElem::Rat(c) => NfElem::Rat(-c),
            NfElem::Alg(k, p) => NfElem::Alg(k.clone(), p.fneg()),
        }
    }

    fn finv(&self) -> ArithResult<Self> {
        match self {
            NfElem::Rat(c) => c.finv().map(NfElem::Rat),
            NfElem::Alg(k, p) => {
                let (g, s, _) = p.xgcd(&k.modulus)?;
                if g.degree() != Some(0) {
                    return Err(ArithError::Split(SplitEvent { level: k.depth, field: k.clone(), factor: g }));
                }
                Ok(k.reduce(s))
            }
        }
    }
}

struct Box1 {
    m: UPoly<Q>,
    mi: Vec<BigInt>,
    lo: Q,
    hi: Q,
    s_lo: Ordering,
}

struct Box2 {
    m: UPoly<NfElem>,
    lo: Q,
    hi: Q,
    s_lo: Ordering,
}

/// A real embedding being narrowed on demand. Answers exact sign queries for
/// elements of the tower (or of its first level) at that embedding.
pub struct Cursor {
    b1: Option<Box1>,
    b2: Option<Box2>,
}

impl Cursor {
    pub fn new(field: &Arc<NumberField>, emb: usize) -> Self {
        let make1 = |k: &NumberField, e: &Embedding| {
            let m = rat_poly(&k.modulus);
            let mi = qpoly::primitive_int(&m);
            let s_lo = if e.is_exact() { Ordering::Equal } else { qpoly::sign_at_int(&mi, &e.lo) };
            Box1 { m, mi, lo: e.lo.clone(), hi: e.hi.clone(), s_lo }
        };
        match field.depth {
            1 => Cursor { b1: Some(make1(field, &field.embeddings[emb])), b2: None },
            _ => {
                let e = &field.embeddings[emb];
                let base = field.base.as_ref().unwrap();
                let b1 = make1(base, &base.embeddings[e.parent.unwrap()]);
                let mut cur = Cursor { b1: Some(b1), b2: None };
                let s_lo = if e.is_exact() {
                    Ordering::Equal
                } else {
                    let v = field.modulus.eval(&NfElem::Rat(e.lo.clone()));
                    cur.sign(&v)
                };
                cur.b2 = Some(Box2 { m: field.modulus.clone(), lo: e.lo.clone(), hi: e.hi.clone(), s_lo });
                cur
            }
        }
    }

    fn refine1(&mut self) {
        let b = self.b1.as_mut().unwrap();
        if b.lo == b.hi {
            return;
        }
        let m = mid(&b.lo, &b.hi);
        let s = qpoly::sign_at_int(&b.mi, &m);
        if s == Ordering::Equal {
            b.lo = m.clone();
            b.hi = m;
        } else if s == b.s_lo {
            b.lo = m;
        } else {
            b.hi = m;
        }
    }

    fn refine2(&mut self) {
        let Some(mut b) = self.b2.take() else { return };
        if b.lo != b.hi {
            let m = mid(&b.lo, &b.hi);
            let s = self.sign(&b.m.eval(&NfElem::Rat(m.clone())));
            if s == Ordering::Equal {
                b.lo = m.clone();
                b.hi = m;
            } else if s == b.s_lo {
                b.lo = m;
            } else {
                b.hi = m;
            }
        }
        self.b2 = Some(b);
    }

    /// Halves every box once.
    pub fn refine(&mut self) {
        self.refine1();
        self.refine2();
    }

    /// Current boxes around the coordinates, level by level.
    pub fn boxes(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        if let Some(b) = &self.b1 {
            out.push(Interval::new(b.lo.clone(), b.hi.clone()));
        }
        if let Some(b) = &self.b2 {
            out.push(Interval::new(b.lo.clone(), b.hi.clone()));
        }
        out
    }

    /// Refines until every coordinate box has width at most `w`.
    pub fn refine_to(&mut self, w: &Q) {
        while self.boxes().iter().any(|b| &b.width() > w) {
            self.refine();
        }
    }

    /// Interval enclosure of `e` at the current boxes.
    pub fn enclose(&self, e: &NfElem) -> Interval {
        match e {
            NfElem::Rat(c) => Interval::point(c.clone()),
            NfElem::Alg(k, p) if k.depth == 1 => {
                let b = self.b1.as_ref().expect("no first-level box");
                eval_q_poly(rat_poly(p).coeffs(), &Interval::new(b.lo.clone(), b.hi.clone()))
            }
            NfElem::Alg(_, p) => {
                let b = self.b2.as_ref().expect("no second-level box");
                let y = Interval::new(b.lo.clone(), b.hi.clone());
                let mut acc = Interval::point(Q::zero());
                for c in p.coeffs().iter().rev() {
                    acc = acc.mul(&y).add(&self.enclose(c));
                }
                acc
            }
        }
    }

    /// Exact sign of `e` at this embedding.
    pub fn sign(&mut self, e: &NfElem) -> Ordering {
        if let NfElem::Rat(c) = e {
            return sign(c);
        }
        for _ in 0..REFINE_CAP {
            if let Some(s) = self.enclose(e).sign() {
                return s;
            }
            self.refine_for(e);
        }
        if self.vanishes(e) {
            return Ordering::Equal;
        }
        loop {
            if let Some(s) = self.enclose(e).sign() {
                return s;
            }
            self.refine_for(e);
        }
    }

    fn refine_for(&mut self, e: &NfElem) {
        if e.depth() >= 2 {
            self.refine();
        } else {
            self.refine1();
        }
    }

    /// Exact zero test at the embedding.
    fn vanishes(&mut self, e: &NfElem) -> bool {
        match e {
            NfElem::Rat(c) => c.is_zero(),
            NfElem::Alg(k, p) if k.depth == 1 => {
                let b = self.b1.as_ref().unwrap();
                let g = qpoly::gcd(&rat_poly(p), &b.m);
                if g.degree() == Some(0) {
                    return false;
                }
                let gi = qpoly::primitive_int(&g);
                if b.lo == b.hi {
                    return qpoly::sign_at_int(&gi, &b.lo) == Ordering::Equal;
                }
                qpoly::sign_at_int(&gi, &b.lo) != qpoly::sign_at_int(&gi, &b.hi)
            }
            NfElem::Alg(_, p) => {
                let (m2, lo, hi) = {
                    let b = self.b2.as_ref().unwrap();
                    (b.m.clone(), b.lo.clone(), b.hi.clone())
                };
                if lo == hi {
                    let v = p.eval(&NfElem::Rat(lo));
                    return self.sign(&v) == Ordering::Equal;
                }
                let g = self.gcd(p, &m2);
                if g.degree().unwrap_or(0) == 0 {
                    return false;
                }
                let a = self.sign(&g.eval(&NfElem::Rat(lo)));
                let b = self.sign(&g.eval(&NfElem::Rat(hi)));
                a != b
            }
        }
    }

    /// True when the top-level coordinate of this embedding is a root of `g`
    /// (a polynomial over the base of the top level).
    fn top_is_root_of(&mut self, g: &UPoly<NfElem>) -> bool {
        let (lo, hi) = match (&self.b2, &self.b1) {
            (Some(b), _) => (b.lo.clone(), b.hi.clone()),
            (None, Some(b)) => (b.lo.clone(), b.hi.clone()),
            _ => unreachable!(),
        };
        if self.b2.is_none() {
            let gi = qpoly::primitive_int(&rat_poly(g));
            if lo == hi {
                return qpoly::sign_at_int(&gi, &lo) == Ordering::Equal;
            }
            return qpoly::sign_at_int(&gi, &lo) != qpoly::sign_at_int(&gi, &hi);
        }
        if lo == hi {
            return self.sign(&g.eval(&NfElem::Rat(lo))) == Ordering::Equal;
        }
        let a = self.sign(&g.eval(&NfElem::Rat(lo)));
        let b = self.sign(&g.eval(&NfElem::Rat(hi)));
        a != b
    }

    /// Drops leading coefficients that vanish at the embedding.
    pub fn trim(&mut self, p: &UPoly<NfElem>) -> UPoly<NfElem> {
        let mut cs = p.coeffs().to_vec();
        while let Some(c) = cs.last() {
            if self.sign(c) == Ordering::Equal {
                cs.pop();
            } else {
                break;
            }
        }
        UPoly::new(cs)
    }

    /// Pseudo-remainder of `a` by `b` evaluated at the embedding, with the
    /// number of multiplications by `lc(b)`. `b` must be trimmed.
    fn prem(&mut self, a: &UPoly<NfElem>, b: &UPoly<NfElem>) -> (UPoly<NfElem>, usize) {
        let db = b.degree().unwrap();
        let lb = b.lc().unwrap().clone();
        let mut r = self.trim(a);
        let mut steps = 0;
        while let Some(k) = r.degree() {
            if k < db {
                break;
            }
            let lr = r.lc().unwrap().clone();
            r = r.scale(&lb).fsub(&b.scale(&lr).shift(k - db));
            r = self.trim(&r);
            steps += 1;
        }
        (r, steps)
    }

    /// A gcd of the specialisations of `a` and `b`, up to a nonzero scalar.
    pub fn gcd(&mut self, a: &UPoly<NfElem>, b: &UPoly<NfElem>) -> UPoly<NfElem> {
        let (mut x, mut y) = (self.trim(a), self.trim(b));
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        if y.is_zero() {
            return x;
        }
        loop {
            let (r, _) = self.prem(&x, &y);
            if r.is_zero() {
                return y;
            }
            x = y;
            y = r;
        }
    }

    /// Number of distinct complex roots of the specialisation of `p`.
    pub fn distinct_complex(&mut self, p: &UPoly<NfElem>) -> usize {
        let p = self.trim(p);
        let d = p.degree().unwrap_or(0);
        if d == 0 {
            return 0;
        }
        let g = self.gcd(&p, &p.derivative());
        d - g.degree().unwrap_or(0)
    }

    /// Sturm sequence of the specialisation of `p`.
    pub fn sturm(&mut self, p: &UPoly<NfElem>) -> Vec<UPoly<NfElem>> {
        let s0 = self.trim(p);
        if s0.is_zero() {
            return Vec::new();
        }
        let mut seq = vec![s0];
        let s1 = self.trim(&seq[0].derivative());
        if s1.is_zero() {
            return seq;
        }
        seq.push(s1);
        loop {
            let n = seq.len();
            let (r, steps) = {
                let (a, b) = (seq[n - 2].clone(), seq[n - 1].clone());
                self.prem(&a, &b)
            };
            if r.is_zero() {
                break;
            }
            let lb = seq[n - 1].lc().unwrap().clone();
            let neg = self.sign(&lb) == Ordering::Less && steps % 2 == 1;
            seq.push(if neg { r } else { r.fneg() });
        }
        seq
    }

    fn variations_at(&mut self, seq: &[UPoly<NfElem>], x: &Q) -> usize {
        let xe = NfElem::Rat(x.clone());
        let signs: Vec<Ordering> = seq.iter().map(|p| p.eval(&xe)).collect::<Vec<_>>().iter().map(|v| self.sign(v)).collect();
        count_variations(&signs)
    }

    fn variations_inf(&mut self, seq: &[UPoly<NfElem>], positive: bool) -> usize {
        let mut signs = Vec::new();
        for p in seq {
            let s = self.sign(p.lc().unwrap());
            let odd = p.degree().unwrap() % 2 == 1;
            signs.push(if !positive && odd { s.reverse() } else { s });
        }
        count_variations(&signs)
    }

    /// Distinct real roots of the specialisation of `p` in `(lo, hi)`;
    /// `None` stands for an infinite endpoint.
    pub fn count_real_roots(&mut self, p: &UPoly<NfElem>, lo: Option<&Q>, hi: Option<&Q>) -> usize {
        let seq = self.sturm(p);
        if seq.is_empty() {
            return 0;
        }
        let vlo = match lo {
            Some(x) => self.variations_at(&seq, x),
            None => self.variations_inf(&seq, false),
        };
        let vhi = match hi {
            Some(x) => self.variations_at(&seq, x),
            None => self.variations_inf(&seq, true),
        };
        let at_hi = match hi {
            Some(x) => {
                let v = seq[0].eval(&NfElem::Rat(x.clone()));
                (self.sign(&v) == Ordering::Equal) as i64
            }
            None => 0,
        };
        (vlo as i64 - vhi as i64 - at_hi).max(0) as usize
    }

    /// Isolating intervals `(lo, hi)` for the real roots of the
    /// specialisation of `p`, ascending; endpoints are never roots.
    pub fn isolate(&mut self, p: &UPoly<NfElem>) -> Vec<(Q, Q)> {
        let p = self.trim(p);
        if p.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let seq = self.sturm(&p);
        // Cauchy bound from enclosures; the leading coefficient is nonzero here.
        let lc = p.lc().unwrap().clone();
        let lc_iv = loop {
            let iv = self.enclose(&lc);
            if !iv.contains_zero() {
                break iv;
            }
            self.refine_for(&lc);
        };
        let lc_min = lc_iv.lo.abs().min(lc_iv.hi.abs());
        let mut mx = Q::zero();
        for c in &p.coeffs()[..p.coeffs().len() - 1] {
            let a = self.enclose(c).abs_max();
            if a > mx {
                mx = a;
            }
        }
        let bound = Q::one() + mx / lc_min;
        let (lo, hi) = (-bound.clone(), bound);
        let vlo = self.variations_at(&seq, &lo);
        let vhi = self.variations_at(&seq, &hi);
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi, vlo - vhi, vlo, vhi)];
        while let Some((lo, hi, n, vlo, vhi)) = stack.pop() {
            match n {
                0 => {}
                1 => out.push((lo, hi)),
                _ => {
                    let m = split_points(&lo, &hi)
                        .find(|m| {
                            let v = p.eval(&NfElem::Rat(m.clone()));
                            self.sign(&v) != Ordering::Equal
                        })
                        .unwrap();
                    let vm = self.variations_at(&seq, &m);
                    stack.push((m.clone(), hi, vm - vhi, vm, vhi));
                    stack.push((lo, m, vlo - vm, vlo, vm));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

/// Exact sign of `e` at real embedding `emb` of `field`.
pub fn sign_at(e: &NfElem, field: &Arc<NumberField>, emb: usize) -> Ordering {
    Cursor::new(field, emb).sign(e)
}

/// Number of distinct complex roots over every point of `field`, one entry
/// per branch of the tower.
pub fn distinct_complex_roots(
    field: &Arc<NumberField>,
    p: &UPoly<NfElem>,
) -> ArithResult<Vec<(Arc<NumberField>, usize)>> {
    split_eval(field, |k| {
        let pk = k.import_poly(p);
        Ok(pk.squarefree_part()?.degree().unwrap())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q;

    fn field(cs: &[i64]) -> Arc<NumberField> {
        NumberField::simple(&UPoly::from_ints(cs)).unwrap()
    }

    fn r(c: i64) -> NfElem {
        NfElem::Rat(q(c))
    }

    #[test]
    fn gaussian_inverse() {
        let k = field(&[1, 0, 1]);
        let i = k.gen();
        assert_eq!(i.finv().unwrap(), i.fneg());
    }

    #[test]
    fn sqrt2_product() {
        let k = field(&[-2, 0, 1]);
        let a = k.gen();
        assert_eq!(r(1).fadd(&a).fmul(&r(1).fsub(&a)), r(-1));
    }

    #[test]
    fn zero_divisor_splits() {
        let k = field(&[-1, 0, 1]);
        let a = k.gen();
        match a.fsub(&r(1)).finv() {
            Err(ArithError::Split(ev)) => {
                assert_eq!(ev.factor, UPoly::new(vec![r(-1), r(1)]));
                let parts = k.split(&ev).unwrap();
                assert_eq!(parts.len(), 2);
                assert_eq!(parts[0].embeddings().len() + parts[1].embeddings().len(), 2);
            }
            other => panic!("expected a split, got {other:?}"),
        }
        // on the branch a = -1 the inverse is -1/2
        let res = split_eval(&k, |b| {
            let e = b.import(&a).fsub(&r(1));
            if e.fis_zero() {
                Ok(None)
            } else {
                e.finv().map(Some)
            }
        })
        .unwrap();
        let vals: Vec<_> = res.into_iter().map(|x| x.1).collect();
        assert_eq!(vals, vec![None, Some(NfElem::Rat(crate::arith::rational::qf(-1, 2)))]);
    }

    #[test]
    fn signs_at_embeddings() {
        let k = field(&[-2, 0, 1]);
        let pos = k.embeddings().iter().position(|e| e.hi > q(0)).unwrap();
        let a = k.gen();
        assert_eq!(sign_at(&a, &k, pos), Ordering::Greater);
        assert_eq!(sign_at(&a.fmul(&a).fsub(&r(2)), &k, pos), Ordering::Equal);
        assert_eq!(sign_at(&r(1).fsub(&a), &k, pos), Ordering::Less);
    }

    #[test]
    fn zero_at_one_embedding_only() {
        let k = field(&[-1, 0, 1]);
        let e = k.gen().fsub(&r(1));
        let signs: Vec<_> = (0..2).map(|i| sign_at(&e, &k, i)).collect();
        assert_eq!(signs, vec![Ordering::Less, Ordering::Equal]);
    }

    #[test]
    fn second_level() {
        let k1 = field(&[-2, 0, 1]);
        let a = k1.gen();
        // b^2 = a: real only over a = sqrt 2
        let m2 = UPoly::new(vec![a.fneg(), r(0), r(1)]);
        let k2 = NumberField::extend(&k1, &m2).unwrap();
        assert_eq!(k2.embeddings().len(), 2);
        let b = k2.gen();
        assert_eq!(b.fmul(&b), a);
        for i in 0..2 {
            // |b| = 2^(1/4) < sqrt 2
            let s = sign_at(&b.fmul(&b).fmul(&b).fmul(&b).fsub(&r(2)), &k2, i);
            assert_eq!(s, Ordering::Equal);
            assert_eq!(sign_at(&b.fsub(&a), &k2, i), Ordering::Less);
        }
    }

    #[test]
    fn second_level_zero_divisor_sign() {
        let k1 = field(&[-2, 0, 1]);
        let a = k1.gen();
        // b^2 - 2 = (b - a)(b + a) over k1
        let k2 = NumberField::extend(&k1, &UPoly::new(vec![r(-2), r(0), r(1)])).unwrap();
        assert_eq!(k2.embeddings().len(), 4);
        let e = k2.gen().fsub(&a);
        let zeros = (0..4).filter(|&i| sign_at(&e, &k2, i) == Ordering::Equal).count();
        assert_eq!(zeros, 2);
        let res = split_eval(&k2, |k| Ok(k.import(&e).fis_zero())).unwrap();
        assert_eq!(res.len(), 1);
        let res = split_eval(&k2, |k| {
            let v = k.import(&e);
            if v.fis_zero() {
                Ok(None)
            } else {
                v.finv().map(Some)
            }
        })
        .unwrap();
        assert_eq!(res.len(), 2);
        assert!(res.iter().all(|(k, _)| k.total_degree() == 2));
        assert_eq!(res.iter().map(|(k, _)| k.embeddings().len()).sum::<usize>(), 4);
    }

    #[test]
    fn complex_root_counts() {
        let k = field(&[1, 0, 1]);
        let i = k.gen();
        // t^2 - i
        let p = UPoly::new(vec![i.fneg(), r(0), r(1)]);
        let c = distinct_complex_roots(&k, &p).unwrap();
        assert_eq!(c.iter().map(|x| x.1).collect::<Vec<_>>(), vec![2]);
        assert_eq!(p.squarefree_part().unwrap(), p);
    }

    #[test]
    fn sturm_at_embedding() {
        let k = field(&[-2, 0, 1]);
        let a = k.gen();
        // t^2 - a has two real roots over a = sqrt 2 and none over -sqrt 2
        let p = UPoly::new(vec![a.fneg(), r(0), r(1)]);
        let mut counts: Vec<usize> = (0..2).map(|i| Cursor::new(&k, i).count_real_roots(&p, None, None)).collect();
        counts.sort();
        assert_eq!(counts, vec![0, 2]);
        let pos = k.embeddings().iter().position(|e| e.hi > q(0)).unwrap();
        let mut cur = Cursor::new(&k, pos);
        assert_eq!(cur.isolate(&p).len(), 2);
        assert_eq!(cur.count_real_roots(&p, Some(&q(0)), None), 1);
    }
}
