//! Buchberger's algorithm on a dense renumbering of the variables.
//!
//! Public polynomials are keyed by [`Variable`]; here every variable gets a
//! `u16` rank so that monomial comparison, divisibility and the elimination
//! block test are plain integer work. Ranks respect the order: for an
//! elimination order the eliminated variables take ranks `0..split` and the
//! kept ones follow, each block in enumeration order.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};
use std::time::Instant;

use smallvec::SmallVec;

use crate::error::Cap;
use crate::poly::{revlex_cmp, Monomial, MonomialOrder, Polynomial, Rational, Variable};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Mono {
    e: SmallVec<[(u16, u16); 8]>,
    deg: u32,
    mask: u64,
}

impl Mono {
    fn new(e: SmallVec<[(u16, u16); 8]>) -> Self {
        let deg = e.iter().map(|p| p.1 as u32).sum();
        let mask = e.iter().fold(0u64, |m, p| m | (1u64 << (p.0 % 64)));
        Mono { e, deg, mask }
    }

    fn one() -> Self {
        Mono::new(SmallVec::new())
    }

    fn is_one(&self) -> bool {
        self.e.is_empty()
    }

    fn divides(&self, other: &Mono) -> bool {
        if self.deg > other.deg || self.mask & !other.mask != 0 {
            return false;
        }
        let mut j = 0;
        for &(v, x) in &self.e {
            while j < other.e.len() && other.e[j].0 < v {
                j += 1;
            }
            if j == other.e.len() || other.e[j].0 != v || other.e[j].1 < x {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `self / d`; caller guarantees divisibility.
    fn quotient(&self, d: &Mono) -> Mono {
        let mut out = SmallVec::with_capacity(self.e.len());
        let mut j = 0;
        for &(v, x) in &self.e {
            if j < d.e.len() && d.e[j].0 == v {
                let r = x - d.e[j].1;
                if r > 0 {
                    out.push((v, r));
                }
                j += 1;
            } else {
                out.push((v, x));
            }
        }
        Mono::new(out)
    }

    fn combine(&self, other: &Mono, f: impl Fn(u16, u16) -> u16) -> Mono {
        let mut out = SmallVec::with_capacity(self.e.len() + other.e.len());
        let (mut i, mut j) = (0, 0);
        while i < self.e.len() && j < other.e.len() {
            let (a, b) = (self.e[i], other.e[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push((a.0, f(a.1, 0)));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b.0, f(0, b.1)));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, f(a.1, b.1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.e[i..].iter().map(|&(v, x)| (v, f(x, 0))));
        out.extend(other.e[j..].iter().map(|&(v, x)| (v, f(0, x))));
        Mono::new(out)
    }

    fn mul(&self, other: &Mono) -> Mono {
        if other.is_one() {
            return self.clone();
        }
        self.combine(other, |a, b| a + b)
    }

    fn lcm(&self, other: &Mono) -> Mono {
        self.combine(other, |a, b| a.max(b))
    }

    fn coprime(&self, other: &Mono) -> bool {
        if self.mask & other.mask == 0 {
            return true;
        }
        let (mut i, mut j) = (0, 0);
        while i < self.e.len() && j < other.e.len() {
            match self.e[i].0.cmp(&other.e[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }
}

/// Order on ranked monomials. `split == 0` is plain grevlex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RankOrder {
    lex: bool,
    split: u16,
}

impl RankOrder {
    pub(crate) fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        if self.lex {
            return crate::poly::lex_cmp(&a.e, &b.e);
        }
        if self.split == 0 {
            return a.deg.cmp(&b.deg).then_with(|| revlex_cmp(&a.e, &b.e));
        }
        let ca = a.e.partition_point(|p| p.0 < self.split);
        let cb = b.e.partition_point(|p| p.0 < self.split);
        let (ah, al) = a.e.split_at(ca);
        let (bh, bl) = b.e.split_at(cb);
        let dah: u32 = ah.iter().map(|p| p.1 as u32).sum();
        let dbh: u32 = bh.iter().map(|p| p.1 as u32).sum();
        dah.cmp(&dbh)
            .then_with(|| revlex_cmp(ah, bh))
            .then_with(|| (a.deg - dah).cmp(&(b.deg - dbh)))
            .then_with(|| revlex_cmp(al, bl))
    }
}

pub(crate) type Term = (Mono, Rational);

/// Polynomial with terms in strictly descending order.
#[derive(Clone, Debug, Default)]
pub(crate) struct Poly {
    t: Vec<Term>,
}

impl Poly {
    fn lm(&self) -> &Mono {
        &self.t[0].0
    }

    fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.t.len() == 1 && self.t[0].0.is_one()
    }

    fn degree(&self) -> u32 {
        self.t.iter().map(|t| t.0.deg).max().unwrap_or(0)
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.t.first() {
            if !lc.is_one() {
                let inv = lc.inv();
                for t in &mut self.t {
                    t.1 = &t.1 * &inv;
                }
            }
        }
    }
}

/// `a - c * m * b`, all inputs sorted descending.
fn sub_scaled(ord: RankOrder, a: &[Term], c: &Rational, m: &Mono, b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(mb, cb)| (mb.mul(m), cb * c)).peekable();
    while i < a.len() {
        let Some(next) = bi.peek() else { break };
        match ord.cmp(&a[i].0, &next.0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (mb, cb) = bi.next().unwrap();
                out.push((mb, -cb));
            }
            Ordering::Equal => {
                let (_, cb) = bi.next().unwrap();
                let s = &a[i].1 - &cb;
                if !s.is_zero() {
                    out.push((a[i].0.clone(), s));
                }
                i += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(bi.map(|(mb, cb)| (mb, -cb)));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Smallest lcm first.
    Normal,
    /// Smallest sugar degree first, ties by lcm.
    Sugar,
}

#[derive(Clone, Debug)]
pub struct Limits {
    pub deadline: Option<Instant>,
    pub timeout_secs: f64,
    pub max_terms: usize,
    pub max_degree: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct GbStats {
    pub spairs_processed: u64,
    pub reductions_to_zero: u64,
    pub max_degree: u32,
    pub basis_size: usize,
}

struct Pair {
    lcm: Mono,
    sugar: u32,
    i: usize,
    j: usize,
    ord: RankOrder,
    strategy: Strategy,
}

impl Pair {
    fn key_cmp(&self, other: &Pair) -> Ordering {
        let by_lcm = || self.ord.cmp(&self.lcm, &other.lcm);
        let first = match self.strategy {
            Strategy::Normal => by_lcm(),
            Strategy::Sugar => self.sugar.cmp(&other.sugar).then_with(by_lcm),
        };
        first.then(self.j.cmp(&other.j)).then(self.i.cmp(&other.i))
    }
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.key_cmp(other) == Ordering::Equal
    }
}
impl Eq for Pair {}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair {
    // Reversed: BinaryHeap pops the smallest key.
    fn cmp(&self, other: &Self) -> Ordering {
        other.key_cmp(self)
    }
}

/// Variable ranking for one computation.
#[derive(Clone, Debug)]
pub(crate) struct Ranking {
    pub(crate) vars: Vec<Variable>,
    rank: HashMap<Variable, u16>,
    pub(crate) order: RankOrder,
}

impl Ranking {
    pub(crate) fn new(order: &MonomialOrder, vars: impl IntoIterator<Item = Variable>) -> Result<Self, crate::Error> {
        let mut vars: Vec<Variable> = vars.into_iter().collect();
        vars.sort();
        vars.dedup();
        if vars.len() > u16::MAX as usize {
            return Err(crate::Error::param("too many variables for the engine"));
        }
        // Stable partition: eliminated block first.
        let (mut hi, lo): (Vec<_>, Vec<_>) = vars.into_iter().partition(|v| order.is_eliminated(*v));
        let split = hi.len() as u16;
        hi.extend(lo);
        let rank = hi.iter().enumerate().map(|(i, v)| (*v, i as u16)).collect();
        let ord = RankOrder {
            lex: matches!(order, MonomialOrder::Lex),
            split,
        };
        Ok(Ranking {
            vars: hi,
            rank,
            order: ord,
        })
    }

    pub(crate) fn mono(&self, m: &Monomial) -> Mono {
        let mut e: SmallVec<[(u16, u16); 8]> = m
            .entries()
            .iter()
            .map(|&(v, x)| (self.rank[&v], u16::try_from(x).expect("exponent exceeds engine range")))
            .collect();
        e.sort_unstable_by_key(|p| p.0);
        Mono::new(e)
    }

    pub(crate) fn poly(&self, p: &Polynomial) -> Poly {
        let mut t: Vec<Term> = p.terms().iter().map(|(m, c)| (self.mono(m), c.clone())).collect();
        t.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        Poly { t }
    }

    pub(crate) fn back(&self, p: &Poly) -> Polynomial {
        Polynomial::from_terms(p.t.iter().map(|(m, c)| {
            (
                Monomial::from_pairs(m.e.iter().map(|&(r, x)| (self.vars[r as usize], x as u32))),
                c.clone(),
            )
        }))
    }
}

/// Reducer set: monic polynomials with their leading monomials.
pub(crate) struct Reducers<'a> {
    pub(crate) polys: Vec<&'a Poly>,
}

impl Reducers<'_> {
    fn find(&self, m: &Mono) -> Option<&Poly> {
        self.polys.iter().copied().find(|g| g.lm().divides(m))
    }
}

/// Full reduction of `f` by `reducers` (monic). `tick` is called every few
/// steps and may abort.
fn reduce_full(
    ord: RankOrder,
    f: Vec<Term>,
    reducers: &Reducers<'_>,
    tick: &mut dyn FnMut(usize) -> Result<(), Cap>,
) -> Result<Poly, Cap> {
    let mut p = f;
    let mut start = 0;
    let mut r: Vec<Term> = Vec::new();
    let mut steps = 0usize;
    while start < p.len() {
        match reducers.find(&p[start].0) {
            Some(g) => {
                let q = p[start].0.quotient(g.lm());
                let c = p[start].1.clone();
                p = sub_scaled(ord, &p[start + 1..], &c, &q, &g.t[1..]);
                start = 0;
                steps += 1;
                if steps.is_multiple_of(64) {
                    tick(p.len() + r.len())?;
                }
            }
            None => {
                r.push(std::mem::replace(&mut p[start], (Mono::one(), Rational::zero())));
                start += 1;
            }
        }
    }
    Ok(Poly { t: r })
}

/// Normal form of `p` modulo `basis`, in the public representation.
pub(crate) fn normal_form(ranking: &Ranking, p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let polys: Vec<Poly> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| {
            let mut q = ranking.poly(b);
            q.make_monic();
            q
        })
        .collect();
    let reducers = Reducers {
        polys: polys.iter().collect(),
    };
    let f = ranking.poly(p);
    let out = reduce_full(ranking.order, f.t, &reducers, &mut |_| Ok(())).expect("no caps set");
    ranking.back(&out)
}

pub(crate) struct Buchberger {
    ord: RankOrder,
    strategy: Strategy,
    polys: Vec<Poly>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: BinaryHeap<Pair>,
    limits: Limits,
    active_terms: usize,
    pub(crate) stats: GbStats,
}

pub(crate) enum Outcome {
    Basis(Vec<Poly>),
    Unit,
}

impl Buchberger {
    pub(crate) fn new(ord: RankOrder, strategy: Strategy, limits: Limits) -> Self {
        Buchberger {
            ord,
            strategy,
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: BinaryHeap::new(),
            limits,
            active_terms: 0,
            stats: GbStats::default(),
        }
    }

    fn check(&self, live_terms: usize) -> Result<(), Cap> {
        if let Some(d) = self.limits.deadline {
            if Instant::now() >= d {
                return Err(Cap::Timeout {
                    seconds: self.limits.timeout_secs,
                });
            }
        }
        if self.active_terms + live_terms > self.limits.max_terms {
            return Err(Cap::Terms {
                limit: self.limits.max_terms,
            });
        }
        Ok(())
    }

    fn reducers(&self) -> Reducers<'_> {
        Reducers {
            polys: self
                .polys
                .iter()
                .zip(&self.active)
                .filter(|(_, a)| **a)
                .map(|(p, _)| p)
                .collect(),
        }
    }

    fn reduce(&self, f: Vec<Term>) -> Result<Poly, Cap> {
        let reducers = self.reducers();
        let mut tick = |live: usize| self.check(live);
        reduce_full(self.ord, f, &reducers, &mut tick)
    }

    fn note_degree(&mut self, d: u32) -> Result<(), Cap> {
        self.stats.max_degree = self.stats.max_degree.max(d);
        match self.limits.max_degree {
            Some(limit) if d > limit => Err(Cap::Degree { limit }),
            _ => Ok(()),
        }
    }

    /// Gebauer–Möller installation of a new monic, fully reduced element.
    fn insert(&mut self, h: Poly, sugar: u32) {
        let hi = self.polys.len();
        let hlm = h.lm().clone();
        let ord = self.ord;
        let strategy = self.strategy;

        let mut fresh: Vec<(usize, Mono, bool)> = Vec::new();
        for (g, p) in self.polys.iter().enumerate() {
            if self.active[g] {
                fresh.push((g, p.lm().lcm(&hlm), p.lm().coprime(&hlm)));
            }
        }
        // Chain criterion among the new pairs.
        let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
        while let Some((g, l, cop)) = fresh.pop() {
            let dominated = fresh.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l));
            if cop || !dominated {
                kept.push((g, l, cop));
            }
        }
        // Old pairs made redundant by h.
        let old = std::mem::take(&mut self.pairs).into_vec();
        let polys = &self.polys;
        let survivors: Vec<Pair> = old
            .into_iter()
            .filter(|p| {
                if !hlm.divides(&p.lcm) {
                    return true;
                }
                let li = polys[p.i].lm().lcm(&hlm);
                let lj = polys[p.j].lm().lcm(&hlm);
                li == p.lcm || lj == p.lcm
            })
            .collect();
        self.pairs = BinaryHeap::from(survivors);
        for (g, l, cop) in kept {
            if cop {
                continue;
            }
            let s = (self.sugar[g] + l.deg - self.polys[g].lm().deg).max(sugar + l.deg - hlm.deg);
            self.pairs.push(Pair {
                lcm: l,
                sugar: s,
                i: g,
                j: hi,
                ord,
                strategy,
            });
        }
        for g in 0..self.polys.len() {
            if self.active[g] && hlm.divides(self.polys[g].lm()) {
                self.active[g] = false;
                self.active_terms -= self.polys[g].t.len();
            }
        }
        self.active_terms += h.t.len();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Mono) -> Vec<Term> {
        let (f, g) = (&self.polys[i], &self.polys[j]);
        let qf = lcm.quotient(f.lm());
        let qg = lcm.quotient(g.lm());
        let a: Vec<Term> = f.t[1..].iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
        sub_scaled(self.ord, &a, &Rational::one(), &qg, &g.t[1..])
    }

    pub(crate) fn run(&mut self, input: Vec<Poly>) -> Result<Outcome, Cap> {
        for f in input {
            if f.is_zero() {
                continue;
            }
            self.check(f.t.len())?;
            let s = f.degree();
            let mut h = self.reduce(f.t)?;
            if h.is_zero() {
                continue;
            }
            if h.is_constant() {
                return Ok(Outcome::Unit);
            }
            h.make_monic();
            self.note_degree(h.degree())?;
            self.insert(h, s);
        }
        while let Some(pair) = self.pairs.pop() {
            self.check(0)?;
            self.stats.spairs_processed += 1;
            let s = self.spoly(pair.i, pair.j, &pair.lcm);
            let mut h = self.reduce(s)?;
            if h.is_zero() {
                self.stats.reductions_to_zero += 1;
                continue;
            }
            if h.is_constant() {
                return Ok(Outcome::Unit);
            }
            h.make_monic();
            self.note_degree(h.degree())?;
            self.insert(h, pair.sugar);
        }
        self.finish()
    }

    /// Interreduce the active elements into the reduced basis, sorted by
    /// ascending leading monomial.
    fn finish(&mut self) -> Result<Outcome, Cap> {
        let mut idx: Vec<usize> = (0..self.polys.len()).filter(|&g| self.active[g]).collect();
        idx.sort_by(|&a, &b| self.ord.cmp(self.polys[a].lm(), self.polys[b].lm()));
        let mut out = Vec::with_capacity(idx.len());
        for (pos, &g) in idx.iter().enumerate() {
            let others = Reducers {
                polys: idx
                    .iter()
                    .enumerate()
                    .filter(|(p, _)| *p != pos)
                    .map(|(_, &o)| &self.polys[o])
                    .collect(),
            };
            let p = &self.polys[g];
            let mut tick = |live: usize| self.check(live);
            let tail = reduce_full(self.ord, p.t[1..].to_vec(), &others, &mut tick)?;
            let mut t = Vec::with_capacity(tail.t.len() + 1);
            t.push(p.t[0].clone());
            t.extend(tail.t);
            out.push(Poly { t });
        }
        self.stats.basis_size = out.len();
        Ok(Outcome::Basis(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[(u16, u16)]) -> Mono {
        Mono::new(e.iter().copied().collect())
    }

    #[test]
    fn mono_ops() {
        let a = m(&[(0, 2), (3, 1)]);
        let b = m(&[(0, 1), (2, 1)]);
        assert!(!b.divides(&a));
        assert!(m(&[(0, 1)]).divides(&a));
        assert_eq!(a.lcm(&b), m(&[(0, 2), (2, 1), (3, 1)]));
        assert_eq!(a.quotient(&m(&[(0, 2)])), m(&[(3, 1)]));
        assert!(m(&[(1, 1)]).coprime(&a));
        assert!(!b.coprime(&a));
        // Variables 64 apart share a mask bit but are still coprime.
        assert!(m(&[(1, 1)]).coprime(&m(&[(65, 1)])));
        assert!(!m(&[(1, 1)]).divides(&m(&[(65, 1)])));
    }

    #[test]
    fn block_rank_order() {
        let ord = RankOrder { lex: false, split: 1 };
        // rank 0 eliminated: x0 > x1^5
        assert_eq!(ord.cmp(&m(&[(0, 1)]), &m(&[(1, 5)])), Ordering::Greater);
        let grevlex = RankOrder { lex: false, split: 0 };
        assert_eq!(grevlex.cmp(&m(&[(0, 1)]), &m(&[(1, 5)])), Ordering::Less);
    }
}
