//! Canonical labelling for small graphs and isomorphism-class enumeration.
//!
//! The canonical key is the lexicographically least upper-triangle
//! bitstring (column-major: (1,2), (1,3), (2,3), (1,4), ...) over all
//! labellings compatible with an equitable-style vertex partition. The
//! partition is built from iterated degree refinement, so it is itself an
//! isomorphism invariant and the minimum is taken over an invariant set.

use std::collections::{BTreeMap, HashSet};

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_N: usize = 11;
/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUM_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub n: u8,
    /// Bit `L-1-t` holds pair number `t`, `L = n(n-1)/2`, so integer order
    /// is string order.
    pub bits: u64,
}

impl CanonicalKey {
    fn len(n: usize) -> usize {
        n * (n.saturating_sub(1)) / 2
    }

    /// The graph this key spells out.
    pub fn graph(&self) -> Graph {
        let n = self.n as usize;
        let l = Self::len(n);
        let mut g = Graph::empty(n);
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (l - 1 - t) & 1 == 1 {
                    g.add_edge0(i, j);
                }
                t += 1;
            }
        }
        g
    }
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = vec![0; n];
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors0(v).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = sig
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let next: Vec<usize> = sig.iter().map(|s| ranks[s]).collect();
        let classes_before = color.iter().collect::<HashSet<_>>().len();
        let classes_after = ranks.len();
        color = next;
        if classes_after == classes_before {
            return color;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    l: usize,
    cell_of_pos: Vec<usize>,
    members: Vec<Vec<usize>>,
    perm: Vec<usize>,
    used: Vec<bool>,
    best: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, prefix: u64, bits_done: usize) {
        if pos == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let cell = self.cell_of_pos[pos];
        for idx in 0..self.members[cell].len() {
            let v = self.members[cell][idx];
            if self.used[v] {
                continue;
            }
            let mut p = prefix;
            for q in 0..pos {
                p = p << 1 | self.g.adj0(self.perm[q], v) as u64;
            }
            let done = bits_done + pos;
            // Prune on the current best, which may have improved since the
            // parent call.
            if let Some(b) = self.best {
                if p > b >> (self.l - done) {
                    continue;
                }
            }
            self.used[v] = true;
            self.perm[pos] = v;
            self.run(pos + 1, p, done);
            self.used[v] = false;
        }
    }
}

/// Canonical key of `g`; equal keys iff isomorphic. Orders up to
/// [`MAX_CANON_N`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalKey> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(Error::param(format!(
            "canonical form supports at most {MAX_CANON_N} vertices, got {n}"
        )));
    }
    if n <= 1 {
        return Ok(CanonicalKey { n: n as u8, bits: 0 });
    }
    let color = refine(g);
    let cells = color.iter().max().unwrap() + 1;
    let mut members = vec![Vec::new(); cells];
    for (v, &c) in color.iter().enumerate() {
        members[c].push(v);
    }
    let cell_of_pos: Vec<usize> = members
        .iter()
        .enumerate()
        .flat_map(|(c, m)| std::iter::repeat_n(c, m.len()))
        .collect();
    let mut s = Search {
        g,
        n,
        l: CanonicalKey::len(n),
        cell_of_pos,
        members,
        perm: vec![0; n],
        used: vec![false; n],
        best: None,
    };
    s.run(0, 0, 0);
    Ok(CanonicalKey {
        n: n as u8,
        bits: s.best.unwrap(),
    })
}

/// Isomorphism test through canonical keys (orders up to [`MAX_CANON_N`]).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_form(a).expect("order within canonical range") == canonical_form(b).expect("order within canonical range")
}

fn extend_all(reps: &[CanonicalKey], n: usize) -> HashSet<CanonicalKey> {
    let threads = std::thread::available_parallelism()
        .map(|t| t.get())
        .unwrap_or(1)
        .min(8);
    let chunk = reps.len().div_ceil(threads).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = reps
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut seen = HashSet::new();
                    for key in part {
                        let base = key.graph();
                        for mask in 0u32..(1 << (n - 1)) {
                            let mut g = Graph::empty(n);
                            for (a, b) in base.edges() {
                                g.add_edge0(a - 1, b - 1);
                            }
                            for u in 0..n - 1 {
                                if mask >> u & 1 == 1 {
                                    g.add_edge0(u, n - 1);
                                }
                            }
                            seen.insert(canonical_form(&g).unwrap());
                        }
                    }
                    seen
                })
            })
            .collect();
        let mut all = HashSet::new();
        for h in handles {
            all.extend(h.join().expect("enumeration worker panicked"));
        }
        all
    })
}

/// One canonical representative per isomorphism class on `n` vertices,
/// sorted by canonical key.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUM_N {
        return Err(Error::param(format!(
            "enumeration supports at most {MAX_ENUM_N} vertices, got {n}"
        )));
    }
    let mut reps = vec![CanonicalKey { n: 0, bits: 0 }];
    for m in 1..=n {
        let mut next: Vec<CanonicalKey> = extend_all(&reps, m).into_iter().collect();
        next.sort_unstable();
        reps = next;
    }
    Ok(reps.into_iter().map(|k| k.graph()).collect())
}
