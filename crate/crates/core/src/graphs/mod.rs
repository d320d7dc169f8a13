//! Small simple graphs: constructions, invariants, colouring, criticality,
//! isomorphism classes and text formats.
//!
//! Vertices are numbered `1..=n` in every public function.

mod canon;
mod color;
mod format;
mod named;

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

pub use canon::{are_isomorphic, canonical_form, enumerate_graphs, CanonicalKey, MAX_CANON_N, MAX_ENUM_N};
pub use color::{chromatic_number, find_coloring, is_k_colorable, is_k_critical, is_vertex_critical};
pub use format::{edge_list_emit, edge_list_parse, graph6_emit, graph6_parse};
pub use named::{a4_family, grotzsch, h0, h_star, load_graph, parse_graph_spec};

/// Undirected simple graph stored as adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from 1-based edges. Loops and out-of-range endpoints
    /// are rejected; repeated edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::param(format!("bad edge {a}-{b} for {n} vertices")));
            }
            g.add_edge0(a - 1, b - 1);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn adj0(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub(crate) fn add_edge0(&mut self, a: usize, b: usize) {
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
        self.rows[b * self.words + a / 64] |= 1 << (a % 64);
    }

    pub(crate) fn remove_edge0(&mut self, a: usize, b: usize) {
        self.rows[a * self.words + b / 64] &= !(1 << (b % 64));
        self.rows[b * self.words + a / 64] &= !(1 << (a % 64));
    }

    pub(crate) fn neighbors0(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Whether `i` and `j` (1-based) are adjacent.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && (1..=self.n).contains(&i) && (1..=self.n).contains(&j) && self.adj0(i - 1, j - 1)
    }

    /// Edges `(i, j)` with `i < j`, 1-based, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in self.neighbors0(a).filter(|&b| b > a) {
                out.push((a + 1, b + 1));
            }
        }
        out
    }

    /// Neighbours of `v` (1-based, ascending).
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.neighbors0(v - 1).map(|u| u + 1).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v - 1).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (1..=self.n).map(|v| self.degree(v)).collect()
    }

    /// δ(G); zero for the null graph.
    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn without_edge(&self, i: usize, j: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge0(i - 1, j - 1);
        g
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (1..=self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced on `vertices` (1-based), renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &va) in vertices.iter().enumerate() {
            for (b, &vb) in vertices.iter().enumerate().skip(a + 1) {
                if self.adj0(va - 1, vb - 1) {
                    g.add_edge0(a, b);
                }
            }
        }
        g
    }

    /// Relabels so that old vertex `v` becomes `perm[v-1]` (both 1-based).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut g = Graph::empty(self.n);
        for (a, b) in self.edges() {
            g.add_edge0(perm[a - 1] - 1, perm[b - 1] - 1);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.adj0(a, b) {
                    g.add_edge0(a, b);
                }
            }
        }
        g
    }

    /// Connected components as sorted 1-based vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for u in self.neighbors0(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp.into_iter().map(|v| v + 1).collect());
        }
        out
    }

    /// ω(G) by branch and bound over bitsets.
    pub fn clique_number(&self) -> usize {
        let all: Vec<u64> = (0..self.words)
            .map(|wi| {
                let lo = wi * 64;
                let hi = ((wi + 1) * 64).min(self.n);
                if hi <= lo {
                    0
                } else if hi - lo == 64 {
                    u64::MAX
                } else {
                    (1u64 << (hi - lo)) - 1
                }
            })
            .collect();
        let mut best = 0;
        self.clique_rec(0, all, &mut best);
        best
    }

    fn clique_rec(&self, size: usize, cand: Vec<u64>, best: &mut usize) {
        let count: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
        if count == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + count <= *best {
            return;
        }
        let mut cand = cand;
        while let Some(v) = first_bit(&cand) {
            let left: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
            if size + left <= *best {
                return;
            }
            let next: Vec<u64> = cand.iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
            self.clique_rec(size + 1, next, best);
            cand[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .into_iter()
            .all(|(a, b)| self.row(a - 1).iter().zip(self.row(b - 1)).all(|(x, y)| x & y == 0))
    }

    /// Whether vertex `v` (1-based) lies in some clique on `s` vertices.
    pub fn vertex_in_clique(&self, v: usize, s: usize) -> bool {
        if s <= 1 {
            return true;
        }
        let nb = self.neighbors(v);
        let sub = self.induced(&nb);
        sub.clique_number() >= s - 1
    }

    /// Whether some vertex lies in no clique on `s` vertices.
    pub fn has_vertex_in_no_clique(&self, s: usize) -> bool {
        (1..=self.n).any(|v| !self.vertex_in_clique(v, s))
    }

    /// Uniform random graph with edge probability `p`.
    pub fn random(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
        let mut g = Graph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge0(a, b);
                }
            }
        }
        g
    }
}

fn first_bit(ws: &[u64]) -> Option<usize> {
    ws.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", edge_list_emit(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&edge_list_emit(self))
    }
}

/// G×H: `(i,i')` becomes vertex `(i-1)|V(H)| + i'`.
pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.n;
    let mut out = Graph::empty(g.n * m);
    for (a, b) in g.edges() {
        for (c, d) in h.edges() {
            let idx = |i: usize, j: usize| (i - 1) * m + (j - 1);
            out.add_edge0(idx(a, c), idx(b, d));
            out.add_edge0(idx(a, d), idx(b, c));
        }
    }
    out
}

/// G+H: disjoint union with every vertex of G joined to every vertex of H.
/// Vertices of H are shifted by |V(G)|.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.n;
    let mut out = Graph::empty(n + h.n);
    for (a, b) in g.edges() {
        out.add_edge0(a - 1, b - 1);
    }
    for (a, b) in h.edges() {
        out.add_edge0(n + a - 1, n + b - 1);
    }
    for a in 0..n {
        for b in 0..h.n {
            out.add_edge0(a, n + b);
        }
    }
    out
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.n;
    let mut out = Graph::empty(n + h.n);
    for (a, b) in g.edges() {
        out.add_edge0(a - 1, b - 1);
    }
    for (a, b) in h.edges() {
        out.add_edge0(n + a - 1, n + b - 1);
    }
    out
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge0(a, b);
        }
    }
    g
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1)))
}

/// Mycielski construction: originals `1..=n`, shadows `n+1..=2n` (shadow of
/// `v` is `n+v`, adjacent to N(v)), and hub `2n+1` adjacent to all shadows.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n;
    let mut out = Graph::empty(2 * n + 1);
    for (a, b) in g.edges() {
        out.add_edge0(a - 1, b - 1);
        out.add_edge0(n + a - 1, b - 1);
        out.add_edge0(a - 1, n + b - 1);
    }
    for v in 0..n {
        out.add_edge0(n + v, 2 * n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn product_examples() {
        let k2 = complete(2);
        let p = tensor_product(&k2, &k2);
        assert_eq!((p.n(), p.edge_count()), (4, 2));
        let c5k2 = tensor_product(&cycle(5).unwrap(), &k2);
        assert_eq!((c5k2.n(), c5k2.edge_count()), (10, 10));
        assert!(are_isomorphic(&c5k2, &cycle(10).unwrap()));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = Graph::random(5, 0.5, &mut rng);
            let h = Graph::random(4, 0.5, &mut rng);
            assert_eq!(tensor_product(&g, &h).edge_count(), 2 * g.edge_count() * h.edge_count());
        }
    }

    #[test]
    fn product_indexing() {
        let g = Graph::from_edges(2, [(1, 2)]).unwrap();
        let h = Graph::from_edges(3, [(1, 3)]).unwrap();
        let p = tensor_product(&g, &h);
        // (1,1)~(2,3) and (1,3)~(2,1)
        assert_eq!(p.edges(), vec![(1, 6), (3, 4)]);
    }

    #[test]
    fn join_and_friends() {
        assert_eq!(join(&complete(2), &complete(3)), complete(5));
        let c5 = cycle(5).unwrap();
        assert_eq!(join(&Graph::empty(0), &c5), c5);
        let j = join(&complete(1), &c5);
        assert_eq!(j.edge_count(), 5 + 5);
        assert!(cycle(2).is_err());
        let m = mycielskian(&c5);
        assert_eq!((m.n(), m.edge_count()), (11, 20));
        assert!(m.is_triangle_free());
    }

    #[test]
    fn invariants() {
        let k5 = complete(5);
        assert_eq!((k5.clique_number(), k5.min_degree()), (5, 4));
        assert_eq!(cycle(5).unwrap().clique_number(), 2);
        assert_eq!(Graph::empty(3).clique_number(), 1);
        assert_eq!(Graph::empty(0).clique_number(), 0);
        let c5 = cycle(5).unwrap();
        assert!(c5.has_vertex_in_no_clique(3));
        assert!(!k5.has_vertex_in_no_clique(3));
        assert_eq!(disjoint_union(&c5, &k5).components().len(), 2);
    }

    #[test]
    fn wide_rows() {
        let c = cycle(150).unwrap();
        assert_eq!(c.edge_count(), 150);
        assert!(c.has_edge(150, 1));
        assert_eq!(c.neighbors(70), vec![69, 71]);
        assert_eq!(c.clique_number(), 2);
    }
}
