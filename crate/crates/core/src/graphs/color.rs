//! Exact colouring by DSATUR-ordered backtracking with forward checking.

use super::Graph;

/// Per-component solver state. Colours are `0..k`.
struct Solver<'a> {
    nbrs: &'a [Vec<usize>],
    k: usize,
    color: Vec<Option<u8>>,
    // cnt[v*k + c]: coloured neighbours of v carrying colour c
    cnt: Vec<u16>,
    mask: Vec<u64>,
    degree: Vec<usize>,
}

impl Solver<'_> {
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = Some(c as u8);
        let full = if self.k == 64 { u64::MAX } else { (1u64 << self.k) - 1 };
        let mut ok = true;
        for &u in &self.nbrs[v] {
            if self.color[u].is_some() {
                continue;
            }
            let slot = &mut self.cnt[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.mask[u] |= 1 << c;
                if self.mask[u] == full {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, c: usize) {
        for &u in &self.nbrs[v] {
            if self.color[u].is_some() {
                continue;
            }
            let slot = &mut self.cnt[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.mask[u] &= !(1 << c);
            }
        }
        self.color[v] = None;
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize, usize)> = None;
        for v in 0..self.color.len() {
            if self.color[v].is_some() {
                continue;
            }
            let key = (self.mask[v].count_ones(), self.degree[v], usize::MAX - v);
            if best.is_none_or(|b| key > b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, v)| usize::MAX - v)
    }

    fn search(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else { return true };
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.mask[v] >> c & 1 == 1 {
                continue;
            }
            let ok = self.assign(v, c);
            if ok && self.search(used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

fn greedy_clique(g: &Graph, verts: &[usize]) -> usize {
    // Grow from each vertex, taking the highest-degree compatible neighbour.
    let mut best = if verts.is_empty() { 0 } else { 1 };
    for &s in verts {
        let mut clique = vec![s];
        let mut cand: Vec<usize> = g.neighbors0(s).collect();
        while !cand.is_empty() {
            let &v = cand
                .iter()
                .max_by_key(|&&u| cand.iter().filter(|&&w| g.adj0(u, w)).count())
                .unwrap();
            clique.push(v);
            cand.retain(|&u| u != v && g.adj0(u, v));
        }
        best = best.max(clique.len());
    }
    best
}

fn color_component(g: &Graph, verts: &[usize], k: usize) -> Option<Vec<u8>> {
    if verts.len() == 1 {
        return (k >= 1).then(|| vec![0]);
    }
    if k == 0 || greedy_clique(g, verts) > k {
        return None;
    }
    let pos: std::collections::HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nbrs: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| g.neighbors0(v).map(|u| pos[&u]).collect())
        .collect();
    let degree = nbrs.iter().map(|n| n.len()).collect();
    let m = verts.len();
    let mut s = Solver {
        nbrs: &nbrs,
        k,
        color: vec![None; m],
        cnt: vec![0; m * k],
        mask: vec![0; m],
        degree,
    };
    if s.search(0) {
        Some(s.color.into_iter().map(|c| c.unwrap()).collect())
    } else {
        None
    }
}

/// A proper colouring with colours `1..=k`, if one exists.
pub fn find_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    assert!(k <= 64, "colour count above 64");
    let mut out = vec![0; g.n()];
    for comp in g.components() {
        let verts: Vec<usize> = comp.iter().map(|v| v - 1).collect();
        let cols = color_component(g, &verts, k)?;
        for (v, c) in verts.into_iter().zip(cols) {
            out[v] = c as usize + 1;
        }
    }
    Some(out)
}

pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    if g.n() == 0 {
        return true;
    }
    if k >= g.n() {
        return true;
    }
    find_coloring(g, k).is_some()
}

/// χ(G); 0 for the null graph.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut k = g
        .components()
        .iter()
        .map(|c| greedy_clique(g, &c.iter().map(|v| v - 1).collect::<Vec<_>>()))
        .max()
        .unwrap_or(1);
    while !is_k_colorable(g, k) {
        k += 1;
    }
    k
}

/// χ(G) = k, and deleting any edge or any vertex makes G (k-1)-colourable.
pub fn is_k_critical(g: &Graph, k: usize) -> bool {
    if k == 0 || chromatic_number(g) != k {
        return false;
    }
    let edges_ok = g
        .edges()
        .into_iter()
        .all(|(a, b)| is_k_colorable(&g.without_edge(a, b), k - 1));
    edges_ok && (1..=g.n()).all(|v| is_k_colorable(&g.without_vertex(v), k - 1))
}

/// χ(G) = k and deleting any single vertex makes G (k-1)-colourable.
pub fn is_vertex_critical(g: &Graph, k: usize) -> bool {
    k > 0 && chromatic_number(g) == k && (1..=g.n()).all(|v| is_k_colorable(&g.without_vertex(v), k - 1))
}
