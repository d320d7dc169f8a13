//! Combinatorial pair sets W, V and V' on labeled graphs of fixed order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{chromatic_number, is_k_colorable, is_k_critical, tensor_product, Graph};

/// Which set a [`GraphPairSet`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairSetKind {
    W,
    V,
    VPrime,
}

/// Reading of the "vertex in no (k-1)-clique" condition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum V3Mode {
    /// Some vertex lies in no (k-1)-clique.
    #[default]
    Literal,
    /// Vertex 1 lies in no (k-1)-clique, as the algebraic encoding has it.
    VertexOne,
}

#[derive(Clone, Debug)]
pub struct SetOptions {
    pub v3: V3Mode,
    /// Pair universes up to `2^max_bits` are enumerated; larger ones are sampled.
    pub max_bits: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SetOptions {
    fn default() -> Self {
        SetOptions {
            v3: V3Mode::Literal,
            max_bits: 14,
            samples: 4096,
            seed: 0x5eed,
        }
    }
}

/// Labeled pairs `(G, H)` with `|G| = n`, `|H| = n'` satisfying the
/// defining conditions of `kind`.
#[derive(Clone, Debug)]
pub struct GraphPairSet {
    pub kind: PairSetKind,
    pub k: usize,
    pub n: usize,
    pub np: usize,
    /// False when the universe was sampled rather than enumerated.
    pub exhaustive: bool,
    /// Number of pairs tested.
    pub examined: usize,
    pub members: Vec<(Graph, Graph)>,
}

impl GraphPairSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &Graph, h: &Graph) -> bool {
        self.members.iter().any(|(a, b)| a == g && b == h)
    }
}

/// Number of vertex pairs on `n` vertices.
fn slots(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bit `b` of `mask` is the `b`-th pair `(i, j)`, `i < j`, in row-major order.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut b = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if mask >> b & 1 == 1 {
                edges.push((i, j));
            }
            b += 1;
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// `G - uv` with `u` and `v` identified (`v` removed).
fn contract(g: &Graph, u: usize, v: usize) -> Graph {
    let keep: Vec<usize> = (1..=g.n()).filter(|&w| w != v).collect();
    let pos = |w: usize| keep.iter().position(|&x| x == w).unwrap() + 1;
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        if (a, b) == (u.min(v), u.max(v)) {
            continue;
        }
        let a = if a == v { u } else { a };
        let b = if b == v { u } else { b };
        if a != b {
            edges.push((pos(a), pos(b)));
        }
    }
    Graph::from_edges(keep.len(), edges).expect("contraction keeps endpoints in range")
}

/// Every edge can be deleted with its ends given the same colour.
fn cond_v1(g: &Graph, k: usize) -> bool {
    g.n() > 0
        && g.min_degree() >= 1
        && g.edges()
            .iter()
            .all(|&(u, v)| is_k_colorable(&contract(g, u, v), k - 1))
}

/// Single-graph facts the pair conditions are made of.
#[derive(Clone, Debug)]
struct Facts {
    chi: usize,
    omega: usize,
    v1: bool,
    v3: bool,
    v6: bool,
    critical: bool,
}

impl Facts {
    fn of(g: &Graph, k: usize, mode: V3Mode) -> Facts {
        let v3 = match mode {
            V3Mode::Literal => g.has_vertex_in_no_clique(k - 1),
            V3Mode::VertexOne => g.n() >= 1 && !g.vertex_in_clique(1, k - 1),
        };
        Facts {
            chi: chromatic_number(g),
            omega: g.clique_number(),
            v1: cond_v1(g, k),
            v3,
            v6: g.n() > 0 && g.min_degree() + 1 >= k,
            critical: is_k_critical(g, k),
        }
    }

    /// The conditions on one side of a V pair.
    fn v_side(&self) -> bool {
        self.v1 && self.v3 && self.v6
    }
}

fn member(kind: PairSetKind, k: usize, g: &Graph, h: &Graph, fg: &Facts, fh: &Facts) -> bool {
    let x1 = || is_k_colorable(&tensor_product(g, h), k - 1);
    match kind {
        PairSetKind::W => fg.chi.min(fh.chi) < k && x1(),
        PairSetKind::V | PairSetKind::VPrime => {
            let v5 = fg.omega.max(fh.omega) < k && fg.omega.min(fh.omega) + 1 < k;
            let v8 = kind == PairSetKind::V || (fg.critical && fh.critical);
            fg.v_side() && fh.v_side() && v5 && v8 && x1()
        }
    }
}

/// Builds W, V or V' for `(k, n, n')`.
pub fn build_set(kind: PairSetKind, k: usize, n: usize, np: usize, opts: &SetOptions) -> Result<GraphPairSet> {
    if k < 2 || n == 0 || np == 0 {
        return Err(Error::param(format!("need k ≥ 2 and n, n' ≥ 1, got ({k}, {n}, {np})")));
    }
    let (bg, bh) = (slots(n), slots(np));
    if bg > 63 || bh > 63 {
        return Err(Error::param("graph order too large for the set builders"));
    }
    let mut out = GraphPairSet {
        kind,
        k,
        n,
        np,
        exhaustive: bg + bh <= opts.max_bits,
        examined: 0,
        members: Vec::new(),
    };
    if out.exhaustive {
        let side = |m: usize, bits: usize| -> Vec<(Graph, Facts)> {
            (0..1u64 << bits)
                .map(|mask| {
                    let g = labeled_graph(m, mask);
                    let f = Facts::of(&g, k, opts.v3);
                    (g, f)
                })
                .collect()
        };
        let (gs, hs) = (side(n, bg), side(np, bh));
        for (g, fg) in &gs {
            for (h, fh) in &hs {
                out.examined += 1;
                if member(kind, k, g, h, fg, fh) {
                    out.members.push((g.clone(), h.clone()));
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let draw = |rng: &mut ChaCha8Rng, bits: usize| if bits == 0 { 0 } else { rng.gen::<u64>() >> (64 - bits) };
        for _ in 0..opts.samples {
            let g = labeled_graph(n, draw(&mut rng, bg));
            let h = labeled_graph(np, draw(&mut rng, bh));
            out.examined += 1;
            let (fg, fh) = (Facts::of(&g, k, opts.v3), Facts::of(&h, k, opts.v3));
            if member(kind, k, &g, &h, &fg, &fh) && !out.contains(&g, &h) {
                out.members.push((g, h));
            }
        }
    }
    Ok(out)
}

pub fn build_w_set(k: usize, n: usize, np: usize) -> Result<GraphPairSet> {
    build_set(PairSetKind::W, k, n, np, &SetOptions::default())
}

pub fn build_v_set(k: usize, n: usize, np: usize) -> Result<GraphPairSet> {
    build_set(PairSetKind::V, k, n, np, &SetOptions::default())
}

pub fn build_vprime_set(k: usize, n: usize, np: usize) -> Result<GraphPairSet> {
    build_set(PairSetKind::VPrime, k, n, np, &SetOptions::default())
}

/// Outcome of the combinatorial inclusion check.
#[derive(Clone, Debug, Serialize)]
pub struct Prop41 {
    pub k: usize,
    pub n: usize,
    pub np: usize,
    /// V ⊆ W and V' ⊆ W under the literal reading.
    pub holds: bool,
    /// The same under the vertex-1 reading.
    pub holds_vertex_one: bool,
    pub w_size: usize,
    pub v_size: usize,
    pub vprime_size: usize,
    pub v_size_vertex_one: usize,
}

fn inside(a: &GraphPairSet, w: &GraphPairSet) -> bool {
    a.members.iter().all(|(g, h)| w.contains(g, h))
}

/// Decides V ⊆ W (and V' ⊆ W) by enumeration. Sampled universes are
/// refused: a sample cannot establish an inclusion.
pub fn check_prop41(k: usize, n: usize, np: usize) -> Result<Prop41> {
    check_prop41_with(k, n, np, &SetOptions::default())
}

pub fn check_prop41_with(k: usize, n: usize, np: usize, opts: &SetOptions) -> Result<Prop41> {
    if slots(n) + slots(np) > opts.max_bits {
        return Err(Error::param(format!(
            "({k}, {n}, {np}) is beyond the exhaustive limit of {} bits",
            opts.max_bits
        )));
    }
    let literal = SetOptions {
        v3: V3Mode::Literal,
        ..opts.clone()
    };
    let one = SetOptions {
        v3: V3Mode::VertexOne,
        ..opts.clone()
    };
    let w = build_set(PairSetKind::W, k, n, np, &literal)?;
    let v = build_set(PairSetKind::V, k, n, np, &literal)?;
    let vp = build_set(PairSetKind::VPrime, k, n, np, &literal)?;
    let v1 = build_set(PairSetKind::V, k, n, np, &one)?;
    let vp1 = build_set(PairSetKind::VPrime, k, n, np, &one)?;
    Ok(Prop41 {
        k,
        n,
        np,
        holds: inside(&v, &w) && inside(&vp, &w),
        holds_vertex_one: inside(&v1, &w) && inside(&vp1, &w),
        w_size: w.len(),
        v_size: v.len(),
        vprime_size: vp.len(),
        v_size_vertex_one: v1.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle};

    #[test]
    fn labeled_masks() {
        assert_eq!(labeled_graph(3, 0b111), complete(3));
        assert_eq!(labeled_graph(3, 0b001).edges(), [(1, 2)]);
        assert_eq!(labeled_graph(3, 0b100).edges(), [(2, 3)]);
    }

    #[test]
    fn contraction() {
        let c = contract(&cycle(5).unwrap(), 1, 2);
        assert_eq!(c, cycle(4).unwrap());
        // odd cycles: every contraction is an even cycle, so V1 holds at k = 3
        assert!(cond_v1(&cycle(5).unwrap(), 3));
        assert!(!cond_v1(&cycle(4).unwrap(), 3));
        assert!(cond_v1(&complete(3), 3));
    }

    #[test]
    fn v_empty_at_333() {
        let v = build_v_set(3, 3, 3).unwrap();
        assert!(v.exhaustive);
        assert_eq!(v.examined, 64);
        assert!(v.is_empty());
    }

    #[test]
    fn w_members_satisfy_definition() {
        let w = build_w_set(3, 2, 2).unwrap();
        assert_eq!(w.examined, 4);
        // every pair on two vertices is 2-colourable, so all four qualify
        assert_eq!(w.len(), 4);
        let w = build_w_set(3, 3, 3).unwrap();
        for (g, h) in &w.members {
            assert!(chromatic_number(g).min(chromatic_number(h)) <= 2);
            assert!(is_k_colorable(&tensor_product(g, h), 2));
        }
        // (K3, K3) is the only pair with both sides 3-chromatic
        assert_eq!(w.len(), 63);
    }

    #[test]
    fn vprime_inside_v() {
        for (k, n, np) in [(3, 3, 3), (3, 3, 4), (4, 4, 4)] {
            let v = build_v_set(k, n, np).unwrap();
            let vp = build_vprime_set(k, n, np).unwrap();
            assert!(vp.members.iter().all(|(g, h)| v.contains(g, h)));
        }
    }

    #[test]
    fn prop41_small() {
        let r = check_prop41(3, 3, 3).unwrap();
        assert!(r.holds && r.holds_vertex_one);
        assert_eq!(r.v_size, 0);
        assert!(check_prop41(3, 4, 5).is_err());
    }

    #[test]
    fn sampled_beyond_limit() {
        let s = build_w_set(3, 4, 5).unwrap();
        assert!(!s.exhaustive);
        assert_eq!(s.examined, 4096);
        let again = build_w_set(3, 4, 5).unwrap();
        assert_eq!(s.members, again.members);
    }
}
