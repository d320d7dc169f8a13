//! Ideal families encoding colourings, criticality and clique conditions.
//!
//! Every constructor lists its generators row-major over the indices in
//! the order the families are usually displayed. Products over an empty
//! index set are the constant 1.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::groebner::{eliminate, Elimination, GbConfig, Ideal};
use crate::poly::{var_universe, Polynomial, Rational, RingKind, VarSet, Variable};

/// Which factor of the product a graph-specific ideal describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Side {
    /// Variables `e_ij` (and `x`, `xt`).
    G,
    /// Variables `f_ij` (and `y`, `yt`).
    H,
}

/// Parameters of a family instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EncodingSpec {
    pub k: usize,
    pub n: usize,
    pub np: usize,
    pub ring: RingKind,
}

impl EncodingSpec {
    pub fn new(k: usize, n: usize, np: usize, ring: RingKind) -> Result<Self> {
        check_k(k)?;
        var_universe(ring, k, n, np)?;
        Ok(EncodingSpec { k, n, np, ring })
    }

    pub fn universe(&self) -> Vec<Variable> {
        var_universe(self.ring, self.k, self.n, self.np).expect("validated on construction")
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::param(format!("k must be at least 3, got {k}")));
    }
    Ok(())
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> + Clone {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// All `size`-subsets of `items`, in lexicographic order.
fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut cur, &mut out);
    out
}

fn v(x: Variable) -> Polynomial {
    Polynomial::var(x)
}

fn minus_one(x: Variable) -> Polynomial {
    &v(x) - &Polynomial::one()
}

fn product(factors: impl IntoIterator<Item = Polynomial>) -> Polynomial {
    factors.into_iter().fold(Polynomial::one(), |acc, f| &acc * &f)
}

fn power_minus_one(x: Variable, e: u32) -> Polynomial {
    &v(x).pow(e) - &Polynomial::one()
}

fn edge(side: Side, i: usize, j: usize) -> Variable {
    match side {
        Side::G => Variable::e(i, j),
        Side::H => Variable::f(i, j),
    }
}

fn color(side: Side, i: usize) -> Variable {
    match side {
        Side::G => Variable::x(i),
        Side::H => Variable::y(i),
    }
}

fn critical_color(side: Side, p: usize, q: usize, l: usize) -> Variable {
    match side {
        Side::G => Variable::xt(p, q, l),
        Side::H => Variable::yt(p, q, l),
    }
}

fn order_of(side: Side, n: usize, np: usize) -> usize {
    match side {
        Side::G => n,
        Side::H => np,
    }
}

fn ring(kind: RingKind, n: usize, np: usize) -> Vec<Variable> {
    // k only gates validity; every ring here has k >= 3 checked upstream.
    var_universe(kind, 3, n.max(1), np.max(1)).expect("orders validated upstream")
}

fn ideal(gens: Vec<Polynomial>, kind: RingKind, n: usize, np: usize, name: &str) -> Ideal {
    Ideal::new(gens, ring(kind, n, np), name).expect("family stays inside its ring")
}

/// `E_{n,n'}`: `e_ij(e_ij - 1)` then `f_ij(f_ij - 1)`.
pub fn ideal_e(n: usize, np: usize) -> Ideal {
    let mut g: Vec<Polynomial> = pairs(n)
        .map(|(i, j)| &v(Variable::e(i, j)) * &minus_one(Variable::e(i, j)))
        .collect();
    g.extend(pairs(np).map(|(i, j)| &v(Variable::f(i, j)) * &minus_one(Variable::f(i, j))));
    ideal(g, RingKind::Pair, n, np, "E")
}

/// `X_{k,n,n'}`: `x_i^{k-1} - 1` then `y_i^{k-1} - 1`.
pub fn ideal_x(k: usize, n: usize, np: usize) -> Result<Ideal> {
    check_k(k)?;
    let e = (k - 1) as u32;
    let mut g: Vec<Polynomial> = (1..=n).map(|i| power_minus_one(Variable::x(i), e)).collect();
    g.extend((1..=np).map(|i| power_minus_one(Variable::y(i), e)));
    Ok(ideal(g, RingKind::W, n, np, "X"))
}

/// `Z_{k,n,n'}`: `z_ii'^{k-1} - 1`.
pub fn ideal_z(k: usize, n: usize, np: usize) -> Result<Ideal> {
    check_k(k)?;
    let g = (1..=n)
        .flat_map(|i| (1..=np).map(move |ip| power_minus_one(Variable::z(i, ip), (k - 1) as u32)))
        .collect();
    Ok(ideal(g, RingKind::Pair, n, np, "Z"))
}

fn ideal_i_side(k: usize, m: usize, side: Side, n: usize, np: usize) -> Result<Ideal> {
    check_k(k)?;
    let d = (k - 2) as u32;
    let g = pairs(m)
        .map(|(i, j)| {
            let h = Polynomial::complete_homogeneous(color(side, i), color(side, j), d);
            &v(edge(side, i, j)) * &h
        })
        .collect();
    let name = if side == Side::G { "I" } else { "I'" };
    Ok(ideal(g, RingKind::W, n, np, name))
}

/// `I_{k,n}`: `e_ij h_{k-2}(x_i, x_j)`.
pub fn ideal_i(k: usize, n: usize) -> Result<Ideal> {
    ideal_i_side(k, n, Side::G, n, 1)
}

/// `I'_{k,n'}`: `f_ij h_{k-2}(y_i, y_j)`.
pub fn ideal_iprime(k: usize, np: usize) -> Result<Ideal> {
    ideal_i_side(k, np, Side::H, 1, np)
}

/// All pairwise products, `a`'s generators outer.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Ideal {
    let name = format!("{}*{}", a.provenance(), b.provenance());
    Ideal::product(a, b, name)
}

/// `J_{k,n,n'}`: `e_ij f_i'j' h_{k-2}(z_ii', z_jj')`, one per pair of pairs.
pub fn ideal_j(k: usize, n: usize, np: usize) -> Result<Ideal> {
    check_k(k)?;
    let d = (k - 2) as u32;
    let mut g = Vec::new();
    for (i, j) in pairs(n) {
        for (ip, jp) in pairs(np) {
            let h = Polynomial::complete_homogeneous(Variable::z(i, ip), Variable::z(j, jp), d);
            g.push(&(&v(Variable::e(i, j)) * &v(Variable::f(ip, jp))) * &h);
        }
    }
    Ok(ideal(g, RingKind::Pair, n, np, "J"))
}

/// `E + X + Z + I·I' + J` over the W-ring.
pub fn assemble_jcal(k: usize, n: usize, np: usize) -> Result<Ideal> {
    let spec = EncodingSpec::new(k, n, np, RingKind::W)?;
    let ii = ideal_product(&ideal_i(k, n)?, &ideal_iprime(k, np)?);
    let parts = [
        &ideal_e(n, np),
        &ideal_x(k, n, np)?,
        &ideal_z(k, n, np)?,
        &ii,
        &ideal_j(k, n, np)?,
    ];
    let sum = Ideal::sum(&parts, "Jcal");
    Ideal::new(
        sum.generators().to_vec(),
        spec.universe(),
        format!("Jcal({k},{n},{np})"),
    )
}

/// Elimination of everything except the edge variables from `𝒥`.
pub fn tilde_j(k: usize, n: usize, np: usize, config: &GbConfig) -> Result<Elimination> {
    let j = assemble_jcal(k, n, np)?;
    eliminate(&j, &VarSet::edges(), config)
}

fn ideal_p_side(k: usize, side: Side, n: usize, np: usize) -> Result<Ideal> {
    check_k(k)?;
    let m = order_of(side, n, np);
    let mut g = Vec::new();
    // (a) every vertex has an incident edge
    for i in 1..=m {
        let before = (1..i).map(|j| minus_one(edge(side, j, i)));
        let after = (i + 1..=m).map(|j| minus_one(edge(side, i, j)));
        g.push(product(before.chain(after)));
    }
    // (b) colourings of G - pq with both ends coloured 1
    for (p, q) in pairs(m) {
        for i in 1..=m {
            g.push(power_minus_one(critical_color(side, p, q, i), (k - 1) as u32));
        }
    }
    for (p, q) in pairs(m) {
        for i in [p, q] {
            g.push(minus_one(critical_color(side, p, q, i)));
        }
    }
    // (c) properness on every other edge
    let d = (k - 2) as u32;
    for (p, q) in pairs(m) {
        for (i, j) in pairs(m) {
            if (i, j) == (p, q) {
                continue;
            }
            let h = Polynomial::complete_homogeneous(critical_color(side, p, q, i), critical_color(side, p, q, j), d);
            g.push(&(&v(edge(side, p, q)) * &v(edge(side, i, j))) * &h);
        }
    }
    let name = if side == Side::G { "P" } else { "P'" };
    Ok(ideal(g, RingKind::V, n, np, name))
}

pub fn ideal_p(k: usize, n: usize) -> Result<Ideal> {
    ideal_p_side(k, Side::G, n, 1)
}

pub fn ideal_pprime(k: usize, np: usize) -> Result<Ideal> {
    ideal_p_side(k, Side::H, 1, np)
}

fn clique_monomial(side: Side, set: &[usize]) -> Polynomial {
    product(subsets(set, 2).into_iter().map(|p| v(edge(side, p[0], p[1]))))
}

fn ideal_q_side(k: usize, side: Side, n: usize, np: usize) -> Result<Ideal> {
    check_k(k)?;
    let m = order_of(side, n, np);
    let rest: Vec<usize> = (2..=m).collect();
    let g = subsets(&rest, k - 2)
        .into_iter()
        .map(|x| {
            let spokes = product(x.iter().map(|&i| v(edge(side, 1, i))));
            &spokes * &clique_monomial(side, &x)
        })
        .collect();
    let name = if side == Side::G { "Q" } else { "Q'" };
    Ok(ideal(g, RingKind::Pair, n, np, name))
}

/// Vertex 1 lies in no (k-1)-clique.
pub fn ideal_q(k: usize, n: usize) -> Result<Ideal> {
    ideal_q_side(k, Side::G, n, 1)
}

pub fn ideal_qprime(k: usize, np: usize) -> Result<Ideal> {
    ideal_q_side(k, Side::H, 1, np)
}

fn ideal_r_side(size: usize, side: Side, n: usize, np: usize) -> Ideal {
    let m = order_of(side, n, np);
    let all: Vec<usize> = (1..=m).collect();
    let g = subsets(&all, size).iter().map(|x| clique_monomial(side, x)).collect();
    let name = if side == Side::G {
        format!("R{size}")
    } else {
        format!("R'{size}")
    };
    ideal(g, RingKind::Pair, n, np, &name)
}

/// No clique on `size` vertices: one monomial per `size`-subset.
pub fn ideal_r(size: usize, n: usize) -> Ideal {
    ideal_r_side(size, Side::G, n, 1)
}

pub fn ideal_rprime(size: usize, np: usize) -> Ideal {
    ideal_r_side(size, Side::H, 1, np)
}

fn ideal_s_side(k: usize, side: Side, n: usize, np: usize) -> Result<Ideal> {
    check_k(k)?;
    let m = order_of(side, n, np);
    let mut g = Vec::new();
    for l in 1..=m {
        if m + 1 < k {
            // Fewer than k-1 other vertices: δ ≥ k-1 is impossible, same
            // verdict as the empty product at |X| = 0.
            g.push(Polynomial::one());
            continue;
        }
        let others: Vec<usize> = (1..=m).filter(|&i| i != l).collect();
        for x in subsets(&others, m + 1 - k) {
            g.push(product(x.iter().map(|&i| {
                if i < l {
                    minus_one(edge(side, i, l))
                } else {
                    minus_one(edge(side, l, i))
                }
            })));
        }
    }
    let name = if side == Side::G { "S" } else { "S'" };
    Ok(ideal(g, RingKind::Pair, n, np, name))
}

/// Minimum degree at least k-1: no vertex misses `n-k+1` potential edges.
pub fn ideal_s(k: usize, n: usize) -> Result<Ideal> {
    ideal_s_side(k, Side::G, n, 1)
}

pub fn ideal_sprime(k: usize, np: usize) -> Result<Ideal> {
    ideal_s_side(k, Side::H, 1, np)
}

/// The (V5) block `R_k + R'_k + R_{k-1}·R'_{k-1}`.
pub fn ideal_v5(k: usize, n: usize, np: usize) -> Result<Ideal> {
    check_k(k)?;
    let rr = ideal_product(&ideal_r(k - 1, n), &ideal_rprime(k - 1, np));
    Ok(Ideal::sum(&[&ideal_r(k, n), &ideal_rprime(k, np), &rr], "V5"))
}

/// `E + Z + J + P + P' + Q + Q' + (V5) + S + S'` over the V-ring.
pub fn assemble_ical(k: usize, n: usize, np: usize) -> Result<Ideal> {
    let spec = EncodingSpec::new(k, n, np, RingKind::V)?;
    let parts = [
        &ideal_e(n, np),
        &ideal_z(k, n, np)?,
        &ideal_j(k, n, np)?,
        &ideal_p(k, n)?,
        &ideal_pprime(k, np)?,
        &ideal_q(k, n)?,
        &ideal_qprime(k, np)?,
        &ideal_v5(k, n, np)?,
        &ideal_s(k, n)?,
        &ideal_sprime(k, np)?,
    ];
    let sum = Ideal::sum(&parts, "Ical");
    Ideal::new(
        sum.generators().to_vec(),
        spec.universe(),
        format!("Ical({k},{n},{np})"),
    )
}

pub fn tilde_i(k: usize, n: usize, np: usize, config: &GbConfig) -> Result<Elimination> {
    let i = assemble_ical(k, n, np)?;
    eliminate(&i, &VarSet::edges(), config)
}

/// `e_ij - a_ij` for every pair, `a` the adjacency of `g`.
pub fn fixed_graph_ideal(g: &Graph, side: Side) -> Ideal {
    let n = g.n();
    let gens = pairs(n)
        .map(|(i, j)| {
            let a = if g.has_edge(i, j) { 1 } else { 0 };
            &v(edge(side, i, j)) - &Polynomial::int(a)
        })
        .collect();
    let (a, b) = if side == Side::G { (n, 1) } else { (1, n) };
    let name = if side == Side::G { "E(G)" } else { "E(H)" };
    ideal(gens, RingKind::Pair, a, b, name)
}

/// Fixed-pair ideal `E(G) + E(H) + Z + J` in `e, f, z`.
pub fn assemble_l(g: &Graph, h: &Graph, k: usize) -> Result<Ideal> {
    check_k(k)?;
    let (n, np) = (g.n(), h.n());
    if n == 0 || np == 0 {
        return Err(Error::param("graphs must have at least one vertex"));
    }
    let parts = [
        &fixed_graph_ideal(g, Side::G),
        &fixed_graph_ideal(h, Side::H),
        &ideal_z(k, n, np)?,
        &ideal_j(k, n, np)?,
    ];
    let sum = Ideal::sum(&parts, "L");
    Ideal::new(
        sum.generators().to_vec(),
        var_universe(RingKind::Pair, k, n, np)?,
        format!("L(k={k})"),
    )
}

/// `e_ij e_jl e_il` over all triples.
pub fn triangle_free_ideal(n: usize, side: Side) -> Ideal {
    let all: Vec<usize> = (1..=n).collect();
    let g = subsets(&all, 3).iter().map(|t| clique_monomial(side, t)).collect();
    let (a, b) = if side == Side::G { (n, 1) } else { (1, n) };
    ideal(g, RingKind::Pair, a, b, "triangle-free")
}

/// Substitutes the adjacency of `g` (into `e`) and/or `h` (into `f`).
pub fn specialize(ideal: &Ideal, g: Option<&Graph>, h: Option<&Graph>) -> Ideal {
    let mut values: HashMap<Variable, Rational> = HashMap::new();
    for (graph, side) in [(g, Side::G), (h, Side::H)] {
        if let Some(graph) = graph {
            for (i, j) in pairs(graph.n()) {
                values.insert(edge(side, i, j), Rational::from_int(graph.has_edge(i, j) as i64));
            }
        }
    }
    let gens = ideal.generators().iter().map(|p| p.evaluate_partial(&values)).collect();
    let universe = ideal
        .universe()
        .iter()
        .copied()
        .filter(|v| !values.contains_key(v))
        .collect();
    Ideal::new(gens, universe, format!("{} specialised", ideal.provenance()))
        .expect("substitution removes variables only")
}

/// Family names accepted by [`family`].
pub const FAMILIES: &[&str] = &[
    "E", "X", "Z", "I", "I'", "II'", "J", "Jcal", "P", "P'", "Q", "Q'", "R", "R'", "V5", "S", "S'", "Ical", "T",
];

/// Looks a family up by name, for dumping. `R`/`R'` use clique size `k`;
/// `T` is the triangle-free ideal on the G side.
pub fn family(name: &str, k: usize, n: usize, np: usize) -> Result<Ideal> {
    check_k(k)?;
    var_universe(RingKind::V, k, n, np)?;
    Ok(match name {
        "E" => ideal_e(n, np),
        "X" => ideal_x(k, n, np)?,
        "Z" => ideal_z(k, n, np)?,
        "I" => ideal_i(k, n)?,
        "I'" => ideal_iprime(k, np)?,
        "II'" => ideal_product(&ideal_i(k, n)?, &ideal_iprime(k, np)?),
        "J" => ideal_j(k, n, np)?,
        "Jcal" => assemble_jcal(k, n, np)?,
        "P" => ideal_p(k, n)?,
        "P'" => ideal_pprime(k, np)?,
        "Q" => ideal_q(k, n)?,
        "Q'" => ideal_qprime(k, np)?,
        "R" => ideal_r(k, n),
        "R'" => ideal_rprime(k, np),
        "V5" => ideal_v5(k, n, np)?,
        "S" => ideal_s(k, n)?,
        "S'" => ideal_sprime(k, np)?,
        "Ical" => assemble_ical(k, n, np)?,
        "T" => triangle_free_ideal(n, Side::G),
        other => {
            return Err(Error::param(format!(
                "unknown family `{other}`; expected one of {}",
                FAMILIES.join(", ")
            )))
        }
    })
}
