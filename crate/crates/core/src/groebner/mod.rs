//! Reduced Gröbner bases and the ideal operations built on them.

mod engine;

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use engine::{Buchberger, Limits, Outcome, Ranking};
pub use engine::{GbStats, Strategy};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, VarSet, Variable};

/// Resource caps and pair-selection strategy for one computation.
#[derive(Clone, Debug)]
pub struct GbConfig {
    pub timeout: Option<Duration>,
    /// Cap on the total number of terms held by the basis and the
    /// polynomial under reduction.
    pub max_terms: usize,
    pub max_degree: Option<u32>,
    pub strategy: Strategy,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            timeout: Some(Duration::from_secs(3600)),
            max_terms: 1_000_000,
            max_degree: None,
            strategy: Strategy::Normal,
        }
    }
}

impl GbConfig {
    pub fn with_timeout(mut self, t: Duration) -> Self {
        self.timeout = Some(t);
        self
    }

    pub fn with_strategy(mut self, s: Strategy) -> Self {
        self.strategy = s;
        self
    }

    fn limits(&self) -> Limits {
        Limits {
            deadline: self.timeout.map(|t| Instant::now() + t),
            timeout_secs: self.timeout.map(|t| t.as_secs_f64()).unwrap_or(f64::INFINITY),
            max_terms: self.max_terms,
            max_degree: self.max_degree,
        }
    }
}

/// A finitely generated ideal together with the ring it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    universe: Arc<Vec<Variable>>,
    provenance: String,
}

impl Ideal {
    /// Zero generators are dropped. Fails if a generator uses a variable
    /// outside `universe`.
    pub fn new(generators: Vec<Polynomial>, universe: Vec<Variable>, provenance: impl Into<String>) -> Result<Self> {
        let mut universe = universe;
        universe.sort();
        universe.dedup();
        for g in &generators {
            if let Some(v) = g.variables().into_iter().find(|v| universe.binary_search(v).is_err()) {
                return Err(Error::param(format!("generator uses {v}, which is outside the ring")));
            }
        }
        Ok(Ideal {
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            universe: Arc::new(universe),
            provenance: provenance.into(),
        })
    }

    /// Ideal whose ring is exactly the variables its generators mention.
    pub fn from_generators(generators: Vec<Polynomial>) -> Self {
        let universe: BTreeSet<Variable> = generators.iter().flat_map(|g| g.variables()).collect();
        Ideal::new(generators, universe.into_iter().collect(), "").expect("universe covers generators")
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn universe(&self) -> &[Variable] {
        &self.universe
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> Self {
        self.provenance = p.into();
        self
    }

    /// Sum of ideals: concatenated generators over the union of the rings.
    pub fn sum(parts: &[&Ideal], provenance: impl Into<String>) -> Ideal {
        let universe: BTreeSet<Variable> = parts.iter().flat_map(|p| p.universe.iter().copied()).collect();
        let gens = parts.iter().flat_map(|p| p.generators.iter().cloned()).collect();
        Ideal::new(gens, universe.into_iter().collect(), provenance).expect("union covers generators")
    }

    /// Ideal generated by all pairwise products, `a` outer and `b` inner.
    pub fn product(a: &Ideal, b: &Ideal, provenance: impl Into<String>) -> Ideal {
        let universe: BTreeSet<Variable> = a.universe.iter().chain(b.universe.iter()).copied().collect();
        let gens = a
            .generators
            .iter()
            .flat_map(|f| b.generators.iter().map(move |g| f * g))
            .collect();
        Ideal::new(gens, universe.into_iter().collect(), provenance).expect("union covers generators")
    }
}

/// A reduced Gröbner basis, sorted by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub basis: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub stats: GbStats,
    pub elapsed: Duration,
}

impl GroebnerBasis {
    /// Whether the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.basis, &self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.is_unit() || self.normal_form(p).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|p| p.leading_term(&self.order).expect("basis elements are nonzero").0)
            .collect()
    }
}

fn ranking_for<'a>(order: &MonomialOrder, polys: impl IntoIterator<Item = &'a Polynomial>) -> Ranking {
    let vars: BTreeSet<Variable> = polys.into_iter().flat_map(|p| p.variables()).collect();
    Ranking::new(order, vars).expect("variable count fits the engine")
}

/// Multivariate division remainder of `p` by `basis` (in list order).
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    if p.is_zero() {
        return Polynomial::zero();
    }
    let ranking = ranking_for(order, basis.iter().chain(std::iter::once(p)));
    engine::normal_form(&ranking, p, basis)
}

/// `lcm/lt(p) * p - lcm/lt(q) * q`.
pub fn s_polynomial(p: &Polynomial, q: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (mp, cp) = p.leading_term(order).expect("s_polynomial of zero");
    let (mq, cq) = q.leading_term(order).expect("s_polynomial of zero");
    let l = mp.lcm(&mq);
    let a = p.mul_monomial(&mp.divide_into(&l).unwrap()).scale(&cp.inv());
    let b = q.mul_monomial(&mq.divide_into(&l).unwrap()).scale(&cq.inv());
    &a - &b
}

/// Reduced Gröbner basis with default caps.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ideal, order, &GbConfig::default())
}

pub fn buchberger_with(ideal: &Ideal, order: &MonomialOrder, config: &GbConfig) -> Result<GroebnerBasis> {
    let start = Instant::now();
    let ranking = ranking_for(order, ideal.generators());
    let input = ideal.generators().iter().map(|g| ranking.poly(g)).collect();
    let mut engine = Buchberger::new(ranking.order, config.strategy, config.limits());
    let outcome = engine.run(input).map_err(Error::Aborted)?;
    let mut stats = engine.stats.clone();
    let basis = match outcome {
        Outcome::Unit => {
            stats.basis_size = 1;
            vec![Polynomial::one()]
        }
        Outcome::Basis(b) => b.iter().map(|p| ranking.back(p)).collect(),
    };
    Ok(GroebnerBasis {
        basis,
        order: order.clone(),
        stats,
        elapsed: start.elapsed(),
    })
}

/// Whether the ideal is the whole ring.
pub fn contains_one(ideal: &Ideal) -> Result<bool> {
    contains_one_with(ideal, &GbConfig::default())
}

pub fn contains_one_with(ideal: &Ideal, config: &GbConfig) -> Result<bool> {
    Ok(buchberger_with(ideal, &MonomialOrder::Grevlex, config)?.is_unit())
}

/// Elimination ideal plus the block-order basis it was read off from.
#[derive(Clone, Debug)]
pub struct Elimination {
    pub ideal: Ideal,
    pub full: GroebnerBasis,
}

impl Elimination {
    /// The kept elements as a reduced basis under grevlex on the kept ring.
    pub fn basis(&self) -> GroebnerBasis {
        GroebnerBasis {
            basis: self.ideal.generators.clone(),
            order: MonomialOrder::Grevlex,
            stats: self.full.stats.clone(),
            elapsed: self.full.elapsed,
        }
    }
}

/// `ideal ∩ k[keep]`.
pub fn elimination_ideal(ideal: &Ideal, keep: &VarSet) -> Result<Ideal> {
    Ok(eliminate(ideal, keep, &GbConfig::default())?.ideal)
}

pub fn eliminate(ideal: &Ideal, keep: &VarSet, config: &GbConfig) -> Result<Elimination> {
    let order = MonomialOrder::eliminate_all_but(keep.clone());
    let full = buchberger_with(ideal, &order, config)?;
    let kept: Vec<Polynomial> = full
        .basis
        .iter()
        .filter(|p| p.variables().iter().all(|v| keep.contains(*v)))
        .cloned()
        .collect();
    let universe: Vec<Variable> = ideal.universe().iter().copied().filter(|v| keep.contains(*v)).collect();
    let provenance = if ideal.provenance.is_empty() {
        String::new()
    } else {
        format!("{} eliminated", ideal.provenance)
    };
    let out = Ideal::new(kept, universe, provenance)?;
    Ok(Elimination { ideal: out, full })
}

/// `a ⊆ b`, via normal forms modulo a grevlex basis of `b`.
pub fn ideal_subset(a: &Ideal, b: &Ideal) -> Result<bool> {
    let gb = buchberger(b, &MonomialOrder::Grevlex)?;
    Ok(generators_in(a, &gb))
}

/// Whether every generator of `a` reduces to zero modulo `gb`. Variables of
/// `a` missing from the basis ring are identified by name.
pub fn generators_in(a: &Ideal, gb: &GroebnerBasis) -> bool {
    a.generators().iter().all(|g| gb.contains(g))
}

/// Checks the reduced-basis invariants: monic, no term divisible by another
/// element's leading monomial.
pub fn is_reduced(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let lts: Vec<(Monomial, Rational)> = match basis.iter().map(|p| p.leading_term(order)).collect() {
        Some(v) => v,
        None => return false,
    };
    if lts.iter().any(|(_, c)| !c.is_one()) {
        return false;
    }
    basis.iter().enumerate().all(|(i, p)| {
        p.terms()
            .iter()
            .all(|(m, _)| lts.iter().enumerate().all(|(j, (l, _))| i == j || !l.divides(m)))
    })
}
