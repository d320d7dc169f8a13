//! Monomial orders: lex, grevlex and two-block elimination orders.
//!
//! Variables are "greater" the earlier they come in the enumeration, so the
//! first `E` variable is the largest one. The comparison helpers here are
//! generic over the key type so the Gröbner engine can reuse them on its
//! densely renumbered monomials.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use super::monomial::Monomial;
use super::variable::{Tag, Variable};

/// A set of variables, given either by family or explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarSet {
    Tags(Vec<Tag>),
    Vars(Arc<BTreeSet<Variable>>),
}

impl VarSet {
    /// The edge-indicator families `e` and `f`.
    pub fn edges() -> Self {
        VarSet::Tags(vec![Tag::E, Tag::F])
    }

    pub fn of(vars: impl IntoIterator<Item = Variable>) -> Self {
        VarSet::Vars(Arc::new(vars.into_iter().collect()))
    }

    pub fn contains(&self, v: Variable) -> bool {
        match self {
            VarSet::Tags(t) => t.contains(&v.tag()),
            VarSet::Vars(s) => s.contains(&v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Variables outside `keep` form a block that dominates the kept block;
    /// each block is ordered by grevlex.
    BlockElim {
        keep: VarSet,
    },
}

impl MonomialOrder {
    pub fn eliminate_all_but(keep: VarSet) -> Self {
        MonomialOrder::BlockElim { keep }
    }

    /// Whether `v` sits in the dominant (eliminated) block. Always false for
    /// the single-block orders.
    pub fn is_eliminated(&self, v: Variable) -> bool {
        match self {
            MonomialOrder::BlockElim { keep } => !keep.contains(v),
            _ => false,
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a.entries(), b.entries()),
            MonomialOrder::Grevlex => grevlex_cmp(a.entries(), b.entries()),
            MonomialOrder::BlockElim { keep } => {
                let split = |m: &Monomial| {
                    let (mut hi, mut lo) = (Vec::new(), Vec::new());
                    for &(v, e) in m.entries() {
                        if keep.contains(v) {
                            lo.push((v, e));
                        } else {
                            hi.push((v, e));
                        }
                    }
                    (hi, lo)
                };
                let (ah, al) = split(a);
                let (bh, bl) = split(b);
                grevlex_cmp(&ah, &bh).then_with(|| grevlex_cmp(&al, &bl))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::BlockElim { keep: VarSet::Tags(t) } => {
                let t: Vec<&str> = t.iter().map(|t| t.prefix()).collect();
                format!("elim(keep {})", t.join(","))
            }
            MonomialOrder::BlockElim { keep: VarSet::Vars(v) } => {
                let v: Vec<String> = v.iter().map(|v| v.to_string()).collect();
                format!("elim(keep {})", v.join(","))
            }
        }
    }
}

/// Compare two monomials that share the same order.
pub fn compare(m1: &Monomial, m2: &Monomial, order: &MonomialOrder) -> Ordering {
    order.compare(m1, m2)
}

/// Pure lexicographic comparison of sorted sparse exponent lists.
pub(crate) fn lex_cmp<K: Ord + Copy, E: Ord + Copy>(a: &[(K, E)], b: &[(K, E)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(ka, ea)), Some(&(kb, eb))) => match ka.cmp(&kb) {
                // a has a larger variable that b lacks.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

/// Reverse-lexicographic tiebreak for monomials of equal degree: the first
/// difference from the smallest variable decides, smaller exponent wins.
pub(crate) fn revlex_cmp<K: Ord + Copy, E: Ord + Copy>(a: &[(K, E)], b: &[(K, E)]) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    loop {
        match (i, j) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Greater,
            (_, 0) => return Ordering::Less,
            _ => {}
        }
        let (ka, ea) = a[i - 1];
        let (kb, eb) = b[j - 1];
        match ka.cmp(&kb) {
            Ordering::Greater => return Ordering::Less,
            Ordering::Less => return Ordering::Greater,
            Ordering::Equal => {
                if ea != eb {
                    return eb.cmp(&ea);
                }
                i -= 1;
                j -= 1;
            }
        }
    }
}

pub(crate) fn grevlex_cmp<K: Ord + Copy, E: Ord + Copy + Into<u32>>(a: &[(K, E)], b: &[(K, E)]) -> Ordering {
    let da: u32 = a.iter().map(|&(_, e)| e.into()).sum();
    let db: u32 = b.iter().map(|&(_, e)| e.into()).sum();
    da.cmp(&db).then_with(|| revlex_cmp(a, b))
}
