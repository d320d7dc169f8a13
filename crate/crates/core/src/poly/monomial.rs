use std::fmt;

use smallvec::SmallVec;

use super::variable::Variable;
use crate::error::{Error, Result};

/// Largest exponent any monomial may carry. Encodings never exceed `k`, so
/// hitting this means something upstream is broken.
pub const MAX_EXPONENT: u32 = 1 << 16;

/// A power product, stored as `(variable, exponent)` pairs sorted by
/// variable with no zero exponents.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[(Variable, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(smallvec::smallvec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// merging repeats and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut v: SmallVec<[(Variable, u32); 4]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Variable, u32); 4]> = SmallVec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        let m = Monomial(out);
        m.check_cap(MAX_EXPONENT).expect("exponent cap exceeded");
        m
    }

    pub fn entries(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.0.iter().map(|p| p.0)
    }

    fn check_cap(&self, cap: u32) -> Result<()> {
        match self.0.iter().find(|p| p.1 > cap) {
            Some((v, e)) => Err(Error::param(format!("exponent {e} of {v} exceeds cap {cap}"))),
            None => Ok(()),
        }
    }

    /// Product with an explicit exponent cap.
    pub fn try_mul(&self, other: &Monomial, cap: u32) -> Result<Monomial> {
        let mut out: SmallVec<[(Variable, u32); 4]> = SmallVec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        let m = Monomial(out);
        m.check_cap(cap)?;
        Ok(m)
    }

    /// Product; panics if the result breaks [`MAX_EXPONENT`].
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other, MAX_EXPONENT).expect("exponent cap exceeded")
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, x)| (v, x * e)))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_pairs(
            other.0.iter().map(|&(v, e)| (v, e - self.exponent(v))),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut pairs: Vec<(Variable, u32)> = self.0.to_vec();
        for &(v, e) in &other.0 {
            match pairs.iter_mut().find(|p| p.0 == v) {
                Some(p) => p.1 = p.1.max(e),
                None => pairs.push((v, e)),
            }
        }
        Monomial::from_pairs(pairs)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, _)| other.exponent(v) == 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
