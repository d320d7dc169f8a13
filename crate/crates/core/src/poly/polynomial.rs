use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::order::{grevlex_cmp, MonomialOrder};
use super::rational::Rational;
use super::variable::Variable;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept in descending grevlex order with no zero coefficients, so
/// two polynomials are equal iff their term vectors are.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, Rational)>,
}

fn canonical_desc(a: &Monomial, b: &Monomial) -> Ordering {
    grevlex_cmp(b.entries(), a.entries())
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_int(c))
    }

    pub fn var(v: Variable) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Collects arbitrary terms, combining like monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            let slot = acc.entry(m).or_default();
            *slot = &*slot + &c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| canonical_desc(&a.0, &b.0));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].1.is_one()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.iter().flat_map(|t| t.0.variables()).collect()
    }

    /// Leading monomial and coefficient under `order`; `None` for zero.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    /// Terms in descending order under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.compare(&b.0, &a.0));
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        // Multiplying by a monomial preserves grevlex order.
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inv()),
            None => Self::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces every occurrence of `v` by `value`.
    pub fn substitute(&self, v: Variable, value: &Polynomial) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = Monomial::from_pairs(m.entries().iter().filter(|p| p.0 != v).copied());
            let piece = Polynomial::term(c.clone(), rest);
            out = &out + &(&piece * &value.pow(e));
        }
        out
    }

    /// Substitutes constants for several variables at once.
    pub fn evaluate_partial(&self, values: &HashMap<Variable, Rational>) -> Self {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.entries() {
                match values.get(&v) {
                    Some(val) => coeff = &coeff * &val.pow(e),
                    None => rest.push((v, e)),
                }
            }
            (Monomial::from_pairs(rest), coeff)
        }))
    }

    /// The coefficient of `m` (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.0 == m)
            .map(|t| t.1.clone())
            .unwrap_or_default()
    }

    /// Sum `x_1^{d} + x_1^{d-1} x_2 + ... + x_2^{d}` of all degree-`d`
    /// monomials in two variables (the complete homogeneous polynomial).
    pub fn complete_homogeneous(a: Variable, b: Variable, d: u32) -> Self {
        Polynomial::from_terms((0..=d).map(|i| (Monomial::from_pairs([(a, d - i), (b, i)]), Rational::one())))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let fix = |c: &Rational| if negate { -c.clone() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match canonical_desc(ma, mb) {
                Ordering::Less => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((mb.clone(), fix(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ca + &fix(cb);
                    if !s.is_zero() {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
        Polynomial { terms: out }
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .flat_map(|(ma, ca)| rhs.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb))),
        )
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Polynomial {
        Polynomial::var(Variable::x(1))
    }
    fn y() -> Polynomial {
        Polynomial::var(Variable::x(2))
    }

    #[test]
    fn add_cancels_constant() {
        let p = &x() - &Polynomial::one();
        assert_eq!(&p + &Polynomial::one(), x());
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() - &y()) * &(&x() + &y());
        let expect = &x().pow(2) - &y().pow(2);
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "x_1^2 - x_2^2");
    }

    #[test]
    fn leading_terms_by_order() {
        let p = &x() + &y().pow(2);
        let (m, c) = p.leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!((m.to_string(), c), ("x_1".to_string(), Rational::one()));
        let (m, _) = p.leading_term(&MonomialOrder::Grevlex).unwrap();
        assert_eq!(m.to_string(), "x_2^2");
    }

    #[test]
    fn substitution() {
        // x^2 y + 1 with x := y gives y^3 + 1.
        let p = &(&x().pow(2) * &y()) + &Polynomial::one();
        let q = p.substitute(Variable::x(1), &y());
        assert_eq!(q, &y().pow(3) + &Polynomial::one());
    }

    #[test]
    fn complete_homogeneous_small() {
        let h = Polynomial::complete_homogeneous(Variable::x(1), Variable::x(2), 2);
        assert_eq!(h.to_string(), "x_1^2 + x_1*x_2 + x_2^2");
        assert_eq!(
            Polynomial::complete_homogeneous(Variable::x(1), Variable::x(2), 0),
            Polynomial::one()
        );
    }
}
