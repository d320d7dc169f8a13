//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod rational;
mod variable;

pub use monomial::{Monomial, MAX_EXPONENT};
pub use order::{compare, MonomialOrder, VarSet};
pub(crate) use order::{lex_cmp, revlex_cmp};
pub use parse::{parse_generators, parse_polynomial};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use variable::{var_universe, RingKind, Tag, Variable};
