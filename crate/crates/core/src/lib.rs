//! Gröbner-basis encodings of tensor-product colouring problems.
//!
//! The crate builds the polynomial ideals whose inclusion or triviality
//! decides instances of Hedetniemi's conjecture, computes with them through
//! a Buchberger engine over exact rationals, and re-checks every algebraic
//! verdict against exhaustive graph computations.

pub mod cli;
pub mod conjecture;
pub mod encode;
pub mod error;
pub mod graphs;
pub mod groebner;
pub mod poly;

pub use error::{Cap, Error, Result};
