//! Exact computations around Torelli pullbacks of product loci in the moduli of
//! abelian varieties: colored extremal trees and their excess contributions,
//! the tautological ring of `A_g`, invariant rings of abelian fiber products,
//! wall-crossing star graphs, and script emission for an external
//! tautological-ring calculator.
//!
//! All arithmetic is exact over big rationals.

pub mod algebra;
pub mod cli;
pub mod colored_trees;
pub mod emit;
pub mod error;
pub mod excess;
pub mod invariants;
pub mod lambda_ring;
pub mod stargraphs;

pub use algebra::{MPoly, Monomial, QMatrix, Rational};
pub use error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
