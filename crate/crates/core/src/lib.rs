//! Diophantine exponents of matrices, of matrix families, and of rational
//! nilpotent Lie groups.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactlin`]: exact linear algebra over `Q` (rank, kernels, subspace
//!   lattice operations, Plücker coordinates).
//! - [`pencil`]: pencils of endomorphisms `P(W, r) = {M : dim MW <= r}`, the
//!   obstruction inequality and exponent bounds over rational obstructions.
//! - [`dioph`]: empirical exponents of individual real matrices, by
//!   exhaustive integer search and by lattice reduction along the diagonal flow.
//! - [`freelie`]: free nilpotent Lie algebras in the Lyndon basis, word-map
//!   evaluation and Bass–Guivarc'h growth degrees.
//! - [`nilexp`]: exponents of nilpotent groups, via closed formulas and via
//!   pencils of the word-map family, plus the submodularity checker and
//!   product-set (ball) checks.
//! - [`report`]: the key/value report format shared by the command line tool.

pub mod dioph;
pub mod error;
pub mod exactlin;
pub mod freelie;
pub mod nilexp;
pub mod pencil;
pub mod report;

pub use error::{Error, Result};
pub use exactlin::{Rational, RationalMatrix, RationalSubspace};
