//! Exact computational toolkit for the exotic bialgebra S03.
//!
//! Everything is computed over the field K = Q(i, √2); there is no floating
//! point anywhere. Spectral parameters enter through s = x^(1/2), making all
//! spectral matrices Laurent-polynomial valued, so identities are checked
//! coefficientwise rather than numerically.
//!
//! Module map:
//! - [`scalar`]: Gaussian rationals and K = Q(i)[√2]
//! - [`laurent`]: Laurent polynomials over any exact ring (one and two variables)
//! - [`linalg`]: dense exact matrices, kernels, characteristic polynomials,
//!   commutants and intertwiners
//! - [`rmatrix`]: the S03 R-matrix family, Yang–Baxter and braid identities,
//!   the z-parametrisation, diagonalisation and fusion projectors
//! - [`algebra`]: the finitely presented S03 quotient and the dual L̃-algebra
//!   rewriting systems, right regular action matrices
//! - [`reps`]: representation families, RLL checkers, coproducts, X-matrices,
//!   fusion invariance and decomposition of the right regular action
//! - [`chains`]: the eight-vertex model, transfer matrices, spin-chain
//!   Hamiltonians, exact spectra, partition functions
//! - [`clifford`]: the Clifford symmetry algebra of the open chain
//! - [`report`]: the batch verification suite used by the CLI

pub mod algebra;
pub mod chains;
pub mod clifford;
pub mod emit;
pub mod laurent;
pub mod linalg;
pub mod reps;
pub mod report;
pub mod rmatrix;
pub mod scalar;

pub use laurent::{Laurent, Laurent2, LaurentK};
pub use linalg::{CharPoly, Mat};
pub use scalar::{Field, FieldK, GaussRational, Ring};

/// Dense matrix over the exact field Q(i, √2).
pub type MatK = Mat<FieldK>;
/// Dense matrix of Laurent polynomials in s = x^(1/2) over Q(i, √2).
pub type MatL = Mat<LaurentK>;
/// Dense matrix of two-variable Laurent polynomials (s and t).
pub type Mat2 = Mat<Laurent2>;
