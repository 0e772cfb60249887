//! Triangulants of matrix pairs.
//!
//! The triangulant `T(A, B)` of two `n x n` matrices is the determinant of the
//! `n^2 x n^2` block matrix whose `(i, j)` block is `A^(j-1) B^(i-1)`. It
//! vanishes exactly when an eigen-covector of `A` annihilates an eigenvector
//! of `B`. The higher triangulants `T_k` detect a `k`-dimensional
//! `B`-invariant subspace meeting a `k`-codimensional `A`-invariant subspace.
//!
//! All computations run over one of four scalar fields: rationals, Gaussian
//! rationals, prime fields, or double-precision complex numbers with a zero
//! tolerance. Exact fields give exact answers.

pub mod cli;
pub mod error;
pub mod exterior;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod mub;
pub mod poly;
pub mod roots;
pub mod scalars;
pub mod selftest;
pub mod spectra;
pub mod triangulant;
pub mod triangulant_k;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use poly::UniPoly;
pub use scalars::{FieldDescriptor, FieldValue};
