//! Solvers for conjugate-linear systems `Mz + N conj(z) = p`.
//!
//! The crate decides when such a system has a complex affine solution set,
//! builds the equivalent complex system `Az = b` in that case, and uses the
//! same machinery to solve real symmetric positive definite systems through
//! a half-size complex Schur complement.

pub mod conjsys;
pub mod embedding;
mod error;
pub mod instances;
pub mod invertible;
pub mod kernel;
pub mod matrix;
pub mod reduction;
mod tol;

pub use conjsys::{AffineSolutionSet, ConjugateSystem, SpanField};
pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, ComplexVector, Matrix, RealMatrix, Scalar};
pub use num_complex::Complex64;
pub use tol::Tolerance;
