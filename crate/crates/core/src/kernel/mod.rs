//! Dense kernels: orthonormalization, projectors, null spaces, row
//! reduction, Hermitian eigenvalues and Cholesky factorization.

mod cholesky;
pub mod echelon;
mod eigen;
mod gram_schmidt;

pub use cholesky::{cholesky, cholesky_solve, cholesky_solve_matrix};
pub use echelon::{inverse, rank, RowEchelon};
pub use eigen::{condition_from_spectrum, condition_number, hermitian_eigenvalues};
pub use gram_schmidt::{
    orthogonal_complement_projector, orthonormal_range_basis, real_kernel_basis, row_space_generators,
};
