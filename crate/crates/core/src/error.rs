use thiserror::Error;

/// Errors raised by the numerical kernels and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix or vector contains a non-finite entry")]
    NonFinite,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("tolerances must be strictly positive and finite")]
    InvalidTolerance,

    #[error("matrix is not Hermitian (relative skew part {0:.3e})")]
    NotHermitian(f64),

    #[error("matrix is not symmetric (relative skew part {0:.3e})")]
    NotSymmetric(f64),

    #[error("matrix is not positive definite (pivot {pivot:.3e} at index {index})")]
    NotPositiveDefinite { index: usize, pivot: f64 },

    #[error("triangular factor is singular at diagonal index {0}")]
    SingularTriangular(usize),

    #[error("row space has rank {rank}, more than the requested {k} generators")]
    RankExceedsK { rank: usize, k: usize },

    #[error("system cannot be reduced to a complex linear system")]
    NotReducible,

    #[error("system does not have a unique solution for every right-hand side")]
    NotUniquelySolvable,

    #[error("M is numerically singular")]
    SingularM,

    #[error("N is numerically singular")]
    SingularN,

    #[error("real dimension {0} is odd; pad the system first")]
    OddDimension(usize),

    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
