use crate::error::{Error, Result};

/// Thresholds used for rank decisions, feasibility checks and eigensolver
/// convergence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Relative threshold below which a pivot or orthogonal residual counts as zero.
    pub rank_tol: f64,
    /// Relative threshold for residual-based feasibility and verification.
    pub residual_tol: f64,
    /// Off-diagonal convergence threshold of the Jacobi eigensolver.
    pub eig_tol: f64,
}

impl Tolerance {
    pub const DEFAULT_RANK: f64 = 1e-10;
    pub const DEFAULT_RESIDUAL: f64 = 1e-8;
    pub const DEFAULT_EIG: f64 = 1e-12;

    pub fn new(rank_tol: f64, residual_tol: f64, eig_tol: f64) -> Result<Self> {
        let ok = |t: f64| t.is_finite() && t > 0.0;
        if ok(rank_tol) && ok(residual_tol) && ok(eig_tol) {
            Ok(Self {
                rank_tol,
                residual_tol,
                eig_tol,
            })
        } else {
            Err(Error::InvalidTolerance)
        }
    }

    /// Sets `residual_tol` to `residual_tol` and moves `rank_tol` with it,
    /// keeping the default ratio between the two.
    pub fn with_residual(residual_tol: f64) -> Result<Self> {
        let ratio = Self::DEFAULT_RANK / Self::DEFAULT_RESIDUAL;
        Self::new(residual_tol * ratio, residual_tol, Self::DEFAULT_EIG)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            rank_tol: Self::DEFAULT_RANK,
            residual_tol: Self::DEFAULT_RESIDUAL,
            eig_tol: Self::DEFAULT_EIG,
        }
    }
}
