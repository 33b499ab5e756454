//! Uniquely solvable systems: the block matrix `[[M, N], [conj N, conj M]]`
//! and closed-form reduction matrices.

use crate::conjsys::{check_pair, realify_pair, ConjugateSystem};
use crate::error::{Error, Result};
use crate::kernel::{hermitian_eigenvalues, inverse, rank};
use crate::matrix::{ComplexMatrix, RealMatrix};
use crate::reduction::{apply_uv, ReducedSystem};
use crate::tol::Tolerance;

/// `[[M, N], [conj N, conj M]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockEmbedding {
    block: ComplexMatrix,
}

impl BlockEmbedding {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.block
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.block
    }
}

pub fn block_matrix(m: &ComplexMatrix, n: &ComplexMatrix) -> Result<BlockEmbedding> {
    check_pair(m, n)?;
    Ok(BlockEmbedding {
        block: ComplexMatrix::from_blocks(m, n, &n.conj(), &m.conj()),
    })
}

/// Whether `Mz + N conj(z) = p` has exactly one solution for every `p`,
/// decided by the rank of the realified block matrix.
pub fn has_unique_solution(m: &ComplexMatrix, n: &ComplexMatrix, tol: &Tolerance) -> Result<bool> {
    let block = block_matrix(m, n)?;
    let real = block.matrix().realify();
    Ok(rank(&real, tol.rank_tol) == real.rows())
}

/// Which closed form to use for `(U, V)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AnalyticForm {
    /// `U = I`, `V = −N conj(M)⁻¹`; needs `M` invertible.
    #[default]
    MInverse,
    /// `U = N⁻¹`, `V = −conj(M)⁻¹`; needs `M` and `N` invertible.
    BothInverse,
}

/// Closed-form `(U, V)` with `UN + V conj(M) = 0` and `z ↦ Uz + V conj(z)`
/// injective.
pub fn analytic_reduction(
    m: &ComplexMatrix,
    n: &ComplexMatrix,
    form: AnalyticForm,
    tol: &Tolerance,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if !has_unique_solution(m, n, tol)? {
        return Err(Error::NotUniquelySolvable);
    }
    let m_bar_inv = inverse(&m.conj(), tol.rank_tol).ok_or(Error::SingularM)?;
    match form {
        AnalyticForm::MInverse => Ok((ComplexMatrix::identity(m.rows()), -&(n * &m_bar_inv))),
        AnalyticForm::BothInverse => {
            let n_inv = inverse(n, tol.rank_tol).ok_or(Error::SingularN)?;
            Ok((n_inv, -&m_bar_inv))
        }
    }
}

/// Reduced system `(UM + V conj N) z = Up + V conj p` from the closed form.
pub fn analytic_reduce(sys: &ConjugateSystem, form: AnalyticForm, tol: &Tolerance) -> Result<ReducedSystem> {
    let (u, v) = analytic_reduction(sys.m(), sys.n(), form, tol)?;
    Ok(apply_uv(sys, &u, &v))
}

/// Compares the spectrum of the block matrix with that of the real form
/// `[[B, C], [Cᵀ, D]]` of `(M, N)`. Needs `M` Hermitian and `N` symmetric.
pub fn spectra_match(m: &ComplexMatrix, n: &ComplexMatrix, tol: &Tolerance) -> Result<bool> {
    let block = block_matrix(m, n)?.into_matrix();
    let real: RealMatrix = realify_pair(m, n);
    let eig_block = hermitian_eigenvalues(&block, tol)?;
    let eig_real = hermitian_eigenvalues(&real.to_complex(), tol)?;
    let limit = 1e-8 * block.frobenius_norm().max(f64::MIN_POSITIVE);
    Ok(eig_block
        .iter()
        .zip(&eig_real)
        .all(|(a, b)| (a - b).abs() <= limit))
}
