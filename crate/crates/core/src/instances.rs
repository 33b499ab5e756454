//! Deterministic random problem instances.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conjsys::{pair_from_realified, ConjugateSystem};
use crate::error::Result;
use crate::invertible::has_unique_solution;
use crate::kernel::orthonormal_range_basis;
use crate::matrix::{realify_vec, ComplexMatrix, ComplexVector, RealMatrix};
use crate::reduction::is_reducible;
use crate::tol::Tolerance;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn real_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RealMatrix {
    RealMatrix::from_fn(rows, cols, |_, _| rng.random_range(-1.0..1.0))
}

pub fn real_vector(rng: &mut impl Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.random_range(-1.0..1.0)).collect()
}

pub fn complex_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

pub fn complex_vector(rng: &mut impl Rng, len: usize) -> ComplexVector {
    (0..len)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect()
}

/// `(GᵀG + I) / m` for a random square `G`.
pub fn spd_matrix(rng: &mut impl Rng, m: usize) -> RealMatrix {
    let g = real_matrix(rng, m, m);
    let a = &(&g.transpose() * &g) + &RealMatrix::identity(m);
    a.scale(1.0 / m as f64).hermitian_part()
}

/// Random Hermitian matrix.
pub fn hermitian_matrix(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    complex_matrix(rng, n, n).hermitian_part()
}

/// Random Hermitian positive definite matrix `GG* + I`.
pub fn hermitian_pd_matrix(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let g = complex_matrix(rng, n, n);
    (&(&g * &g.adjoint()) + &ComplexMatrix::identity(n)).hermitian_part()
}

/// Pair `(M, N)` whose homogeneous solution set, viewed in `ℝ²ⁿ`, is exactly
/// the real span of `kernel`.
pub fn pair_with_kernel(rng: &mut impl Rng, n: usize, kernel: &[Vec<f64>]) -> (ComplexMatrix, ComplexMatrix) {
    let k = RealMatrix::from_columns(2 * n, kernel);
    let q = orthonormal_range_basis(&k, &Tolerance::default());
    let projector = &RealMatrix::identity(2 * n) - &(&q * &q.transpose());
    let f = &real_matrix(rng, 2 * n, 2 * n) * &projector;
    pair_from_realified(&f).expect("square even-order real form")
}

/// Pair whose homogeneous solution set is a complex subspace of random
/// dimension `0..n`.
pub fn reducible_pair(rng: &mut impl Rng, n: usize) -> (ComplexMatrix, ComplexMatrix) {
    let k = rng.random_range(0..n);
    let mut kernel = Vec::with_capacity(2 * k);
    for _ in 0..k {
        let v = complex_vector(rng, n);
        let iv: ComplexVector = v.iter().map(|z| z * Complex64::i()).collect();
        kernel.push(realify_vec(&v));
        kernel.push(realify_vec(&iv));
    }
    pair_with_kernel(rng, n, &kernel)
}

/// Pair whose homogeneous solution set is a generic real subspace of
/// dimension `1..2n`, which is not closed under multiplication by `i`.
pub fn irreducible_pair(rng: &mut impl Rng, n: usize) -> (ComplexMatrix, ComplexMatrix) {
    let r = rng.random_range(1..2 * n);
    let kernel: Vec<Vec<f64>> = (0..r).map(|_| real_vector(rng, 2 * n)).collect();
    pair_with_kernel(rng, n, &kernel)
}

/// Irreducible pair, resampled until the reducibility test agrees.
pub fn checked_irreducible_pair(rng: &mut impl Rng, n: usize, tol: &Tolerance) -> Result<(ComplexMatrix, ComplexMatrix)> {
    loop {
        let (m, nn) = irreducible_pair(rng, n);
        if !is_reducible(&m, &nn, tol)? {
            return Ok((m, nn));
        }
    }
}

/// Reducible pair, resampled until the reducibility test agrees.
pub fn checked_reducible_pair(rng: &mut impl Rng, n: usize, tol: &Tolerance) -> Result<(ComplexMatrix, ComplexMatrix)> {
    loop {
        let (m, nn) = reducible_pair(rng, n);
        if is_reducible(&m, &nn, tol)? {
            return Ok((m, nn));
        }
    }
}

/// Random `(M, N)` resampled until the system is uniquely solvable.
pub fn unique_pair(rng: &mut impl Rng, n: usize, tol: &Tolerance) -> Result<(ComplexMatrix, ComplexMatrix)> {
    loop {
        let m = complex_matrix(rng, n, n);
        let nn = complex_matrix(rng, n, n);
        if has_unique_solution(&m, &nn, tol)? {
            return Ok((m, nn));
        }
    }
}

/// System with right-hand side `p = Mz + N conj(z)` for a random `z`.
pub fn forward_system(rng: &mut impl Rng, m: ComplexMatrix, n: ComplexMatrix) -> ConjugateSystem {
    let dim = m.rows();
    let z = complex_vector(rng, dim);
    let homogeneous = ConjugateSystem::new(m, n, vec![Complex64::new(0.0, 0.0); dim]).expect("square pair");
    let p = homogeneous.apply(&z);
    homogeneous.with_rhs(p).expect("matching length")
}
