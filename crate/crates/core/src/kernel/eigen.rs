//! Eigenvalues of Hermitian matrices by cyclic complex Jacobi rotations.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tol::Tolerance;

const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm(h: &ComplexMatrix) -> f64 {
    let n = h.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += h[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Applies the unitary rotation that zeroes `h[(p, q)]`, as `h ← W* h W`.
///
/// With `h[(p, q)] = |b| e^{iφ}`, `W` is the real Jacobi rotation for the
/// 2×2 block `[[a, |b|], [|b|, d]]` preceded by the phase `diag(1, e^{-iφ})`
/// on coordinate `q`.
fn rotate(h: &mut ComplexMatrix, p: usize, q: usize) {
    let b = h[(p, q)];
    let beta = b.norm();
    if beta == 0.0 {
        return;
    }
    let phase = b / beta;
    let (a, d) = (h[(p, p)].re, h[(q, q)].re);
    let theta = (d - a) / (2.0 * beta);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = h.rows();

    // h ← h W on columns p, q
    let wqp = -phase.conj() * s;
    let wqq = phase.conj() * c;
    for k in 0..n {
        let (hp, hq) = (h[(k, p)], h[(k, q)]);
        h[(k, p)] = hp * c + hq * wqp;
        h[(k, q)] = hp * s + hq * wqq;
    }
    // h ← W* h on rows p, q
    for k in 0..n {
        let (hp, hq) = (h[(p, k)], h[(q, k)]);
        h[(p, k)] = hp * c + hq * wqp.conj();
        h[(q, k)] = hp * s + hq * wqq.conj();
    }
    h[(p, q)] = Complex64::new(0.0, 0.0);
    h[(q, p)] = Complex64::new(0.0, 0.0);
    h[(p, p)] = Complex64::new(h[(p, p)].re, 0.0);
    h[(q, q)] = Complex64::new(h[(q, q)].re, 0.0);
}

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Fails with `NotHermitian` when `‖H − H*‖_F > residual_tol ‖H‖_F`; otherwise
/// the Hermitian part of `H` is diagonalized.
pub fn hermitian_eigenvalues(h: &ComplexMatrix, tol: &Tolerance) -> Result<Vec<f64>> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigenvalues of a {}x{} matrix",
            h.rows(),
            h.cols()
        )));
    }
    let scale = h.frobenius_norm();
    let skew = h.skew_norm();
    if skew > tol.residual_tol * scale {
        return Err(Error::NotHermitian(skew / scale));
    }
    let mut a = h.hermitian_part();
    let n = a.rows();
    let target = tol.eig_tol * scale;
    let mut converged = off_diagonal_norm(&a) <= target;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
        converged = off_diagonal_norm(&a) <= target;
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// `λ_max / λ_min` of a Hermitian positive definite matrix.
pub fn condition_number(h: &ComplexMatrix, tol: &Tolerance) -> Result<f64> {
    let eig = hermitian_eigenvalues(h, tol)?;
    condition_from_spectrum(&eig)
}

/// Condition number from an ascending spectrum.
pub fn condition_from_spectrum(eig: &[f64]) -> Result<f64> {
    let (Some(&lo), Some(&hi)) = (eig.first(), eig.last()) else {
        return Err(Error::DimensionMismatch("empty spectrum".into()));
    };
    if lo <= 0.0 {
        return Err(Error::NotPositiveDefinite { index: 0, pivot: lo });
    }
    Ok(hi / lo)
}
