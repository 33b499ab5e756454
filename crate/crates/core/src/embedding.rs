//! Real symmetric positive definite systems solved as half-size complex
//! systems.
//!
//! For `A = [[B, C], [Cᵀ, D]]` of even order `2n`, the pairing
//! `z = x[..n] + i x[n..]` turns `Ax = b` into `Mz + N conj(z) = p` with
//! `M = (B + D − i(C − Cᵀ))/2` Hermitian positive definite and
//! `N = (B − D + i(C + Cᵀ))/2` symmetric. Eliminating `conj(z)` leaves the
//! Schur complement system `(M − N conj(M)⁻¹ conj(N)) z = p − N conj(M)⁻¹ conj(p)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::{cholesky, cholesky_solve, cholesky_solve_matrix, condition_from_spectrum, hermitian_eigenvalues};
use crate::matrix::{check_finite, conj_vec, norm2, sub_vec, ComplexMatrix, ComplexVector, RealMatrix};
use crate::tol::Tolerance;

const SYMMETRY_TOL: f64 = 1e-12;

/// `Ax = b` with `A` real symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSystem {
    a: RealMatrix,
    b: Vec<f64>,
    padded: bool,
}

impl RealSystem {
    pub fn new(a: RealMatrix, b: Vec<f64>) -> Result<Self> {
        if !a.is_square() || a.rows() != b.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix with right-hand side of length {}",
                a.rows(),
                a.cols(),
                b.len()
            )));
        }
        check_finite(&b)?;
        let skew = a.skew_norm();
        if skew > SYMMETRY_TOL * a.frobenius_norm() {
            return Err(Error::NotSymmetric(skew / a.frobenius_norm()));
        }
        Ok(Self { a, b, padded: false })
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    pub fn a(&self) -> &RealMatrix {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    /// Whether the last coordinate was appended by [`pad_to_even`].
    pub fn padded(&self) -> bool {
        self.padded
    }
}

/// The conjugate-linear form `Mz + N conj(z) = p` of an even-order system.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedSystem {
    pub m: ComplexMatrix,
    pub n: ComplexMatrix,
    pub p: ComplexVector,
    pub padded: bool,
}

impl EmbeddedSystem {
    pub fn dim(&self) -> usize {
        self.m.rows()
    }
}

/// Appends `1` on the diagonal and `0` to `b` when the order is odd. The
/// extra unknown solves to zero.
pub fn pad_to_even(sys: &RealSystem) -> RealSystem {
    let m = sys.dim();
    if m % 2 == 0 {
        return sys.clone();
    }
    let a = RealMatrix::from_fn(m + 1, m + 1, |i, j| match (i < m, j < m) {
        (true, true) => sys.a[(i, j)],
        (false, false) => 1.0,
        _ => 0.0,
    });
    let mut b = sys.b.clone();
    b.push(0.0);
    RealSystem { a, b, padded: true }
}

pub fn complexify(sys: &RealSystem) -> Result<EmbeddedSystem> {
    let m = sys.dim();
    if m % 2 != 0 {
        return Err(Error::OddDimension(m));
    }
    let n = m / 2;
    let b_blk = sys.a.block(0, 0, n, n);
    let c_blk = sys.a.block(0, n, n, n);
    let d_blk = sys.a.block(n, n, n, n);
    let ct = c_blk.transpose();
    let m_re = (&b_blk + &d_blk).scale(0.5);
    let m_im = (&c_blk - &ct).scale(-0.5);
    let n_re = (&b_blk - &d_blk).scale(0.5);
    let n_im = (&c_blk + &ct).scale(0.5);
    let p = (0..n).map(|k| Complex64::new(sys.b[k], sys.b[n + k])).collect();
    Ok(EmbeddedSystem {
        m: ComplexMatrix::from_parts(&m_re, &m_im),
        n: ComplexMatrix::from_parts(&n_re, &n_im),
        p,
        padded: sys.padded,
    })
}

/// Schur complement `S = M − N conj(M)⁻¹ conj(N)` and `q = p − N conj(M)⁻¹ conj(p)`,
/// both through a Cholesky factor of `conj(M)`.
pub fn schur_system(emb: &EmbeddedSystem, tol: &Tolerance) -> Result<(ComplexMatrix, ComplexVector)> {
    let l = cholesky(&emb.m.conj(), tol)?;
    let x = cholesky_solve_matrix(&l, &emb.n.conj(), tol)?;
    let s = (&emb.m - &(&emb.n * &x)).hermitian_part();
    let y = cholesky_solve(&l, &conj_vec(&emb.p), tol)?;
    let q = sub_vec(&emb.p, &emb.n.mul_vec(&y));
    Ok((s, q))
}

/// Solution of a real SPD system computed through the complex Schur system.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedSolution {
    /// Real solution with any padding stripped.
    pub x: Vec<f64>,
    /// Complex solution `x[..n] + i x[n..]` of the (padded) system.
    pub z: ComplexVector,
    pub schur: ComplexMatrix,
    pub q: ComplexVector,
    /// `‖Ax − b‖₂` on the original system.
    pub residual: f64,
}

pub fn solve_real_via_complex(sys: &RealSystem, tol: &Tolerance) -> Result<EmbeddedSolution> {
    let even = pad_to_even(sys);
    let emb = complexify(&even)?;
    let (schur, q) = schur_system(&emb, tol)?;
    let l = cholesky(&schur, tol)?;
    let z = cholesky_solve(&l, &q, tol)?;
    let mut x: Vec<f64> = z.iter().map(|w| w.re).chain(z.iter().map(|w| w.im)).collect();
    x.truncate(sys.dim());
    let residual = norm2(&sub_vec(&sys.a.mul_vec(&x), &sys.b));
    Ok(EmbeddedSolution {
        x,
        z,
        schur,
        q,
        residual,
    })
}

/// Spectra of `A`, `M` and the Schur complement with interlacing and
/// conditioning verdicts.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    /// Ascending eigenvalues of the original `A` (the padding eigenvalue is
    /// left out).
    pub eig_a: Vec<f64>,
    pub eig_m: Vec<f64>,
    pub eig_s: Vec<f64>,
    pub cauchy_ok: bool,
    pub schur_ok: bool,
    pub cond_a: f64,
    pub cond_m: f64,
    pub cond_s: f64,
    pub cond_m_le_cond_a: bool,
    pub cond_s_le_cond_a: bool,
}

/// `λ_k(A) − tol ≤ λ_k(H) ≤ λ_{k+n}(A) + tol` for `k = 1..n`.
pub fn interlaces(eig_a: &[f64], eig_h: &[f64], tol: f64) -> bool {
    let n = eig_h.len();
    eig_a.len() == 2 * n
        && eig_h
            .iter()
            .enumerate()
            .all(|(k, &l)| eig_a[k] - tol <= l && l <= eig_a[k + n] + tol)
}

/// Eigenvalue analysis of a real SPD matrix and its complex embedding.
///
/// Interlacing is checked against the spectrum of the even-order matrix that
/// `M` and `S` are built from, with additive tolerance `1e-8 λ_max(A)`.
pub fn interlacing_report(sys: &RealSystem, tol: &Tolerance) -> Result<SpectralReport> {
    let even = pad_to_even(sys);
    let emb = complexify(&even)?;
    let eig_even = hermitian_eigenvalues(&even.a.to_complex(), tol)?;
    if eig_even[0] <= 0.0 {
        return Err(Error::NotPositiveDefinite {
            index: 0,
            pivot: eig_even[0],
        });
    }
    let eig_a = if even.padded {
        let mut e = eig_even.clone();
        let k = (0..e.len())
            .min_by(|&i, &j| (e[i] - 1.0).abs().total_cmp(&(e[j] - 1.0).abs()))
            .expect("nonempty spectrum");
        e.remove(k);
        e
    } else {
        eig_even.clone()
    };
    let (schur, _) = schur_system(&emb, tol)?;
    let eig_m = hermitian_eigenvalues(&emb.m, tol)?;
    let eig_s = hermitian_eigenvalues(&schur, tol)?;
    let slack = 1e-8 * eig_even.last().copied().unwrap_or(0.0);
    let cond_a = condition_from_spectrum(&eig_a)?;
    let cond_m = condition_from_spectrum(&eig_m)?;
    let cond_s = condition_from_spectrum(&eig_s)?;
    let bound = cond_a * (1.0 + 1e-8);
    Ok(SpectralReport {
        cauchy_ok: interlaces(&eig_even, &eig_m, slack),
        schur_ok: interlaces(&eig_even, &eig_s, slack),
        eig_a,
        eig_m,
        eig_s,
        cond_a,
        cond_m,
        cond_s,
        cond_m_le_cond_a: cond_m <= bound,
        cond_s_le_cond_a: cond_s <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_asymmetric() {
        let a = RealMatrix::from_rows(&[[1.0, 2.0], [0.0, 1.0]]);
        assert!(matches!(RealSystem::new(a, vec![0.0, 0.0]), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn padding_scalar() {
        let sys = RealSystem::new(RealMatrix::from_rows(&[[2.0]]), vec![4.0]).unwrap();
        let padded = pad_to_even(&sys);
        assert!(padded.padded());
        assert_eq!(padded.a(), &RealMatrix::diagonal(&[2.0, 1.0]));
        assert_eq!(padded.b(), &[4.0, 0.0]);
        let sol = solve_real_via_complex(&sys, &Tolerance::default()).unwrap();
        assert_eq!(sol.x.len(), 1);
        assert!((sol.x[0] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn even_systems_are_not_padded() {
        let sys = RealSystem::new(RealMatrix::identity(4), vec![1.0; 4]).unwrap();
        assert_eq!(pad_to_even(&sys), sys);
    }

    #[test]
    fn complexify_identity() {
        let sys = RealSystem::new(RealMatrix::identity(2), vec![1.0, 1.0]).unwrap();
        let e = complexify(&sys).unwrap();
        assert_eq!(e.m, ComplexMatrix::from_rows(&[[c(1.0, 0.0)]]));
        assert_eq!(e.n, ComplexMatrix::from_rows(&[[c(0.0, 0.0)]]));
        assert_eq!(e.p, vec![c(1.0, 1.0)]);
    }

    #[test]
    fn complexify_diagonal() {
        let sys = RealSystem::new(RealMatrix::diagonal(&[1.0, 3.0]), vec![1.0, 0.0]).unwrap();
        let e = complexify(&sys).unwrap();
        assert_eq!(e.m[(0, 0)], c(2.0, 0.0));
        assert_eq!(e.n[(0, 0)], c(-1.0, 0.0));
        assert_eq!(e.p, vec![c(1.0, 0.0)]);
    }

    #[test]
    fn complexify_needs_even_order() {
        let sys = RealSystem::new(RealMatrix::identity(3), vec![0.0; 3]).unwrap();
        assert_eq!(complexify(&sys), Err(Error::OddDimension(3)));
    }

    #[test]
    fn schur_of_decoupled_system() {
        let emb = EmbeddedSystem {
            m: ComplexMatrix::identity(2),
            n: ComplexMatrix::zeros(2, 2),
            p: vec![c(1.0, 2.0), c(-3.0, 0.5)],
            padded: false,
        };
        let (s, q) = schur_system(&emb, &Tolerance::default()).unwrap();
        assert_eq!(s, ComplexMatrix::identity(2));
        assert_eq!(q, emb.p);
    }

    #[test]
    fn identity_solve() {
        let sys = RealSystem::new(RealMatrix::identity(2), vec![3.0, 4.0]).unwrap();
        let sol = solve_real_via_complex(&sys, &Tolerance::default()).unwrap();
        assert_eq!(sol.z, vec![c(3.0, 4.0)]);
        assert_eq!(sol.x, vec![3.0, 4.0]);
    }

    #[test]
    fn indefinite_is_rejected() {
        let sys = RealSystem::new(RealMatrix::diagonal(&[1.0, -1.0]), vec![1.0, 1.0]).unwrap();
        assert!(matches!(
            solve_real_via_complex(&sys, &Tolerance::default()),
            Err(Error::NotPositiveDefinite { .. })
        ));
        assert!(matches!(
            interlacing_report(&sys, &Tolerance::default()),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn identity_report() {
        let sys = RealSystem::new(RealMatrix::identity(4), vec![0.0; 4]).unwrap();
        let r = interlacing_report(&sys, &Tolerance::default()).unwrap();
        assert!(r.eig_a.iter().chain(&r.eig_m).chain(&r.eig_s).all(|&l| (l - 1.0).abs() < 1e-14));
        assert_eq!((r.cond_a, r.cond_m, r.cond_s), (1.0, 1.0, 1.0));
        assert!(r.cauchy_ok && r.schur_ok && r.cond_m_le_cond_a && r.cond_s_le_cond_a);
    }

    #[test]
    fn padded_report_drops_artificial_eigenvalue() {
        let sys = RealSystem::new(RealMatrix::diagonal(&[2.0, 3.0, 5.0]), vec![0.0; 3]).unwrap();
        let r = interlacing_report(&sys, &Tolerance::default()).unwrap();
        assert_eq!(r.eig_a.len(), 3);
        assert!((r.eig_a[0] - 2.0).abs() < 1e-14 && (r.eig_a[2] - 5.0).abs() < 1e-14);
        assert!(r.cauchy_ok && r.schur_ok);
    }
}
