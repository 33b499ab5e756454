//! Reduction of a conjugate-linear system to a complex linear system.
//!
//! Let `P⊥` be the orthogonal projector onto the complement of the range of
//! `[N; conj(M)]` in `ℂ²ⁿ`. The solution set of `Mz + N conj(z) = 0` is a
//! complex subspace exactly when `z ↦ P⊥ (z; conj z)` is injective. In that
//! case, writing `P⊥ = [Û V̂]`, the rows of `ÛM + V̂ conj(N)` indexed by a
//! generating set `I` give `U`, `V` with
//! `{Mz + N conj(z) = p} = {(UM + V conj(N)) z = Up + V conj(p)}` for every
//! `p` in the range of the system.

use num_complex::Complex64;

use crate::conjsys::{check_pair, solve_via_realification, AffineSolutionSet, ConjugateSystem, SpanField};
use crate::error::{Error, Result};
use crate::kernel::{orthogonal_complement_projector, real_kernel_basis, row_space_generators, RowEchelon};
use crate::matrix::{conj_vec, norm2, ComplexMatrix, ComplexVector, RealMatrix};
use crate::tol::Tolerance;

/// `(U, V)` together with the data they were extracted from.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionCertificate {
    pub u: ComplexMatrix,
    pub v: ComplexMatrix,
    /// Zero-based rows of `ÛM + V̂ conj(N)` kept in `U`, `V`.
    pub row_set: Vec<usize>,
    pub projector: ComplexMatrix,
}

/// `Az = b`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedSystem {
    pub a: ComplexMatrix,
    pub b: ComplexVector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolutionReport {
    pub reducible: bool,
    pub reduced: Option<ReducedSystem>,
    pub certificate: Option<ReductionCertificate>,
    pub solutions: AffineSolutionSet,
    /// Residual of the checked solution against the original system; zero
    /// when no candidate solution existed.
    pub verification_residual: f64,
}

/// `[N; conj(M)]`.
pub fn stacked_range_matrix(m: &ComplexMatrix, n: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_pair(m, n)?;
    Ok(ComplexMatrix::vstack(n, &m.conj()))
}

/// Real `4n × 2n` matrix of `(x, y) ↦ P⊥ (x + iy; x − iy)`, rows ordered
/// `ℜ(top), ℜ(bottom), ℑ(top), ℑ(bottom)`.
pub fn injectivity_matrix(projector: &ComplexMatrix) -> RealMatrix {
    let n = projector.rows() / 2;
    let p11 = projector.block(0, 0, n, n);
    let p12 = projector.block(0, n, n, n);
    let p21 = projector.block(n, 0, n, n);
    let p22 = projector.block(n, n, n, n);
    let (r11, i11, r12, i12) = (p11.re(), p11.im(), p12.re(), p12.im());
    let (r21, i21, r22, i22) = (p21.re(), p21.im(), p22.re(), p22.im());
    let rows = [
        RealMatrix::hstack(&(&r11 + &r12), &(&i12 - &i11)),
        RealMatrix::hstack(&(&r21 + &r22), &(&i22 - &i21)),
        RealMatrix::hstack(&(&i11 + &i12), &(&r11 - &r12)),
        RealMatrix::hstack(&(&i21 + &i22), &(&r21 - &r22)),
    ];
    rows[1..].iter().fold(rows[0].clone(), |acc, r| RealMatrix::vstack(&acc, r))
}

/// Whether the homogeneous solution set of `(M, N)` is a complex subspace,
/// tested through the kernel of [`injectivity_matrix`].
pub fn is_reducible(m: &ComplexMatrix, n: &ComplexMatrix, tol: &Tolerance) -> Result<bool> {
    let projector = orthogonal_complement_projector(&stacked_range_matrix(m, n)?, tol);
    Ok(real_kernel_basis(&injectivity_matrix(&projector), tol).is_empty())
}

/// Builds `U`, `V` from the projector blocks and a greedy row set.
pub fn reduction_matrices(m: &ComplexMatrix, n: &ComplexMatrix, tol: &Tolerance) -> Result<ReductionCertificate> {
    let dim = m.rows();
    let projector = orthogonal_complement_projector(&stacked_range_matrix(m, n)?, tol);
    if !real_kernel_basis(&injectivity_matrix(&projector), tol).is_empty() {
        return Err(Error::NotReducible);
    }
    let u_hat = projector.block(0, 0, 2 * dim, dim);
    let v_hat = projector.block(0, dim, 2 * dim, dim);
    let g = &(&u_hat * m) + &(&v_hat * &n.conj());
    let row_set = row_space_generators(&g, dim, tol)?;
    Ok(ReductionCertificate {
        u: u_hat.select_rows(&row_set),
        v: v_hat.select_rows(&row_set),
        row_set,
        projector,
    })
}

/// `A = UM + V conj(N)`, `b = Up + V conj(p)`.
pub fn reduce(sys: &ConjugateSystem, cert: &ReductionCertificate) -> ReducedSystem {
    apply_uv(sys, &cert.u, &cert.v)
}

pub(crate) fn apply_uv(sys: &ConjugateSystem, u: &ComplexMatrix, v: &ComplexMatrix) -> ReducedSystem {
    let a = &(u * sys.m()) + &(v * &sys.n().conj());
    let up = u.mul_vec(sys.p());
    let vp = v.mul_vec(&conj_vec(sys.p()));
    let b = up.iter().zip(&vp).map(|(x, y)| x + y).collect();
    ReducedSystem { a, b }
}

/// Complex row reduction of `Az = b`: particular solution with free
/// variables at zero (plus one refinement step) and a complex kernel basis.
pub fn solve_complex(a: &ComplexMatrix, b: &[Complex64], tol: &Tolerance) -> AffineSolutionSet {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let column = |v: Vec<Complex64>| ComplexMatrix::from_columns(v.len(), &[v]);
    let echelon = RowEchelon::new(a, &column(b.to_vec()), tol.rank_tol);
    let mut z = echelon.pivot_solution(0);
    let r: Vec<Complex64> = b.iter().zip(a.mul_vec(&z)).map(|(x, y)| x - y).collect();
    let correction = RowEchelon::new(a, &column(r), tol.rank_tol).pivot_solution(0);
    for (zi, di) in z.iter_mut().zip(&correction) {
        *zi += di;
    }
    let residual = norm2(&a.mul_vec(&z).iter().zip(b).map(|(x, y)| x - y).collect::<Vec<_>>());
    if residual > tol.residual_tol * (1.0 + norm2(b)) {
        return AffineSolutionSet::infeasible(SpanField::Complex);
    }
    AffineSolutionSet {
        feasible: true,
        particular: Some(z),
        kernel_basis: echelon.kernel_basis(),
        span_field: SpanField::Complex,
    }
}

/// End-to-end solve.
///
/// Reducible systems go through the certificate and the reduced system; one
/// reduced solution is checked against the original system, and a failed
/// check means the original system has no solution. Irreducible systems are
/// solved on their real form.
pub fn solve(sys: &ConjugateSystem, tol: &Tolerance) -> Result<SolutionReport> {
    if !is_reducible(sys.m(), sys.n(), tol)? {
        let solutions = solve_via_realification(sys, tol);
        let verification_residual = solutions.particular.as_ref().map_or(0.0, |z| sys.residual(z));
        return Ok(SolutionReport {
            reducible: false,
            reduced: None,
            certificate: None,
            solutions,
            verification_residual,
        });
    }
    let certificate = reduction_matrices(sys.m(), sys.n(), tol)?;
    let reduced = reduce(sys, &certificate);
    let candidate = solve_complex(&reduced.a, &reduced.b, tol);
    let (solutions, verification_residual) = match &candidate.particular {
        Some(z) => {
            let res = sys.residual(z);
            if res <= tol.residual_tol * (1.0 + norm2(sys.p())) {
                (candidate, res)
            } else {
                (AffineSolutionSet::infeasible(SpanField::Complex), res)
            }
        }
        None => (candidate, 0.0),
    };
    Ok(SolutionReport {
        reducible: true,
        reduced: Some(reduced),
        certificate: Some(certificate),
        solutions,
        verification_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn scalar(x: Complex64) -> ComplexMatrix {
        ComplexMatrix::from_rows(&[[x]])
    }

    fn scalar_system(m: Complex64, n: Complex64, p: Complex64) -> ConjugateSystem {
        ConjugateSystem::new(scalar(m), scalar(n), vec![p]).unwrap()
    }

    #[test]
    fn stacked_scalars() {
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let s = stacked_range_matrix(&scalar(one), &scalar(zero)).unwrap();
        assert_eq!(s, ComplexMatrix::from_rows(&[[zero], [one]]));
        let s = stacked_range_matrix(&scalar(zero), &scalar(one)).unwrap();
        assert_eq!(s, ComplexMatrix::from_rows(&[[one], [zero]]));
        assert!(stacked_range_matrix(&ComplexMatrix::identity(2), &scalar(one)).is_err());
    }

    #[test]
    fn reducibility_of_scalars() {
        let tol = Tolerance::default();
        let one = scalar(c(1.0, 0.0));
        assert!(!is_reducible(&one, &one, &tol).unwrap());
        assert!(is_reducible(&one, &scalar(c(0.0, 0.0)), &tol).unwrap());
    }

    #[test]
    fn certificate_pure_complex() {
        let cert = reduction_matrices(&scalar(c(1.0, 0.0)), &scalar(c(0.0, 0.0)), &Tolerance::default()).unwrap();
        assert_eq!(cert.projector, ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 0.0)]));
        assert_eq!(cert.row_set, vec![0]);
        assert_eq!(cert.u, scalar(c(1.0, 0.0)));
        assert_eq!(cert.v, scalar(c(0.0, 0.0)));
        let red = reduce(&scalar_system(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 7.0)), &cert);
        assert_eq!(red.a, scalar(c(1.0, 0.0)));
        assert_eq!(red.b, vec![c(0.0, 7.0)]);
    }

    #[test]
    fn certificate_pure_conjugate() {
        let cert = reduction_matrices(&scalar(c(0.0, 0.0)), &scalar(c(1.0, 0.0)), &Tolerance::default()).unwrap();
        assert_eq!(cert.projector, ComplexMatrix::diagonal(&[c(0.0, 0.0), c(1.0, 0.0)]));
        assert_eq!(cert.row_set, vec![1]);
        assert_eq!(cert.u, scalar(c(0.0, 0.0)));
        assert_eq!(cert.v, scalar(c(1.0, 0.0)));
        let red = reduce(&scalar_system(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0)), &cert);
        assert_eq!(red.a, scalar(c(1.0, 0.0)));
        assert_eq!(red.b, vec![c(1.0, -1.0)]);
    }

    #[test]
    fn irreducible_certificate_is_refused() {
        let one = scalar(c(1.0, 0.0));
        assert_eq!(
            reduction_matrices(&one, &one, &Tolerance::default()),
            Err(Error::NotReducible)
        );
    }

    #[test]
    fn complex_solve_cases() {
        let tol = Tolerance::default();
        let s = solve_complex(&ComplexMatrix::identity(2), &[c(1.0, 0.0), c(2.0, 0.0)], &tol);
        assert!(s.feasible && s.kernel_basis.is_empty());
        assert_eq!(s.particular.unwrap(), vec![c(1.0, 0.0), c(2.0, 0.0)]);
        let s = solve_complex(&ComplexMatrix::zeros(1, 1), &[c(1.0, 0.0)], &tol);
        assert!(!s.feasible);
    }

    #[test]
    fn solve_irreducible_infeasible() {
        let r = solve(&scalar_system(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)), &Tolerance::default()).unwrap();
        assert!(!r.reducible);
        assert!(!r.solutions.feasible);
        assert_eq!(r.verification_residual, 0.0);
    }

    #[test]
    fn solve_irreducible_feasible() {
        let r = solve(&scalar_system(c(1.0, 0.0), c(1.0, 0.0), c(4.0, 0.0)), &Tolerance::default()).unwrap();
        assert!(!r.reducible);
        assert!(r.solutions.feasible);
        assert_eq!(r.solutions.span_field, SpanField::Real);
        assert!((r.solutions.particular.as_ref().unwrap()[0] - c(2.0, 0.0)).norm() < 1e-14);
        assert_eq!(r.solutions.kernel_basis, vec![vec![c(0.0, 1.0)]]);
    }

    #[test]
    fn solve_reducible_infeasible_after_verification() {
        // M = [[1, 0], [0, 0]], N = 0: second equation 0 = p_2
        let m = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let sys = ConjugateSystem::new(m, ComplexMatrix::zeros(2, 2), vec![c(1.0, 0.0), c(3.0, 0.0)]).unwrap();
        let r = solve(&sys, &Tolerance::default()).unwrap();
        assert!(r.reducible);
        assert!(!r.solutions.feasible);
        assert_eq!(r.solutions.span_field, SpanField::Complex);
    }
}
