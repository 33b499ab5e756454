use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ComplexVector};
use crate::tol::Tolerance;

/// Lower triangular `L` with positive real diagonal and `LL* = H`.
///
/// `H` is replaced by its Hermitian part first. A pivot at most
/// `rank_tol * ‖H‖_F` is reported as `NotPositiveDefinite`.
pub fn cholesky(h: &ComplexMatrix, tol: &Tolerance) -> Result<ComplexMatrix> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "Cholesky of a {}x{} matrix",
            h.rows(),
            h.cols()
        )));
    }
    let scale = h.frobenius_norm();
    let skew = h.skew_norm();
    if skew > tol.residual_tol * scale {
        return Err(Error::NotHermitian(skew / scale));
    }
    let a = h.hermitian_part();
    let n = a.rows();
    let threshold = tol.rank_tol * scale;
    let mut l = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        let mut d = a[(j, j)].re;
        for k in 0..j {
            d -= l[(j, k)].norm_sqr();
        }
        if d <= threshold || d.is_nan() {
            return Err(Error::NotPositiveDefinite { index: j, pivot: d });
        }
        let ljj = d.sqrt();
        l[(j, j)] = Complex64::new(ljj, 0.0);
        for i in j + 1..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / ljj;
        }
    }
    Ok(l)
}

/// Solves `LL* x = rhs` by forward then backward substitution.
pub fn cholesky_solve(l: &ComplexMatrix, rhs: &[Complex64], tol: &Tolerance) -> Result<ComplexVector> {
    let n = l.rows();
    if !l.is_square() || rhs.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} factor with right-hand side of length {}",
            l.rows(),
            l.cols(),
            rhs.len()
        )));
    }
    if let Some(i) = (0..n).find(|&i| l[(i, i)].norm() <= tol.rank_tol) {
        return Err(Error::SingularTriangular(i));
    }
    let mut y = rhs.to_vec();
    for i in 0..n {
        let mut s = y[i];
        for k in 0..i {
            s -= l[(i, k)] * y[k];
        }
        y[i] = s / l[(i, i)];
    }
    // L* is upper triangular with entries conj(L[k][i])
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in i + 1..n {
            s -= l[(k, i)].conj() * y[k];
        }
        y[i] = s / l[(i, i)].conj();
    }
    Ok(y)
}

/// Solves `LL* X = B` column by column.
pub fn cholesky_solve_matrix(l: &ComplexMatrix, b: &ComplexMatrix, tol: &Tolerance) -> Result<ComplexMatrix> {
    let cols = b
        .columns()
        .iter()
        .map(|c| cholesky_solve(l, c, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(ComplexMatrix::from_columns(b.rows(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_factor() {
        let l = cholesky(&ComplexMatrix::identity(3), &Tolerance::default()).unwrap();
        assert_eq!(l, ComplexMatrix::identity(3));
    }

    #[test]
    fn two_by_two_hermitian() {
        // LL* with L = [[2, 0], [-i, 1]] multiplied out by hand:
        // [[4, 2i], [-2i, (-i)(i) + 1]] = [[4, 2i], [-2i, 2]]
        let h = ComplexMatrix::from_rows(&[[c(4.0, 0.0), c(0.0, 2.0)], [c(0.0, -2.0), c(2.0, 0.0)]]);
        let l = cholesky(&h, &Tolerance::default()).unwrap();
        let expected = ComplexMatrix::from_rows(&[[c(2.0, 0.0), c(0.0, 0.0)], [c(0.0, -1.0), c(1.0, 0.0)]]);
        assert!((&l - &expected).frobenius_norm() < 1e-15);
    }

    #[test]
    fn solve_two_by_two_against_inverse() {
        // H^{-1} = [[2, -2i], [2i, 4]] / det, det = 8 - 4 = 4
        let l = ComplexMatrix::from_rows(&[[c(2.0, 0.0), c(0.0, 0.0)], [c(0.0, -1.0), c(1.0, 0.0)]]);
        let rhs = [c(4.0, 0.0), c(2.0, -2.0)];
        let x = cholesky_solve(&l, &rhs, &Tolerance::default()).unwrap();
        let inv = [[c(0.5, 0.0), c(0.0, -0.5)], [c(0.0, 0.5), c(1.0, 0.0)]];
        for i in 0..2 {
            let expect = inv[i][0] * rhs[0] + inv[i][1] * rhs[1];
            assert!((x[i] - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn identity_solve() {
        let x = cholesky_solve(&ComplexMatrix::identity(2), &[c(1.0, 0.0), c(2.0, 0.0)], &Tolerance::default())
            .unwrap();
        assert_eq!(x, vec![c(1.0, 0.0), c(2.0, 0.0)]);
    }

    #[test]
    fn indefinite_is_rejected() {
        let h = ComplexMatrix::from_rows(&[[c(1.0, 0.0), c(2.0, 0.0)], [c(2.0, 0.0), c(1.0, 0.0)]]);
        assert!(matches!(
            cholesky(&h, &Tolerance::default()),
            Err(Error::NotPositiveDefinite { index: 1, .. })
        ));
    }

    #[test]
    fn singular_triangular() {
        let l = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(
            cholesky_solve(&l, &[c(1.0, 0.0), c(1.0, 0.0)], &Tolerance::default()),
            Err(Error::SingularTriangular(1))
        );
    }
}
