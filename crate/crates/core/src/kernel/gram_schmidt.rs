//! Modified Gram-Schmidt with one re-orthogonalization pass, and the
//! range / row-space / null-space constructions built on it.

use crate::error::{Error, Result};
use crate::matrix::{dot, norm2, ComplexMatrix, Matrix, RealMatrix, Scalar};
use crate::tol::Tolerance;

/// Removes from `v` its components along the orthonormal vectors in `basis`.
/// Two MGS passes.
pub(crate) fn project_out<T: Scalar>(basis: &[Vec<T>], v: &mut [T]) {
    for _ in 0..2 {
        for q in basis {
            let c = dot(q, v);
            for (vi, &qi) in v.iter_mut().zip(q) {
                *vi -= c * qi;
            }
        }
    }
}

fn normalized<T: Scalar>(mut v: Vec<T>, norm: f64) -> Vec<T> {
    let inv = T::from_real(1.0 / norm);
    for x in v.iter_mut() {
        *x *= inv;
    }
    v
}

/// Orthonormal basis of the column space of `b`.
///
/// A column is dropped when its residual after projection is at most
/// `rank_tol * (1 + ‖b_j‖)`, so the number of returned columns is the
/// numerical rank of `b`.
pub fn orthonormal_range_basis<T: Scalar>(b: &Matrix<T>, tol: &Tolerance) -> Matrix<T> {
    let mut basis: Vec<Vec<T>> = Vec::new();
    for col in b.columns() {
        let original = norm2(&col);
        let mut v = col;
        project_out(&basis, &mut v);
        let r = norm2(&v);
        if r > tol.rank_tol * (1.0 + original) {
            basis.push(normalized(v, r));
        }
    }
    Matrix::from_columns(b.rows(), &basis)
}

/// `I − QQ*` with `Q` an orthonormal basis of the range of `b`: the orthogonal
/// projector onto the complement of that range.
pub fn orthogonal_complement_projector(b: &ComplexMatrix, tol: &Tolerance) -> ComplexMatrix {
    let q = orthonormal_range_basis(b, tol);
    let qq = &q * &q.adjoint();
    let p = &ComplexMatrix::identity(b.rows()) - &qq;
    // exact Hermitian symmetry; the product above is Hermitian up to rounding
    p.hermitian_part()
}

/// Greedy ascending selection of rows spanning the row space of `g`.
///
/// Row `i` is kept when its component orthogonal to the previously kept rows
/// exceeds `rank_tol * ‖g‖_F`. When fewer than `k` rows are kept, the set is
/// padded with the smallest unused indices. Indices are zero-based and
/// returned in ascending order.
pub fn row_space_generators<T: Scalar>(
    g: &Matrix<T>,
    k: usize,
    tol: &Tolerance,
) -> Result<Vec<usize>> {
    let threshold = tol.rank_tol * g.frobenius_norm();
    let mut basis: Vec<Vec<T>> = Vec::new();
    let mut kept = Vec::new();
    for i in 0..g.rows() {
        let mut v = g.row(i).to_vec();
        project_out(&basis, &mut v);
        let r = norm2(&v);
        if r > threshold {
            basis.push(normalized(v, r));
            kept.push(i);
        }
    }
    if kept.len() > k {
        return Err(Error::RankExceedsK {
            rank: kept.len(),
            k,
        });
    }
    let unused: Vec<usize> = (0..g.rows()).filter(|i| !kept.contains(i)).collect();
    let missing = k.saturating_sub(kept.len());
    kept.extend(unused.into_iter().take(missing));
    kept.sort_unstable();
    Ok(kept)
}

/// Orthonormal basis of the null space of a real matrix.
///
/// The row space is orthonormalized first (rows with residual at most
/// `rank_tol * ‖f‖_F` are dependent); the kernel is then its orthogonal
/// complement, completed from the canonical basis vectors that are least
/// covered by what has been collected so far.
pub fn real_kernel_basis(f: &RealMatrix, tol: &Tolerance) -> Vec<Vec<f64>> {
    let n = f.cols();
    let threshold = tol.rank_tol * f.frobenius_norm();
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for i in 0..f.rows() {
        let mut v = f.row(i).to_vec();
        project_out(&basis, &mut v);
        let r = norm2(&v);
        if r > threshold {
            basis.push(normalized(v, r));
        }
    }
    let rank = basis.len();

    // covered[i] = ‖Q^T e_i‖², so ‖e_i − QQ^T e_i‖² = 1 − covered[i]
    let mut covered = vec![0.0; n];
    for q in &basis {
        for (c, x) in covered.iter_mut().zip(q) {
            *c += x * x;
        }
    }
    let mut used = vec![false; n];
    let mut kernel = Vec::with_capacity(n - rank);
    for _ in rank..n {
        let pick = (0..n)
            .filter(|&i| !used[i])
            .min_by(|&a, &b| covered[a].total_cmp(&covered[b]))
            .expect("kernel completion ran out of canonical vectors");
        used[pick] = true;
        let mut e = vec![0.0; n];
        e[pick] = 1.0;
        project_out(&basis, &mut e);
        project_out(&kernel, &mut e);
        let r = norm2(&e);
        let v = normalized(e, r);
        for (c, x) in covered.iter_mut().zip(&v) {
            *c += x * x;
        }
        kernel.push(v);
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn unit_column_is_already_orthonormal() {
        let b = ComplexMatrix::from_rows(&[[c(1.0, 0.0)], [c(0.0, 0.0)]]);
        let q = orthonormal_range_basis(&b, &Tolerance::default());
        assert_eq!(q, b);
    }

    #[test]
    fn duplicate_columns_give_rank_one() {
        let one = c(1.0, 0.0);
        let b = ComplexMatrix::from_rows(&[[one, one], [one, one]]);
        let q = orthonormal_range_basis(&b, &Tolerance::default());
        assert_eq!(q.cols(), 1);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((q[(0, 0)] - c(s, 0.0)).norm() < 1e-15);
        assert!((q[(1, 0)] - c(s, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn zero_matrix_has_empty_basis() {
        let q = orthonormal_range_basis(&ComplexMatrix::zeros(3, 2), &Tolerance::default());
        assert_eq!(q.shape(), (3, 0));
    }

    #[test]
    fn axis_aligned_projectors() {
        let tol = Tolerance::default();
        let top = ComplexMatrix::from_rows(&[[c(1.0, 0.0)], [c(0.0, 0.0)]]);
        let p = orthogonal_complement_projector(&top, &tol);
        assert_eq!(p, ComplexMatrix::diagonal(&[c(0.0, 0.0), c(1.0, 0.0)]));
        let bottom = ComplexMatrix::from_rows(&[[c(0.0, 0.0)], [c(1.0, 0.0)]]);
        let p = orthogonal_complement_projector(&bottom, &tol);
        assert_eq!(p, ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 0.0)]));
    }

    #[test]
    fn identity_rows_all_selected() {
        let g = ComplexMatrix::identity(4);
        let rows = row_space_generators(&g, 4, &Tolerance::default()).unwrap();
        assert_eq!(rows, vec![0, 1, 2, 3]);
    }

    #[test]
    fn duplicate_rows_keep_first() {
        let g = RealMatrix::from_rows(&[[1.0], [1.0]]);
        let rows = row_space_generators(&g, 1, &Tolerance::default()).unwrap();
        assert_eq!(rows, vec![0]);
    }

    #[test]
    fn rank_deficient_rows_are_padded() {
        let g = RealMatrix::from_rows(&[[0.0, 0.0], [1.0, 2.0], [2.0, 4.0]]);
        let rows = row_space_generators(&g, 2, &Tolerance::default()).unwrap();
        assert_eq!(rows, vec![0, 1]);
    }

    #[test]
    fn too_many_independent_rows() {
        let g = RealMatrix::identity(3);
        assert_eq!(
            row_space_generators(&g, 2, &Tolerance::default()),
            Err(Error::RankExceedsK { rank: 3, k: 2 })
        );
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(real_kernel_basis(&RealMatrix::identity(2), &Tolerance::default()).is_empty());
    }

    #[test]
    fn single_constraint_kernel() {
        let f = RealMatrix::from_rows(&[[1.0, 1.0]]);
        let k = real_kernel_basis(&f, &Tolerance::default());
        assert_eq!(k.len(), 1);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((k[0][0].abs() - s).abs() < 1e-15);
        assert!((k[0][0] + k[0][1]).abs() < 1e-15);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let k = real_kernel_basis(&RealMatrix::zeros(2, 3), &Tolerance::default());
        assert_eq!(k.len(), 3);
    }
}
