//! Gauss-Jordan row reduction with partial pivoting.

use crate::matrix::{Matrix, Scalar};

/// Reduced row echelon form of `[A | R]` for one or more right-hand sides.
#[derive(Debug, Clone)]
pub struct RowEchelon<T> {
    reduced: Matrix<T>,
    rhs: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Scalar> RowEchelon<T> {
    /// Reduces `a` alongside the columns of `rhs`. A candidate pivot with
    /// magnitude at most `rank_tol * ‖a‖_F` marks its column as free.
    pub fn new(a: &Matrix<T>, rhs: &Matrix<T>, rank_tol: f64) -> Self {
        assert_eq!(a.rows(), rhs.rows(), "row reduction rhs row mismatch");
        let threshold = rank_tol * a.frobenius_norm();
        let mut m = a.clone();
        let mut r = rhs.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols() {
            if row == m.rows() {
                break;
            }
            let (best, mag) = (row..m.rows())
                .map(|i| (i, m[(i, col)].abs()))
                .fold((row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if mag <= threshold {
                continue;
            }
            m.swap_rows(row, best);
            r.swap_rows(row, best);
            let inv = T::one() / m[(row, col)];
            for j in col..m.cols() {
                m[(row, j)] *= inv;
            }
            for j in 0..r.cols() {
                r[(row, j)] *= inv;
            }
            m[(row, col)] = T::one();
            for i in 0..m.rows() {
                if i == row {
                    continue;
                }
                let f = m[(i, col)];
                if f == T::zero() {
                    continue;
                }
                for j in col..m.cols() {
                    let v = m[(row, j)];
                    m[(i, j)] -= f * v;
                }
                for j in 0..r.cols() {
                    let v = r[(row, j)];
                    r[(i, j)] -= f * v;
                }
                m[(i, col)] = T::zero();
            }
            pivots.push(col);
            row += 1;
        }
        Self {
            reduced: m,
            rhs: r,
            pivots,
        }
    }

    /// Row reduction of `a` alone.
    pub fn of(a: &Matrix<T>, rank_tol: f64) -> Self {
        Self::new(a, &Matrix::zeros(a.rows(), 0), rank_tol)
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Solution of `A x = rhs[:, k]` with every free variable set to zero.
    pub fn pivot_solution(&self, k: usize) -> Vec<T> {
        let mut x = vec![T::zero(); self.reduced.cols()];
        for (i, &c) in self.pivots.iter().enumerate() {
            x[c] = self.rhs[(i, k)];
        }
        x
    }

    /// One kernel vector per free column: that variable set to one, the other
    /// free variables zero.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let n = self.reduced.cols();
        let free = (0..n).filter(|c| !self.pivots.contains(c));
        free.map(|f| {
            let mut v = vec![T::zero(); n];
            v[f] = T::one();
            for (i, &c) in self.pivots.iter().enumerate() {
                v[c] = -self.reduced[(i, f)];
            }
            v
        })
        .collect()
    }

    /// Transformed right-hand side entries in the rows without a pivot.
    /// Nonzero values signal an inconsistent system.
    pub fn inconsistency(&self, k: usize) -> f64 {
        (self.rank()..self.rhs.rows())
            .map(|i| self.rhs[(i, k)].abs_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

pub fn rank<T: Scalar>(a: &Matrix<T>, rank_tol: f64) -> usize {
    RowEchelon::of(a, rank_tol).rank()
}

/// Inverse by Gauss-Jordan elimination, or `None` when `a` is numerically
/// singular.
pub fn inverse<T: Scalar>(a: &Matrix<T>, rank_tol: f64) -> Option<Matrix<T>> {
    assert!(a.is_square(), "inverse of a non-square matrix");
    let e = RowEchelon::new(a, &Matrix::identity(a.rows()), rank_tol);
    (e.rank() == a.rows()).then_some(e.rhs)
}
