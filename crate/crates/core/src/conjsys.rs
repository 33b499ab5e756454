//! Conjugate-linear systems `Mz + N conj(z) = p` and their real form.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::RowEchelon;
use crate::matrix::{
    check_finite, complexify_vec, conj_vec, norm2, realify_vec, sub_vec, ComplexMatrix, ComplexVector, RealMatrix,
};
use crate::tol::Tolerance;

/// The system `Mz + N conj(z) = p` with square `M`, `N` of equal size.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjugateSystem {
    m: ComplexMatrix,
    n: ComplexMatrix,
    p: ComplexVector,
}

impl ConjugateSystem {
    pub fn new(m: ComplexMatrix, n: ComplexMatrix, p: ComplexVector) -> Result<Self> {
        check_pair(&m, &n)?;
        if p.len() != m.rows() {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for a system of size {}",
                p.len(),
                m.rows()
            )));
        }
        check_finite(&p)?;
        Ok(Self { m, n, p })
    }

    /// Builds the system whose real form is `F (x; y) = g`.
    pub fn from_realified(f: &RealMatrix, g: &[f64]) -> Result<Self> {
        let (m, n) = pair_from_realified(f)?;
        if g.len() != f.rows() {
            return Err(Error::DimensionMismatch("real right-hand side length".into()));
        }
        Self::new(m, n, complexify_vec(g))
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn m(&self) -> &ComplexMatrix {
        &self.m
    }

    pub fn n(&self) -> &ComplexMatrix {
        &self.n
    }

    pub fn p(&self) -> &[Complex64] {
        &self.p
    }

    /// Same `(M, N)` with a different right-hand side.
    pub fn with_rhs(&self, p: ComplexVector) -> Result<Self> {
        Self::new(self.m.clone(), self.n.clone(), p)
    }

    /// `Mz + N conj(z)`.
    pub fn apply(&self, z: &[Complex64]) -> ComplexVector {
        let a = self.m.mul_vec(z);
        let b = self.n.mul_vec(&conj_vec(z));
        a.iter().zip(&b).map(|(x, y)| x + y).collect()
    }

    /// `‖Mz + N conj(z) − p‖₂`.
    pub fn residual(&self, z: &[Complex64]) -> f64 {
        norm2(&sub_vec(&self.apply(z), &self.p))
    }

    /// Real form `(F, g)`: `z = x + iy` solves the system iff `F (x; y) = g`.
    pub fn realify(&self) -> (RealMatrix, Vec<f64>) {
        (realify_pair(&self.m, &self.n), realify_vec(&self.p))
    }
}

pub(crate) fn check_pair(m: &ComplexMatrix, n: &ComplexMatrix) -> Result<()> {
    if !m.is_square() || m.shape() != n.shape() {
        return Err(Error::DimensionMismatch(format!(
            "M is {}x{} and N is {}x{}; both must be square of equal size",
            m.rows(),
            m.cols(),
            n.rows(),
            n.cols()
        )));
    }
    Ok(())
}

/// Real `2n × 2n` matrix of `z ↦ Mz + N conj(z)` in the coordinates `(ℜz; ℑz)`:
/// `[[ℜM+ℜN, ℑN−ℑM], [ℑM+ℑN, ℜM−ℜN]]`.
pub fn realify_pair(m: &ComplexMatrix, n: &ComplexMatrix) -> RealMatrix {
    let (mr, mi, nr, ni) = (m.re(), m.im(), n.re(), n.im());
    RealMatrix::from_blocks(&(&mr + &nr), &(&ni - &mi), &(&mi + &ni), &(&mr - &nr))
}

/// Inverse of [`realify_pair`]: every real-linear map of `ℂⁿ` is
/// `z ↦ Mz + N conj(z)` for exactly one pair `(M, N)`.
pub fn pair_from_realified(f: &RealMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if !f.is_square() || f.rows() % 2 != 0 {
        return Err(Error::DimensionMismatch(format!(
            "real form must be 2n x 2n, got {}x{}",
            f.rows(),
            f.cols()
        )));
    }
    let n = f.rows() / 2;
    let (f11, f12, f21, f22) = (f.block(0, 0, n, n), f.block(0, n, n, n), f.block(n, 0, n, n), f.block(n, n, n, n));
    let half = |a: &RealMatrix| a.scale(0.5);
    let m_re = half(&(&f11 + &f22));
    let m_im = half(&(&f21 - &f12));
    let n_re = half(&(&f11 - &f22));
    let n_im = half(&(&f12 + &f21));
    Ok((ComplexMatrix::from_parts(&m_re, &m_im), ComplexMatrix::from_parts(&n_re, &n_im)))
}

/// Field over which a kernel basis spans the solution directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanField {
    Real,
    Complex,
}

impl SpanField {
    pub fn as_str(self) -> &'static str {
        match self {
            SpanField::Real => "REAL",
            SpanField::Complex => "COMPLEX",
        }
    }
}

/// `particular + span(kernel_basis)`, the span taken over `span_field`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSolutionSet {
    pub feasible: bool,
    pub particular: Option<ComplexVector>,
    pub kernel_basis: Vec<ComplexVector>,
    pub span_field: SpanField,
}

impl AffineSolutionSet {
    pub fn infeasible(span_field: SpanField) -> Self {
        Self {
            feasible: false,
            particular: None,
            kernel_basis: Vec::new(),
            span_field,
        }
    }

    /// Dimension of the direction space over the reals.
    pub fn real_dimension(&self) -> usize {
        match self.span_field {
            SpanField::Real => self.kernel_basis.len(),
            SpanField::Complex => 2 * self.kernel_basis.len(),
        }
    }

    /// Real spanning set of the direction space, as `(ℜv; ℑv)` vectors.
    pub fn real_directions(&self) -> Vec<Vec<f64>> {
        let mut out = Vec::new();
        for v in &self.kernel_basis {
            out.push(realify_vec(v));
            if self.span_field == SpanField::Complex {
                let iv: ComplexVector = v.iter().map(|z| z * Complex64::i()).collect();
                out.push(realify_vec(&iv));
            }
        }
        out
    }
}

/// Solves the real form `F (x; y) = g` by row reduction with partial
/// pivoting. Independent of the projector machinery, so it serves as the
/// reference for the reduction path.
///
/// The particular solution has every free variable at zero and receives one
/// refinement step. When its residual is too large, a least-squares solution
/// from the normal equations decides consistency. The span field is always
/// `Real`.
pub fn solve_via_realification(sys: &ConjugateSystem, tol: &Tolerance) -> AffineSolutionSet {
    let (f, g) = sys.realify();
    let limit = tol.residual_tol * (1.0 + norm2(&g));
    let residual_of = |x: &[f64]| norm2(&sub_vec(&f.mul_vec(x), &g));

    let echelon = RowEchelon::new(&f, &RealMatrix::from_columns(g.len(), &[g.clone()]), tol.rank_tol);
    let mut x = echelon.pivot_solution(0);
    let r = sub_vec(&g, &f.mul_vec(&x));
    let correction = RowEchelon::new(&f, &RealMatrix::from_columns(r.len(), &[r]), tol.rank_tol).pivot_solution(0);
    for (xi, di) in x.iter_mut().zip(&correction) {
        *xi += di;
    }

    let solution = if residual_of(&x) <= limit {
        Some(x)
    } else {
        let x_ls = least_squares(&f, &g, tol);
        (residual_of(&x_ls) <= limit).then_some(x_ls)
    };

    match solution {
        Some(x) => AffineSolutionSet {
            feasible: true,
            particular: Some(complexify_vec(&x)),
            kernel_basis: echelon.kernel_basis().iter().map(|v| complexify_vec(v)).collect(),
            span_field: SpanField::Real,
        },
        None => AffineSolutionSet::infeasible(SpanField::Real),
    }
}

fn least_squares(f: &RealMatrix, g: &[f64], tol: &Tolerance) -> Vec<f64> {
    let ft = f.transpose();
    let normal = &ft * f;
    let rhs = ft.mul_vec(g);
    RowEchelon::new(&normal, &RealMatrix::from_columns(rhs.len(), &[rhs]), tol.rank_tol).pivot_solution(0)
}

/// Whether `p` lies in the range of `z ↦ Mz + N conj(z)`.
pub fn range_membership(sys: &ConjugateSystem, tol: &Tolerance) -> bool {
    solve_via_realification(sys, tol).feasible
}

/// Residual check against the system for every kernel vector: `‖Mv + N conj(v)‖`.
pub fn homogeneous_residual(sys: &ConjugateSystem, v: &[Complex64]) -> f64 {
    norm2(&sys.apply(v))
}
