#![allow(dead_code)]

//! Worked-example data and reference computations written independently of
//! the library's kernels.

use conjulin::{Complex64, ComplexMatrix, ComplexVector, RealMatrix};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn r(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn i(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

/// 5×5 conjugate-linear example: `M`.
pub fn example5_m() -> ComplexMatrix {
    let z = r(0.0);
    ComplexMatrix::from_rows(&[
        [z, i(-1.0), z, c(2.0, -1.0), i(5.0)],
        [z, i(3.0), z, r(3.0), i(9.0)],
        [r(-1.0), r(5.0), c(1.0, -3.0), c(-3.0, 3.0), c(1.0, 7.0)],
        [z, i(-2.0), z, i(-1.0), i(-1.0)],
        [z, c(1.0, -1.0), z, i(1.0), c(-2.0, -3.0)],
    ])
}

pub fn example5_n() -> ComplexMatrix {
    let z = r(0.0);
    ComplexMatrix::from_rows(&[
        [i(-1.0), i(5.0), c(-3.0, 1.0), c(3.0, -3.0), c(7.0, 1.0)],
        [z, c(-3.0, 2.0), z, r(-2.0), c(-1.0, 3.0)],
        [z, r(-1.0), z, c(-1.0, 2.0), r(5.0)],
        [z, r(1.0), z, i(1.0), i(-1.0)],
        [z, r(5.0), z, c(7.0, 4.0), c(1.0, 2.0)],
    ])
}

pub fn example5_p() -> ComplexVector {
    vec![c(1.0, -1.0), r(3.0), c(-1.0, 1.0), c(5.0, 1.0), r(1.0)]
}

/// Reference particular solution (4 decimals).
pub fn example5_particular() -> ComplexVector {
    vec![
        c(-27.4310, 50.9483),
        c(-4.0647, 5.7543),
        r(0.0),
        c(2.7694, -1.2220),
        c(0.6875, 0.9203),
    ]
}

/// Reference kernel direction.
pub fn example5_direction() -> ComplexVector {
    vec![c(1.0, -3.0), r(0.0), r(1.0), r(0.0), r(0.0)]
}

/// 6×6 SPD example (4 decimals).
pub fn example6_a() -> RealMatrix {
    RealMatrix::from_rows(&[
        [2.0483, -0.3065, 0.7403, -0.3338, 0.9431, 1.4834],
        [-0.3065, 1.2538, -1.1144, 0.7319, -0.2412, 0.1729],
        [0.7403, -1.1144, 1.8337, -0.6019, -0.0518, 0.6788],
        [-0.3338, 0.7319, -0.6019, 1.6525, 0.4313, 0.0371],
        [0.9431, -0.2412, -0.0518, 0.4313, 1.4893, 0.3625],
        [1.4834, 0.1729, 0.6788, 0.0371, 0.3625, 1.5775],
    ])
}

pub fn example6_b() -> Vec<f64> {
    vec![-1.7746, -1.3900, -1.9215, -0.2593, 1.3289, 0.4696]
}

pub const EXAMPLE6_X: [f64; 6] = [-33.1807, -56.9574, -42.5687, 2.4589, -3.3323, 56.7669];
pub const EXAMPLE6_EIG_A: [f64; 6] = [0.0245, 0.1082, 1.0932, 1.4319, 2.8521, 4.3453];
pub const EXAMPLE6_EIG_S: [f64; 3] = [0.0463, 0.2488, 2.0073];
pub const EXAMPLE6_COND_A: f64 = 177.3795;
pub const EXAMPLE6_COND_S: f64 = 43.3843;

pub fn example6_schur() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        [c(0.5756, 0.0), c(0.3906, 0.2060), c(-0.1576, -0.5196)],
        [c(0.3906, -0.2060), c(0.8131, 0.0), c(-0.5220, -0.6089)],
        [c(-0.1576, 0.5196), c(-0.5220, 0.6089), c(0.9137, 0.0)],
    ])
}

pub fn example6_q() -> ComplexVector {
    vec![c(0.1759, -1.9830), c(2.1302, 1.2597), c(1.4658, -1.7835)]
}

// ---------------------------------------------------------------- oracles

/// Rank by Gaussian elimination with complete pivoting.
pub fn oracle_rank(a: &RealMatrix, rel_tol: f64) -> usize {
    let (rows, cols) = a.shape();
    let mut m: Vec<Vec<f64>> = (0..rows).map(|i| a.row(i).to_vec()).collect();
    let scale = m.iter().flatten().fold(0.0f64, |s, x| s.max(x.abs()));
    if scale == 0.0 {
        return 0;
    }
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        let mut best = (k, k, 0.0);
        for (ii, row) in m.iter().enumerate().skip(k) {
            for (jj, &x) in row.iter().enumerate().skip(k) {
                if x.abs() > best.2 {
                    best = (ii, jj, x.abs());
                }
            }
        }
        if best.2 <= rel_tol * scale {
            break;
        }
        m.swap(k, best.0);
        for row in m.iter_mut() {
            row.swap(k, best.1);
        }
        for ii in k + 1..rows {
            let f = m[ii][k] / m[k][k];
            for jj in k..cols {
                m[ii][jj] -= f * m[k][jj];
            }
        }
        rank += 1;
    }
    rank
}

fn orthonormalize(vectors: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut q: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &q {
                let d: f64 = b.iter().zip(&w).map(|(x, y)| x * y).sum();
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= d * bi;
                }
            }
        }
        let nrm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        let vn = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if nrm > 1e-9 * vn.max(1.0) {
            q.push(w.iter().map(|x| x / nrm).collect());
        }
    }
    q
}

/// Largest distance from a (normalized) vector of `vectors` to the span of `basis`.
pub fn span_gap(vectors: &[Vec<f64>], basis: &[Vec<f64>]) -> f64 {
    let q = orthonormalize(basis);
    vectors
        .iter()
        .map(|v| {
            let vn = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if vn == 0.0 {
                return 0.0;
            }
            let mut w: Vec<f64> = v.iter().map(|x| x / vn).collect();
            for b in &q {
                let d: f64 = b.iter().zip(&w).map(|(x, y)| x * y).sum();
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= d * bi;
                }
            }
            w.iter().map(|x| x * x).sum::<f64>().sqrt()
        })
        .fold(0.0, f64::max)
}

pub fn real_dim(vectors: &[Vec<f64>]) -> usize {
    orthonormalize(vectors).len()
}

pub fn realify(v: &[Complex64]) -> Vec<f64> {
    v.iter().map(|z| z.re).chain(v.iter().map(|z| z.im)).collect()
}

/// Whether the real span of `basis` is closed under multiplication by `i`.
pub fn i_closed(basis: &[ComplexVector], tol: f64) -> bool {
    let real: Vec<Vec<f64>> = basis.iter().map(|v| realify(v)).collect();
    let rotated: Vec<Vec<f64>> = basis
        .iter()
        .map(|v| realify(&v.iter().map(|z| z * Complex64::i()).collect::<Vec<_>>()))
        .collect();
    span_gap(&rotated, &real) <= tol
}

/// Plain real Cholesky solve.
pub fn real_cholesky_solve(a: &RealMatrix, b: &[f64]) -> Vec<f64> {
    let n = a.rows();
    let mut l = vec![vec![0.0; n]; n];
    for j in 0..n {
        let d = a[(j, j)] - (0..j).map(|k| l[j][k] * l[j][k]).sum::<f64>();
        assert!(d > 0.0, "oracle: not positive definite");
        l[j][j] = d.sqrt();
        for ii in j + 1..n {
            l[ii][j] = (a[(ii, j)] - (0..j).map(|k| l[ii][k] * l[j][k]).sum::<f64>()) / l[j][j];
        }
    }
    let mut y = b.to_vec();
    for ii in 0..n {
        y[ii] = (y[ii] - (0..ii).map(|k| l[ii][k] * y[k]).sum::<f64>()) / l[ii][ii];
    }
    for ii in (0..n).rev() {
        y[ii] = (y[ii] - (ii + 1..n).map(|k| l[k][ii] * y[k]).sum::<f64>()) / l[ii][ii];
    }
    y
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Angle between two complex lines.
pub fn line_angle(a: &[Complex64], b: &[Complex64]) -> f64 {
    let na = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let nb = b.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let ip: Complex64 = a.iter().zip(b).map(|(x, y)| x.conj() * y).sum();
    (ip.norm() / (na * nb)).min(1.0).acos()
}
