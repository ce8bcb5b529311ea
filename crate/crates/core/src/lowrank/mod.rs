//! Voronoi cells of the variety of matrices of rank at most `r`.
//!
//! The cell of a rank-`r` matrix `V` consists of the matrices `U` that agree
//! with `V` on its singular frame and whose complementary block has spectral
//! norm at most the smallest nonzero singular value of `V`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{svd, symmetric_eigen, DenseMatrix, Svd};

/// Default absolute tolerance on singular-value comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
}

/// The nearest matrix of rank at most `r` (truncated SVD).
pub fn eckart_young_truncate(u: &DenseMatrix, r: usize) -> Result<DenseMatrix> {
    let k = u.rows().min(u.cols());
    if r == 0 || r > k {
        return Err(Error::InvalidInput(format!("rank {r} is outside 1..={k}")));
    }
    let s = svd(u);
    let mut vals = s.singular_values.clone();
    for v in vals.iter_mut().skip(r) {
        *v = 0.0;
    }
    Ok(s.compose(&vals))
}

/// Number of singular values above `tol`.
pub fn numerical_rank(a: &DenseMatrix, tol: f64) -> usize {
    svd(a).singular_values.iter().filter(|&&s| s > tol).count()
}

/// The data describing the cell of a rank-`r` matrix in its own singular frame.
#[derive(Clone, Debug, PartialEq)]
pub struct CellDescription {
    /// Leading `r x r` block of `V` in its singular frame (diagonal).
    pub v11: DenseMatrix,
    /// Smallest nonzero singular value of `V`.
    pub radius: f64,
    /// Shape of the free block, `(m - r, n - r)`.
    pub free_shape: (usize, usize),
    pub frame: Svd,
}

/// Checks that `v` has numerical rank exactly `r` with `sigma_r > tol`.
pub fn describe_cell(v: &DenseMatrix, r: usize, tol: f64) -> Result<CellDescription> {
    let (m, n) = v.shape();
    if r == 0 || r > m.min(n) {
        return Err(Error::InvalidInput(format!("rank {r} is outside 1..={}", m.min(n))));
    }
    let frame = svd(v);
    let found = frame.singular_values.iter().filter(|&&s| s > tol).count();
    if found != r {
        return Err(Error::RankMismatch { found, expected: r });
    }
    let radius = frame.singular_values[r - 1];
    Ok(CellDescription { v11: DenseMatrix::diag(&frame.singular_values[..r]), radius, free_shape: (m - r, n - r), frame })
}

fn classify(free_norm: f64, radius: f64, tol: f64) -> Membership {
    if free_norm < radius - tol {
        Membership::Inside
    } else if free_norm <= radius + tol {
        Membership::Boundary
    } else {
        Membership::Outside
    }
}

/// Decides whether the rank-`r` matrix `v` is a nearest rank-`r` matrix to `u`:
/// `Inside` when it is the unique one, `Boundary` when the nearest point is not unique.
pub fn cell_membership(u: &DenseMatrix, v: &DenseMatrix, r: usize, tol: f64) -> Result<Membership> {
    if u.shape() != v.shape() {
        return Err(Error::InvalidInput(format!("shapes {:?} and {:?} differ", u.shape(), v.shape())));
    }
    let cell = describe_cell(v, r, tol)?;
    let (m, n) = u.shape();
    let aligned = cell.frame.left.transpose().matmul(u).matmul(&cell.frame.right.transpose());
    let a11 = aligned.block(0, r, 0, r);
    let off = a11.sub(&cell.v11).max_abs().max(aligned.block(0, r, r, n).max_abs()).max(aligned.block(r, m, 0, r).max_abs());
    if off > tol {
        return Ok(Membership::Outside);
    }
    let free = aligned.block(r, m, r, n);
    Ok(classify(free.spectral_norm(), cell.radius, tol))
}

/// `sigma_max(w) <= radius + tol`.
pub fn spectral_ball_membership(w: &DenseMatrix, radius: f64, tol: f64) -> Result<bool> {
    if radius <= 0.0 {
        return Err(Error::InvalidInput("radius must be positive".into()));
    }
    Ok(w.spectral_norm() <= radius + tol)
}

/// Cell membership for symmetric matrices under the Frobenius norm, using
/// eigen-decompositions; `r` is the rank of `v`.
pub fn symmetric_frobenius_membership(u: &DenseMatrix, v: &DenseMatrix, r: usize, tol: f64) -> Result<Membership> {
    if u.shape() != v.shape() {
        return Err(Error::InvalidInput("shapes differ".into()));
    }
    let scale = u.max_abs().max(v.max_abs()).max(1.0);
    if !u.is_symmetric(1e-12 * scale) || !v.is_symmetric(1e-12 * scale) {
        return Err(Error::InvalidInput("matrix is not symmetric".into()));
    }
    let n = v.rows();
    let (vals, vecs) = symmetric_eigen(v);
    // reorder by decreasing magnitude
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| vals[j].abs().total_cmp(&vals[i].abs()).then(i.cmp(&j)));
    let found = vals.iter().filter(|x| x.abs() > tol).count();
    if found != r || r == 0 {
        return Err(Error::RankMismatch { found, expected: r });
    }
    let q = DenseMatrix::from_fn(n, n, |i, k| vecs[(i, order[k])]);
    let lead: Vec<f64> = order[..r].iter().map(|&i| vals[i]).collect();
    let aligned = q.transpose().matmul(u).matmul(&q);
    let off = aligned.block(0, r, 0, r).sub(&DenseMatrix::diag(&lead)).max_abs().max(aligned.block(0, r, r, n).max_abs());
    if off > tol {
        return Ok(Membership::Outside);
    }
    let free = aligned.block(r, n, r, n);
    let free_norm = if free.rows() == 0 { 0.0 } else { symmetric_eigen(&free).0.iter().fold(0.0f64, |a, x| a.max(x.abs())) };
    let radius = lead.iter().fold(f64::INFINITY, |a, x| a.min(x.abs()));
    Ok(classify(free_norm, radius, tol))
}

/// Degree of `t -> det(W(t) W(t)^T - I)` along a random integer line
/// `W(t) = W0 + t D` of `rows x cols` matrices, computed exactly by finite
/// differences. Generically this is the degree of the spectral-ball boundary.
pub fn spectral_boundary_degree(rows: usize, cols: usize, seed: u64) -> Result<usize> {
    if rows == 0 || rows > cols {
        return Err(Error::InvalidInput("need 1 <= rows <= cols".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || -> Vec<Vec<i64>> { (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-5..=5)).collect()).collect() };
    let (w0, dir) = (draw(), draw());
    let max_deg = 2 * rows;
    let values: Vec<BigRational> = (0..=max_deg as i64 + 1)
        .map(|t| {
            let w: Vec<Vec<BigInt>> = (0..rows).map(|i| (0..cols).map(|j| BigInt::from(w0[i][j] + t * dir[i][j])).collect()).collect();
            let g: Vec<Vec<BigRational>> = (0..rows)
                .map(|i| {
                    (0..rows)
                        .map(|k| {
                            let dot: BigInt = (0..cols).map(|j| &w[i][j] * &w[k][j]).sum();
                            BigRational::from_integer(dot - BigInt::from(i64::from(i == k)))
                        })
                        .collect()
                })
                .collect();
            rational_det(g)
        })
        .collect();
    // the k-th forward difference of a degree-k polynomial is its only nonzero constant
    let mut diffs = values;
    let mut degree = 0;
    for k in 0..diffs.len() {
        if diffs.iter().any(|v| !v.is_zero()) {
            degree = k;
        }
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(degree)
}

fn rational_det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else { return BigRational::zero() };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for i in col + 1..n {
            let f = &a[i][col] / &pivot;
            if f.is_zero() {
                continue;
            }
            for j in col..n {
                let t = &f * &a[col][j];
                a[i][j] -= t;
            }
        }
    }
    det
}
