//! Small dense floating-point matrices: products, one-sided Jacobi SVD and
//! cyclic Jacobi eigen-decomposition of symmetric matrices.

use std::fmt;

use crate::error::{Error, Result};

/// Row-major dense matrix of `f64`.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    /// Builds a matrix from rows; rejects ragged or non-finite input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("rows have different lengths".into()));
        }
        let data: Vec<f64> = rows.iter().flatten().copied().collect();
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("matrix entries must be finite".into()));
        }
        Ok(DenseMatrix { rows: r, cols: c, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: f64) -> Self {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Adds `c * other` in place.
    pub fn axpy(&mut self, c: f64, other: &Self) {
        assert_eq!(self.shape(), other.shape());
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += c * b;
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| (self[(i, j)] - self[(j, i)]).abs() <= tol))
    }

    /// Largest singular value.
    pub fn spectral_norm(&self) -> f64 {
        if self.rows == 0 || self.cols == 0 {
            return 0.0;
        }
        svd(self).singular_values.first().copied().unwrap_or(0.0)
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// `A = left * diag(singular_values) * right`, with `left` (`m x m`) and
/// `right` (`n x n`) orthogonal.
#[derive(Clone, Debug, PartialEq)]
pub struct Svd {
    pub left: DenseMatrix,
    pub singular_values: Vec<f64>,
    pub right: DenseMatrix,
}

impl Svd {
    /// `left * D * right` with `D` the `m x n` diagonal matrix of the given values.
    pub fn compose(&self, values: &[f64]) -> DenseMatrix {
        let (m, n) = (self.left.rows(), self.right.rows());
        let mut d = DenseMatrix::zeros(m, n);
        for (i, v) in values.iter().enumerate() {
            d[(i, i)] = *v;
        }
        self.left.matmul(&d).matmul(&self.right)
    }
}

const JACOBI_EPS: f64 = 1e-12;
const MAX_SWEEPS: usize = 60;

/// Singular value decomposition by one-sided Jacobi rotations.
///
/// Singular values are nonincreasing; the first entry of magnitude above
/// `1e-12` in each column of `left` is positive.
pub fn svd(a: &DenseMatrix) -> Svd {
    let (m, n) = a.shape();
    if m < n {
        let t = svd(&a.transpose());
        let mut out = Svd { left: t.right.transpose(), singular_values: t.singular_values, right: t.left.transpose() };
        fix_signs(&mut out);
        return out;
    }
    // columns of w are rotated until mutually orthogonal; v accumulates the rotations
    let mut w = a.clone();
    let mut v = DenseMatrix::identity(n);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, 0.0);
                for i in 0..m {
                    let (x, y) = (w[(i, p)], w[(i, q)]);
                    alpha += x * x;
                    beta += y * y;
                    gamma += x * y;
                }
                if gamma == 0.0 || gamma.abs() <= JACOBI_EPS * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..m {
                    let (x, y) = (w[(i, p)], w[(i, q)]);
                    w[(i, p)] = c * x - s * y;
                    w[(i, q)] = s * x + c * y;
                }
                for i in 0..n {
                    let (x, y) = (v[(i, p)], v[(i, q)]);
                    v[(i, p)] = c * x - s * y;
                    v[(i, q)] = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let norms: Vec<f64> = (0..n).map(|j| w.column(j).iter().map(|x| x * x).sum::<f64>().sqrt()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]).then(i.cmp(&j)));
    let scale = norms.iter().fold(0.0f64, |a, b| a.max(*b)).max(f64::MIN_POSITIVE);
    let mut left_cols: Vec<Vec<f64>> = Vec::new();
    let mut right = DenseMatrix::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for (k, &j) in order.iter().enumerate() {
        values.push(norms[j]);
        for i in 0..n {
            right[(k, i)] = v[(i, j)];
        }
        if norms[j] > 1e-14 * scale {
            left_cols.push(w.column(j).iter().map(|x| x / norms[j]).collect());
        }
    }
    complete_orthonormal(&mut left_cols, m);
    let left = DenseMatrix::from_fn(m, m, |i, j| left_cols[j][i]);
    let mut out = Svd { left, singular_values: values, right };
    fix_signs(&mut out);
    out
}

/// Extends orthonormal `cols` (vectors of length `m`) to a basis of `R^m`
/// by Gram-Schmidt against the standard basis.
fn complete_orthonormal(cols: &mut Vec<Vec<f64>>, m: usize) {
    let mut e = 0;
    while cols.len() < m && e < m {
        let mut v = vec![0.0; m];
        v[e] = 1.0;
        e += 1;
        // two passes for stability
        for _ in 0..2 {
            for c in cols.iter() {
                let d: f64 = c.iter().zip(&v).map(|(a, b)| a * b).sum();
                for (x, y) in v.iter_mut().zip(c) {
                    *x -= d * y;
                }
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
}

fn fix_signs(s: &mut Svd) {
    let (m, n) = (s.left.rows(), s.right.rows());
    for k in 0..m {
        let first = (0..m).map(|i| s.left[(i, k)]).find(|x| x.abs() > 1e-12).unwrap_or(0.0);
        if first < 0.0 {
            for i in 0..m {
                s.left[(i, k)] = -s.left[(i, k)];
            }
            if k < n {
                for j in 0..n {
                    s.right[(k, j)] = -s.right[(k, j)];
                }
            }
        }
    }
    s.singular_values.truncate(m.min(n));
}

/// Eigen-decomposition of a symmetric matrix: values in nonincreasing order
/// and the matching orthonormal eigenvectors as columns.
pub fn symmetric_eigen(a: &DenseMatrix) -> (Vec<f64>, DenseMatrix) {
    let n = a.rows();
    assert_eq!(n, a.cols(), "matrix is not square");
    let mut m = a.clone();
    let mut v = DenseMatrix::identity(n);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| m[(i, j)].powi(2)).sum();
        let total: f64 = off + (0..n).map(|i| m[(i, i)].powi(2)).sum::<f64>();
        if off <= (JACOBI_EPS * JACOBI_EPS) * total.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (x, y) = (m[(k, p)], m[(k, q)]);
                    m[(k, p)] = c * x - s * y;
                    m[(k, q)] = s * x + c * y;
                }
                for k in 0..n {
                    let (x, y) = (m[(p, k)], m[(q, k)]);
                    m[(p, k)] = c * x - s * y;
                    m[(q, k)] = s * x + c * y;
                }
                for k in 0..n {
                    let (x, y) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * x - s * y;
                    v[(k, q)] = s * x + c * y;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(j, j)].total_cmp(&m[(i, i)]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| m[(i, i)]).collect();
    let vectors = DenseMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    (values, vectors)
}

/// Largest eigenvalue of a symmetric matrix and a unit eigenvector for it.
pub fn max_eigenpair(a: &DenseMatrix) -> (f64, Vec<f64>) {
    let (values, vectors) = symmetric_eigen(a);
    (values[0], vectors.column(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orthogonality_error(q: &DenseMatrix) -> f64 {
        q.transpose().matmul(q).sub(&DenseMatrix::identity(q.cols())).max_abs()
    }

    fn pseudo_random(rows: usize, cols: usize, seed: u64) -> DenseMatrix {
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        DenseMatrix::from_fn(rows, cols, |_, _| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        })
    }

    #[test]
    fn svd_of_identity_and_diagonal() {
        let s = svd(&DenseMatrix::identity(3));
        assert_eq!(s.singular_values, vec![1.0, 1.0, 1.0]);
        let s = svd(&DenseMatrix::diag(&[1.0, 3.0]));
        assert_eq!(s.singular_values, vec![3.0, 1.0]);
        assert!(s.compose(&s.singular_values).sub(&DenseMatrix::diag(&[1.0, 3.0])).max_abs() < 1e-14);
    }

    #[test]
    fn svd_reconstructs_rectangular() {
        for (m, n, seed) in [(4, 6, 1), (6, 4, 2), (5, 5, 3), (1, 3, 4), (3, 1, 5)] {
            let a = pseudo_random(m, n, seed);
            let s = svd(&a);
            assert!(orthogonality_error(&s.left) <= 1e-10);
            assert!(orthogonality_error(&s.right) <= 1e-10);
            assert!(s.compose(&s.singular_values).sub(&a).max_abs() <= 1e-8 * a.max_abs());
            assert!(s.singular_values.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn svd_of_rank_deficient() {
        let a = DenseMatrix::from_rows(&[vec![1.0, 2.0, 3.0], vec![2.0, 4.0, 6.0], vec![0.0, 0.0, 0.0]]).unwrap();
        let s = svd(&a);
        assert!(s.singular_values[1] < 1e-12);
        assert!(orthogonality_error(&s.left) <= 1e-10);
        assert!(s.compose(&s.singular_values).sub(&a).max_abs() <= 1e-12);
    }

    #[test]
    fn eigen_of_symmetric() {
        let a = DenseMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let (vals, vecs) = symmetric_eigen(&a);
        assert!((vals[0] - 3.0).abs() < 1e-14 && (vals[1] - 1.0).abs() < 1e-14);
        let back = vecs.matmul(&DenseMatrix::diag(&vals)).matmul(&vecs.transpose());
        assert!(back.sub(&a).max_abs() < 1e-14);
        let b = pseudo_random(5, 5, 9);
        let sym = b.add(&b.transpose());
        let (vals, vecs) = symmetric_eigen(&sym);
        let back = vecs.matmul(&DenseMatrix::diag(&vals)).matmul(&vecs.transpose());
        assert!(back.sub(&sym).max_abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(DenseMatrix::from_rows(&[vec![1.0], vec![1.0, 2.0]]).is_err());
        assert!(DenseMatrix::from_rows(&[vec![f64::NAN]]).is_err());
    }
}
