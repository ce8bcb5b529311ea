//! Feasibility of `sum_i lambda_i B_i <= C` subject to `E lambda = e`.
//!
//! Minimizes `phi(lambda) = lambda_max(sum_i lambda_i B_i - C)` over the
//! affine solution set of the equalities by projected subgradient steps with
//! a Polyak step size aimed at an adaptively lowered target level.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{max_eigenpair, svd, DenseMatrix};

/// Default classification tolerance on `phi`.
pub const DEFAULT_TOL: f64 = 1e-7;
/// Iteration cap of the subgradient method.
pub const MAX_ITERATIONS: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub struct LmiProblem {
    pub b: Vec<DenseMatrix>,
    pub c: DenseMatrix,
    /// Rows of `E` (each of length `k`) and the right-hand side `e`.
    pub equalities: Option<(DenseMatrix, Vec<f64>)>,
    pub tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LmiStatus {
    Feasible,
    Infeasible,
    /// `E lambda = e` has no solution.
    InconsistentEqualities,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LmiOutcome {
    pub status: LmiStatus,
    /// Best point found (a witness when feasible).
    pub lambda: Option<Vec<f64>>,
    /// Best value of `phi`; the equality residual when inconsistent.
    pub margin: f64,
    pub iterations: usize,
}

impl LmiProblem {
    fn validate(&self) -> Result<usize> {
        let k = self.b.len();
        let s = self.c.rows();
        if !self.c.is_symmetric(1e-12 * self.c.max_abs().max(1.0)) {
            return Err(Error::InvalidInput("C is not symmetric".into()));
        }
        for bi in &self.b {
            if bi.shape() != (s, s) || !bi.is_symmetric(1e-12 * bi.max_abs().max(1.0)) {
                return Err(Error::InvalidInput("LMI matrices must be symmetric of a common size".into()));
            }
        }
        if let Some((e, rhs)) = &self.equalities {
            if e.cols() != k || e.rows() != rhs.len() {
                return Err(Error::InvalidInput("equality system has the wrong shape".into()));
            }
        }
        if self.tol <= 0.0 {
            return Err(Error::InvalidInput("tolerance must be positive".into()));
        }
        Ok(k)
    }

    fn pencil(&self, lambda: &[f64]) -> DenseMatrix {
        let mut m = self.c.scale(-1.0);
        for (l, bi) in lambda.iter().zip(&self.b) {
            if *l != 0.0 {
                m.axpy(*l, bi);
            }
        }
        m
    }

    /// `phi(lambda)` and the subgradient `(v^T B_i v)_i`.
    fn oracle(&self, lambda: &[f64]) -> (f64, Vec<f64>) {
        let (value, v) = max_eigenpair(&self.pencil(lambda));
        let g = self.b.iter().map(|bi| v.iter().zip(bi.matvec(&v)).map(|(a, b)| a * b).sum()).collect();
        (value, g)
    }
}

/// A particular solution of `E lambda = e` and an orthonormal basis of the
/// null space of `E` (as columns), or the residual when inconsistent.
fn affine_parametrization(e: &DenseMatrix, rhs: &[f64]) -> std::result::Result<(Vec<f64>, Vec<Vec<f64>>), f64> {
    let k = e.cols();
    let s = svd(e);
    let top = s.singular_values.first().copied().unwrap_or(0.0);
    let rank = s.singular_values.iter().filter(|&&v| v > 1e-10 * top.max(1e-300)).count();
    let mut lambda = vec![0.0; k];
    for i in 0..rank {
        let coef: f64 = (0..e.rows()).map(|r| s.left[(r, i)] * rhs[r]).sum::<f64>() / s.singular_values[i];
        for (j, l) in lambda.iter_mut().enumerate() {
            *l += coef * s.right[(i, j)];
        }
    }
    let resid = e.matvec(&lambda).iter().zip(rhs).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
    let scale = 1.0 + rhs.iter().map(|v| v * v).sum::<f64>().sqrt();
    if resid > 1e-8 * scale {
        return Err(resid);
    }
    let null = (rank..k).map(|i| s.right.row(i).to_vec()).collect();
    Ok((lambda, null))
}

fn classify(best: f64, tol: f64) -> LmiStatus {
    if best <= tol {
        LmiStatus::Feasible
    } else if best >= 10.0 * tol {
        LmiStatus::Infeasible
    } else {
        LmiStatus::Inconclusive
    }
}

pub fn lmi_feasible(problem: &LmiProblem) -> Result<LmiOutcome> {
    lmi_feasible_from(problem, None)
}

/// As [`lmi_feasible`], starting from `start` when it satisfies the
/// equalities (otherwise from the minimum-norm particular solution).
pub fn lmi_feasible_from(problem: &LmiProblem, start: Option<&[f64]>) -> Result<LmiOutcome> {
    let k = problem.validate()?;
    let tol = problem.tol;
    let (particular, null) = match &problem.equalities {
        Some((e, rhs)) if e.rows() > 0 => match affine_parametrization(e, rhs) {
            Ok(p) => p,
            Err(resid) => return Ok(LmiOutcome { status: LmiStatus::InconsistentEqualities, lambda: None, margin: resid, iterations: 0 }),
        },
        _ => (vec![0.0; k], (0..k).map(|i| (0..k).map(|j| f64::from(u8::from(i == j))).collect()).collect()),
    };
    let project = |g: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; k];
        for basis in &null {
            let d: f64 = basis.iter().zip(g).map(|(a, b)| a * b).sum();
            for (o, b) in out.iter_mut().zip(basis) {
                *o += d * b;
            }
        }
        out
    };

    let mut lambda = match (start, &problem.equalities) {
        (Some(s), Some((e, rhs))) if s.len() == k => {
            let resid = e.matvec(s).iter().zip(rhs).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            if resid <= 1e-9 * (1.0 + rhs.iter().map(|v| v.abs()).fold(0.0, f64::max)) {
                s.to_vec()
            } else {
                particular
            }
        }
        (Some(s), None) if s.len() == k => s.to_vec(),
        _ => particular,
    };
    let (mut value, mut grad) = problem.oracle(&lambda);
    let mut best = (value, lambda.clone());
    let mut iterations = 0;
    if null.is_empty() {
        return Ok(LmiOutcome { status: classify(value, tol), lambda: Some(lambda), margin: value, iterations });
    }
    let mut delta = value.abs().max(1.0) * 0.5;
    let mut since_improvement = 0;
    while iterations < MAX_ITERATIONS && best.0 > -tol {
        iterations += 1;
        let pg = project(&grad);
        let norm2: f64 = pg.iter().map(|v| v * v).sum();
        if norm2 <= 1e-30 {
            // zero projected subgradient: the current point is optimal
            break;
        }
        let level = best.0 - delta;
        let step = (value - level) / norm2;
        for (l, g) in lambda.iter_mut().zip(&pg) {
            *l -= step * g;
        }
        (value, grad) = problem.oracle(&lambda);
        if value <= best.0 - 0.5 * delta {
            delta *= 1.5;
            since_improvement = 0;
        } else {
            since_improvement += 1;
        }
        if value < best.0 {
            best = (value, lambda.clone());
        }
        if since_improvement >= 30 {
            delta *= 0.5;
            since_improvement = 0;
            lambda = best.1.clone();
            (value, grad) = problem.oracle(&lambda);
            if delta <= 1e-12 * (1.0 + best.0.abs()) {
                break;
            }
        }
    }
    Ok(LmiOutcome { status: classify(best.0, tol), lambda: Some(best.1), margin: best.0, iterations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(b: Vec<DenseMatrix>, c: DenseMatrix, eq: Option<(DenseMatrix, Vec<f64>)>) -> LmiProblem {
        LmiProblem { b, c, equalities: eq, tol: DEFAULT_TOL }
    }

    #[test]
    fn identity_pencil_is_feasible() {
        let p = problem(vec![DenseMatrix::identity(2)], DenseMatrix::identity(2), None);
        assert_eq!(lmi_feasible(&p).unwrap().status, LmiStatus::Feasible);
    }

    #[test]
    fn fixed_lambda_is_infeasible() {
        let e = DenseMatrix::identity(1);
        let p = problem(vec![DenseMatrix::identity(2)], DenseMatrix::identity(2), Some((e, vec![2.0])));
        let out = lmi_feasible(&p).unwrap();
        assert_eq!(out.status, LmiStatus::Infeasible);
        assert!((out.margin - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_is_feasible_for_psd_c() {
        let b = vec![DenseMatrix::diag(&[1.0, -1.0]), DenseMatrix::diag(&[3.0, 1.0])];
        let e = DenseMatrix::from_rows(&[vec![1.0, 1.0]]).unwrap();
        let p = problem(b, DenseMatrix::diag(&[1.0, 0.0]), Some((e, vec![0.0])));
        assert_eq!(lmi_feasible(&p).unwrap().status, LmiStatus::Feasible);
    }

    #[test]
    fn inconsistent_equalities() {
        let e = DenseMatrix::from_rows(&[vec![1.0], vec![1.0]]).unwrap();
        let p = problem(vec![DenseMatrix::identity(1)], DenseMatrix::identity(1), Some((e, vec![0.0, 1.0])));
        assert_eq!(lmi_feasible(&p).unwrap().status, LmiStatus::InconsistentEqualities);
    }

    #[test]
    fn needs_search_to_find_feasible_point() {
        // lambda1 B1 + lambda2 B2 <= I with lambda1 + lambda2 = 1; B1 = diag(2, -1), B2 = diag(-1, 2)
        // feasible exactly for lambda1 in [1/3, 2/3]
        let b = vec![DenseMatrix::diag(&[2.0, -1.0]), DenseMatrix::diag(&[-1.0, 2.0])];
        let e = DenseMatrix::from_rows(&[vec![1.0, 1.0]]).unwrap();
        let p = problem(b.clone(), DenseMatrix::identity(2).scale(0.8), Some((e.clone(), vec![1.0])));
        let out = lmi_feasible(&p).unwrap();
        assert_eq!(out.status, LmiStatus::Feasible);
        // with the bound 0.4 the best value is 0.5 - 0.4 = 0.1 > 0
        let p = problem(b, DenseMatrix::identity(2).scale(0.4), Some((e, vec![1.0])));
        let out = lmi_feasible(&p).unwrap();
        assert_eq!(out.status, LmiStatus::Infeasible);
        assert!((out.margin - 0.1).abs() < 1e-6);
    }
}
