//! Spectrahedral inner approximations of Voronoi cells.
//!
//! A point `u` in the normal space of `y` lies in the cell when `y` is the
//! global minimizer of `|x - u|^2` on the variety. For quadrics this is
//! certified by multipliers `lambda` with `u = y - J lambda / 2` and
//! `sum_i lambda_i A_i <= 2 I`, where `A_i` are the Hessians and `J` the
//! Jacobian at `y` (columns are gradients). Higher levels lift the variety
//! to quadrics on a Veronese embedding first.

mod lmi;
mod veronese;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::field::rational_to_f64;
use crate::exactmath::{Monomial, Polynomial, Rationals};
use crate::linalg::DenseMatrix;

pub use lmi::{lmi_feasible, lmi_feasible_from, LmiOutcome, LmiProblem, LmiStatus, DEFAULT_TOL, MAX_ITERATIONS};
pub use veronese::{veronese_lift, VeroneseLift, MAX_LIFT_SIZE};

/// Tolerance for `|f_i(y)|` when checking that `y` lies on the variety.
pub const ON_VARIETY_TOL: f64 = 1e-9;

/// A quadratic function `c + b.z + sum q_ij z_i z_j` with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadric {
    pub nvars: usize,
    pub constant: BigRational,
    pub linear: Vec<BigRational>,
    /// `((i, j), c)` with `i <= j`, each pair at most once.
    pub quadratic: Vec<((usize, usize), BigRational)>,
}

impl Quadric {
    pub fn zero(nvars: usize) -> Self {
        Quadric { nvars, constant: BigRational::zero(), linear: vec![BigRational::zero(); nvars], quadratic: Vec::new() }
    }

    pub(crate) fn add_quadratic(&mut self, i: usize, j: usize, c: BigRational) {
        let key = (i.min(j), i.max(j));
        match self.quadratic.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => *v += c,
            None => self.quadratic.push((key, c)),
        }
        self.quadratic.retain(|(_, v)| !v.is_zero());
    }

    /// Reads a polynomial of degree at most two.
    pub fn from_polynomial(f: &Polynomial<Rationals>) -> Result<Self> {
        let n = f.ring().nvars();
        let degree = f.total_degree().unwrap_or(0);
        if degree > 2 {
            return Err(Error::DegreeTooHigh { degree, max: 2 });
        }
        let mut q = Quadric::zero(n);
        for (m, c) in f.terms() {
            let support: Vec<usize> = (0..n).filter(|&i| m.exp(i) > 0).collect();
            match (m.degree(), support.as_slice()) {
                (0, _) => q.constant = c.clone(),
                (1, [i]) => q.linear[*i] = c.clone(),
                (2, [i]) => q.add_quadratic(*i, *i, c.clone()),
                (2, [i, j]) => q.add_quadratic(*i, *j, c.clone()),
                _ => unreachable!("degree checked above"),
            }
        }
        Ok(q)
    }

    /// The same function in `nvars` variables (extra ones unused).
    pub fn padded(&self, nvars: usize) -> Self {
        let mut q = self.clone();
        q.nvars = nvars.max(self.nvars);
        q.linear.resize(q.nvars, BigRational::zero());
        q
    }

    /// Exact Hessian matrix.
    pub fn hessian_exact(&self) -> Vec<Vec<BigRational>> {
        let mut h = vec![vec![BigRational::zero(); self.nvars]; self.nvars];
        for ((i, j), c) in &self.quadratic {
            if i == j {
                h[*i][*i] += c + c;
            } else {
                h[*i][*j] += c;
                h[*j][*i] += c;
            }
        }
        h
    }

    pub fn hessian(&self) -> DenseMatrix {
        let h = self.hessian_exact();
        DenseMatrix::from_fn(self.nvars, self.nvars, |i, j| rational_to_f64(&h[i][j]))
    }

    pub fn eval(&self, z: &[f64]) -> f64 {
        let mut v = rational_to_f64(&self.constant);
        v += self.linear.iter().zip(z).map(|(b, x)| rational_to_f64(b) * x).sum::<f64>();
        v += self.quadratic.iter().map(|((i, j), c)| rational_to_f64(c) * z[*i] * z[*j]).sum::<f64>();
        v
    }

    pub fn gradient(&self, z: &[f64]) -> Vec<f64> {
        let mut g: Vec<f64> = self.linear.iter().map(rational_to_f64).collect();
        for ((i, j), c) in &self.quadratic {
            let c = rational_to_f64(c);
            if i == j {
                g[*i] += 2.0 * c * z[*i];
            } else {
                g[*i] += c * z[*j];
                g[*j] += c * z[*i];
            }
        }
        g
    }

    /// Composition with polynomial images of the variables.
    pub fn compose(&self, images: &[Polynomial<Rationals>]) -> Result<Polynomial<Rationals>> {
        let ring = images.first().map(|p| p.ring().clone()).ok_or_else(|| Error::InvalidInput("no images".into()))?;
        let mut acc = Polynomial::constant(&ring, self.constant.clone());
        for (b, img) in self.linear.iter().zip(images) {
            if !b.is_zero() {
                acc = acc.checked_add(&img.scale(b))?;
            }
        }
        for ((i, j), c) in &self.quadratic {
            acc = acc.checked_add(&images[*i].checked_mul(&images[*j])?.scale(c))?;
        }
        Ok(acc)
    }
}

/// Exact Hessian of a polynomial of degree at most two.
pub fn hessian(f: &Polynomial<Rationals>) -> Result<Vec<Vec<BigRational>>> {
    Ok(Quadric::from_polynomial(f)?.hessian_exact())
}

/// Floating evaluation of a polynomial with rational coefficients.
pub fn eval_f64(f: &Polynomial<Rationals>, point: &[f64]) -> f64 {
    f.terms()
        .iter()
        .map(|(m, c)| {
            let mono: f64 = point.iter().enumerate().map(|(i, x)| x.powi(i32::from(m.exp(i)))).product();
            rational_to_f64(c) * mono
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SdpStatus {
    Member,
    NonMember,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SdpMembership {
    pub level: u32,
    pub status: SdpStatus,
    pub lmi: LmiOutcome,
}

fn check_inputs(polys: &[Polynomial<Rationals>], y: &[f64], u: &[f64], tol: f64) -> Result<usize> {
    let first = polys.first().ok_or_else(|| Error::InvalidInput("no generators".into()))?;
    let n = first.ring().nvars();
    if polys.iter().any(|p| p.ring() != first.ring()) {
        return Err(Error::RingMismatch);
    }
    if y.len() != n || u.len() != n {
        return Err(Error::InvalidInput(format!("points must have {n} coordinates")));
    }
    if y.iter().chain(u).any(|v| !v.is_finite()) || !(tol > 0.0) {
        return Err(Error::InvalidInput("non-finite input".into()));
    }
    for (index, f) in polys.iter().enumerate() {
        let value = eval_f64(f, y);
        if value.abs() > ON_VARIETY_TOL {
            return Err(Error::PointNotOnVariety { index, value: format!("{value:e}") });
        }
    }
    Ok(n)
}

/// Membership of `u` in the spectrahedral shadow built from quadrics in
/// `nvars >= n` variables, evaluated at the lifted point `z`. The first `n`
/// coordinates carry the distance; the rest must have zero gradient weight.
fn quadric_membership(
    quadrics: &[Quadric],
    z: &[f64],
    y: &[f64],
    u: &[f64],
    tol: f64,
    level: u32,
    start: Option<&[f64]>,
) -> Result<SdpMembership> {
    let n = y.len();
    let big = z.len();
    let b: Vec<DenseMatrix> = quadrics.iter().map(Quadric::hessian).collect();
    let mut cdiag = vec![0.0; big];
    cdiag[..n].fill(2.0);
    let gradients: Vec<Vec<f64>> = quadrics.iter().map(|q| q.gradient(z)).collect();
    let e = DenseMatrix::from_fn(big, quadrics.len(), |r, k| if r < n { 0.5 * gradients[k][r] } else { gradients[k][r] });
    let rhs: Vec<f64> = (0..big).map(|r| if r < n { y[r] - u[r] } else { 0.0 }).collect();
    let problem = LmiProblem { b, c: DenseMatrix::diag(&cdiag), equalities: Some((e, rhs)), tol };
    let lmi = lmi_feasible_from(&problem, start)?;
    let status = match lmi.status {
        LmiStatus::Feasible => SdpStatus::Member,
        LmiStatus::Infeasible | LmiStatus::InconsistentEqualities => SdpStatus::NonMember,
        LmiStatus::Inconclusive => SdpStatus::Inconclusive,
    };
    Ok(SdpMembership { level, status, lmi })
}

/// Certifies `u` using the quadrics themselves (all generators of degree <= 2).
pub fn level1_membership(polys: &[Polynomial<Rationals>], y: &[f64], u: &[f64], tol: f64) -> Result<SdpMembership> {
    check_inputs(polys, y, u, tol)?;
    let quadrics = polys.iter().map(Quadric::from_polynomial).collect::<Result<Vec<_>>>()?;
    quadric_membership(&quadrics, y, y, u, tol, 1, None)
}

/// Certifies `u` after lifting through the degree-`d` Veronese embedding.
pub fn leveld_membership(polys: &[Polynomial<Rationals>], y: &[f64], u: &[f64], d: u32, tol: f64) -> Result<SdpMembership> {
    check_inputs(polys, y, u, tol)?;
    let lift = veronese_lift(polys, d)?;
    let mut quadrics: Vec<Quadric> = lift.quadrics.iter().chain(&lift.relations).cloned().collect();
    // A certificate one level down stays a certificate here: its quadrics,
    // padded with the new coordinates, lie in the span of the level-d ones.
    let max_degree = polys.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0);
    let mut start = None;
    if d >= 2 && max_degree <= 2 * (d - 1) {
        let lower = leveld_membership(polys, y, u, d - 1, tol)?;
        if let (SdpStatus::Member, Some(witness)) = (lower.status, lower.lmi.lambda) {
            let lower_quadrics: Vec<Quadric> = if d == 2 {
                polys.iter().map(Quadric::from_polynomial).collect::<Result<_>>()?
            } else {
                let l = veronese_lift(polys, d - 1)?;
                l.quadrics.into_iter().chain(l.relations).collect()
            };
            let mut lambda = vec![0.0; quadrics.len()];
            lambda.extend(witness);
            quadrics.extend(lower_quadrics.into_iter().map(|q| q.padded(lift.size())));
            start = Some(lambda);
        }
    }
    quadric_membership(&quadrics, &lift.embed(y), y, u, tol, d, start.as_deref())
}

/// Largest `t` in `[lo, hi]` (to within `resolution`) such that `point(t)` is
/// certified, assuming certification is monotone decreasing in `t` and
/// holds at `lo`. Returns `None` when `lo` itself is not certified.
pub fn certified_supremum(mut lo: f64, mut hi: f64, resolution: f64, mut certified: impl FnMut(f64) -> Result<bool>) -> Result<Option<f64>> {
    if !certified(lo)? {
        return Ok(None);
    }
    if certified(hi)? {
        return Ok(Some(hi));
    }
    while hi - lo > resolution {
        let mid = 0.5 * (lo + hi);
        if certified(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(lo))
}

pub(crate) fn exponent_monomial(exps: &[u16]) -> Monomial {
    Monomial::from_exps(exps)
}

pub(crate) fn binomial(n: usize, k: usize) -> Option<usize> {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.to_usize()
}
