//! Boundary points of a Voronoi cell that is a segment of the normal line.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::VoronoiReport;
use crate::error::{Error, Result};
use crate::exactmath::field::rational_to_f64;
use crate::exactmath::{sturm_isolate, Rationals, RootInterval, UniPoly};

/// The Voronoi ideal restricted to `u = y + lambda * v`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalLineBoundary {
    /// The normal vector `v`.
    pub direction: Vec<BigRational>,
    /// Monic generator in `lambda`.
    pub poly: UniPoly,
    /// Isolating intervals of its real roots, ascending.
    pub roots: Vec<RootInterval>,
    /// `y + lambda v` for each rational root `lambda`, ascending in `lambda`.
    pub boundary_points: Vec<Vec<BigRational>>,
    /// Nearest real root below zero.
    pub lower: Option<f64>,
    /// Nearest real root above zero.
    pub upper: Option<f64>,
    /// Distance from `y` to the nearest boundary point; `None` means unbounded.
    pub reach: Option<f64>,
}

/// Precision of the isolating intervals.
pub fn root_precision() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(10u64.pow(12)))
}

pub fn boundary_on_normal_line(report: &VoronoiReport<Rationals>) -> Result<NormalLineBoundary> {
    let (Some(v), Some(g)) = (&report.normal_vector, &report.boundary_poly) else {
        return Err(Error::InvalidInput(
            "normal-line boundary needs a smooth point of a hypersurface with a zero-dimensional Voronoi ideal".into(),
        ));
    };
    let poly = UniPoly::from_polynomial(g, 0)?;
    let roots = if poly.degree() == 0 { vec![] } else { sturm_isolate(&poly, &root_precision())? };
    let rational = if poly.degree() == 0 { vec![] } else { poly.rational_roots()? };
    let boundary_points = rational.iter().map(|l| report.point.iter().zip(v).map(|(a, b)| a + l * b).collect()).collect();
    let mids: Vec<f64> = roots
        .iter()
        .map(|r| match rational.iter().find(|q| **q > r.lo && **q <= r.hi) {
            Some(q) => rational_to_f64(q),
            None => r.midpoint(),
        })
        .collect();
    let has_zero = |r: &RootInterval| r.exact.as_ref().is_some_and(|e| e.is_zero());
    let lower = roots.iter().zip(&mids).filter(|(r, &m)| m < 0.0 && !has_zero(r)).map(|(_, &m)| m).reduce(f64::max);
    let upper = roots.iter().zip(&mids).filter(|(r, &m)| m > 0.0 && !has_zero(r)).map(|(_, &m)| m).reduce(f64::min);
    let norm = v.iter().map(|c| rational_to_f64(c).powi(2)).sum::<f64>().sqrt();
    let reach = match (lower, upper) {
        (None, None) => None,
        (a, b) => Some(a.map_or(f64::INFINITY, f64::abs).min(b.unwrap_or(f64::INFINITY)) * norm),
    };
    Ok(NormalLineBoundary { direction: v.clone(), poly, roots, boundary_points, lower, upper, reach })
}
