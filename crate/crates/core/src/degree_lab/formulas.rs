//! Closed-form Voronoi degrees of curves, surfaces, cones and hypersurfaces.

use crate::error::{Error, Result};

/// Invariants entering the degree formulas.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FormulaInput {
    /// Degree of the variety.
    pub d: i64,
    /// Geometric genus of a curve.
    pub g: i64,
    /// Topological Euler characteristic of a surface.
    pub chi: i64,
    /// Genus of a general quadric section of a surface.
    pub g2: i64,
    /// Ambient dimension.
    pub n: i64,
    /// Order of a Veronese embedding.
    pub e: i64,
}

/// Curve of degree `d` and geometric genus `g` in general position.
pub fn formula_curve(d: i64, g: i64) -> i64 {
    4 * d + 2 * g - 6
}

/// Smooth surface of degree `d`, Euler characteristic `chi` and quadric-section genus `g2`.
pub fn formula_surface(d: i64, chi: i64, g2: i64) -> i64 {
    3 * d + chi + 4 * g2 - 11
}

/// Affine cone over a smooth curve of degree `d` and genus `g`.
pub fn formula_cone(d: i64, g: i64) -> i64 {
    6 * d + 4 * g - 9
}

/// Genus of a smooth plane curve of degree `d`.
pub fn plane_curve_genus(d: i64) -> i64 {
    (d - 1) * (d - 2) / 2
}

/// `(d, chi, g2)` of a smooth surface of degree `d` in projective 3-space.
pub fn surface_in_p3(d: i64) -> FormulaInput {
    FormulaInput { d, chi: d * (d * d - 4 * d + 6), g2: (d - 1) * (d - 1), n: 3, ..Default::default() }
}

/// `(d, chi, g2)` of the Veronese surface of order `e`.
pub fn veronese_surface(e: i64) -> FormulaInput {
    FormulaInput { d: e * e, chi: 3, g2: (2 * e - 1) * (2 * e - 2) / 2, e, ..Default::default() }
}

/// `1 + (d-1) + ... + (d-1)^(n-2)`, which is `((d-1)^(n-1) - 1) / (d-2)` for `d != 2`.
fn geometric_sum(n: u32, d: i64) -> Result<i64> {
    let mut acc: i64 = 0;
    let mut pow: i64 = 1;
    for _ in 0..n.saturating_sub(1) {
        acc = acc.checked_add(pow).ok_or_else(overflow)?;
        pow = pow.checked_mul(d - 1).ok_or_else(overflow)?;
    }
    Ok(acc)
}

fn overflow() -> Error {
    Error::InvalidInput("degree formula overflows 64-bit integers".into())
}

/// Conjectured Voronoi degree of a general hypersurface of degree `d` in
/// `n`-space; `homogeneous` selects the cone case.
pub fn conjecture_hypersurface(n: u32, d: i64, homogeneous: bool) -> Result<i64> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("degree {d} is below 2")));
    }
    if n == 0 {
        return Err(Error::InvalidInput("ambient dimension must be positive".into()));
    }
    let pw = |k: u32| (d - 1).checked_pow(k).ok_or_else(overflow);
    let s = geometric_sum(n, d)?;
    let n = i64::from(n);
    let v = if homogeneous {
        2 * pw(n as u32 - 1)? + 4 * s - 3 * n + 2
    } else {
        pw(n as u32)? + 3 * pw(n as u32 - 1)? + 4 * s - 3 * n
    };
    Ok(v)
}

/// Voronoi degree of the variety of `m x n` matrices of rank at most `r`.
pub fn lowrank_voronoi_degree(m: usize, n: usize, r: usize) -> Result<usize> {
    if r >= m || m > n {
        return Err(Error::InvalidInput(format!("need r < m <= n, got m={m}, n={n}, r={r}")));
    }
    Ok(2 * (m - r))
}

/// Voronoi degrees of the affine Veronese surface in special position:
/// Euclidean and Frobenius metric.
pub const VERONESE_SPECIAL_POSITION: (i64, i64) = (10, 4);
