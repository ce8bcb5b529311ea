//! Quadratic rewriting of polynomials on the Veronese embedding.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;

use super::{binomial, exponent_monomial, Quadric};
use crate::error::{Error, Result};
use crate::exactmath::{Polynomial, Rationals};

/// Largest number of lifted coordinates accepted.
pub const MAX_LIFT_SIZE: usize = 60;

/// Coordinates `z_a = x^a` for all exponents `0 < |a| <= d`, degree one first.
#[derive(Clone, Debug, PartialEq)]
pub struct VeroneseLift {
    pub n: usize,
    pub d: u32,
    pub exponents: Vec<Vec<u16>>,
    /// One quadric per input polynomial with `f = q o nu`.
    pub quadrics: Vec<Quadric>,
    /// Quadrics vanishing on the image of the embedding.
    pub relations: Vec<Quadric>,
}

/// Exponent vectors of total degree `k` in `n` variables, lex descending.
fn exponents_of_degree(n: usize, k: u16) -> Vec<Vec<u16>> {
    if n == 1 {
        return vec![vec![k]];
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in exponents_of_degree(n - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn sum(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl VeroneseLift {
    pub fn size(&self) -> usize {
        self.exponents.len()
    }

    /// `nu_d(y)`.
    pub fn embed(&self, y: &[f64]) -> Vec<f64> {
        self.exponents
            .iter()
            .map(|a| a.iter().zip(y).map(|(&e, v)| v.powi(i32::from(e))).product())
            .collect()
    }

    /// Verifies `f_i = q_i o nu` and that every relation vanishes on the image.
    pub fn verify(&self, polys: &[Polynomial<Rationals>]) -> Result<bool> {
        let Some(first) = polys.first() else { return Ok(true) };
        let ring = first.ring();
        let images: Vec<Polynomial<Rationals>> =
            self.exponents.iter().map(|a| Polynomial::monomial(ring, exponent_monomial(a), num_rational::BigRational::one())).collect();
        for (f, q) in polys.iter().zip(&self.quadrics) {
            if &q.compose(&images)? != f {
                return Ok(false);
            }
        }
        for r in &self.relations {
            if !r.compose(&images)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Rewrites each `f_i` (of degree at most `2d`) as a quadric in the
/// Veronese coordinates, together with a spanning set of the quadratic
/// relations among them.
pub fn veronese_lift(polys: &[Polynomial<Rationals>], d: u32) -> Result<VeroneseLift> {
    let first = polys.first().ok_or_else(|| Error::InvalidInput("no generators".into()))?;
    let n = first.ring().nvars();
    if d == 0 {
        return Err(Error::InvalidInput("lift degree must be positive".into()));
    }
    let size = binomial(n + d as usize, d as usize).map_or(usize::MAX, |b| b - 1);
    if size > MAX_LIFT_SIZE {
        return Err(Error::LiftTooLarge { size, max: MAX_LIFT_SIZE });
    }
    for f in polys {
        let degree = f.total_degree().unwrap_or(0);
        if degree > 2 * d {
            return Err(Error::DegreeTooHigh { degree, max: 2 * d });
        }
    }
    let exponents: Vec<Vec<u16>> = (1..=d as u16).flat_map(|k| exponents_of_degree(n, k)).collect();
    let index: HashMap<Vec<u16>, usize> = exponents.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();

    let quadrics = polys
        .iter()
        .map(|f| {
            let mut q = Quadric::zero(size);
            for (m, c) in f.terms() {
                let beta: Vec<u16> = (0..n).map(|i| m.exp(i)).collect();
                let degree = m.degree();
                if degree == 0 {
                    q.constant = c.clone();
                } else if degree <= d {
                    q.linear[index[&beta]] += c;
                } else {
                    // greedy split into a degree-d part and the remainder
                    let mut left = vec![0u16; n];
                    let mut need = d as u16;
                    for i in 0..n {
                        let take = beta[i].min(need);
                        left[i] = take;
                        need -= take;
                    }
                    let right: Vec<u16> = beta.iter().zip(&left).map(|(b, l)| b - l).collect();
                    q.add_quadratic(index[&left], index[&right], c.clone());
                }
            }
            q
        })
        .collect();

    // Products z_a z_b (a, b possibly the empty exponent, standing for 1)
    // grouped by a + b; each group contributes differences to its first pair.
    let mut groups: BTreeMap<Vec<u16>, Vec<(Option<usize>, usize)>> = BTreeMap::new();
    for (j, b) in exponents.iter().enumerate() {
        groups.entry(b.clone()).or_default().push((None, j));
        for (i, a) in exponents.iter().enumerate().take(j + 1) {
            groups.entry(sum(a, b)).or_default().push((Some(i), j));
        }
    }
    let product = |(i, j): (Option<usize>, usize), sign: i64| {
        let mut q = Quadric::zero(size);
        let c = num_rational::BigRational::from_integer(sign.into());
        match i {
            None => q.linear[j] = c,
            Some(i) => q.add_quadratic(i, j, c),
        }
        q
    };
    let mut relations = Vec::new();
    for pairs in groups.values() {
        let Some((&rep, rest)) = pairs.split_first() else { continue };
        for &other in rest {
            let mut r = product(rep, 1);
            let neg = product(other, -1);
            for (l, v) in r.linear.iter_mut().zip(neg.linear) {
                *l += v;
            }
            for ((i, j), c) in neg.quadratic {
                r.add_quadratic(i, j, c);
            }
            relations.push(r);
        }
    }
    Ok(VeroneseLift { n, d, exponents, quadrics, relations })
}
