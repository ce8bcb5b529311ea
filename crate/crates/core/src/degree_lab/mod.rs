//! Voronoi degrees measured over prime fields, and the closed-form formulas
//! they are compared against.
//!
//! A measurement restricts the ambient point `u` to a line in the normal
//! space (`u = y + lambda v` for hypersurfaces, a random line otherwise),
//! saturates away `x = y` with one random combination of the `x_i - y_i`,
//! and reads the degree off the minimal polynomial of `lambda`.

pub mod formulas;
pub mod tables;

pub use formulas::{
    conjecture_hypersurface, formula_cone, formula_curve, formula_surface, lowrank_voronoi_degree, plane_curve_genus, surface_in_p3,
    veronese_surface, FormulaInput, VERONESE_SPECIAL_POSITION,
};
pub use tables::{is_desk_scale, tabulated, HOMOGENEOUS, INHOMOGENEOUS};

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::monomial::Monomial;
use crate::exactmath::rowreduce::rref;
use crate::exactmath::{Field, MonomialOrder, PolyRing, Polynomial, PrimeField};
use crate::groebner::ideal::squarefree_part;
use crate::groebner::{Budget, IdealSpec};
use crate::voronoi::{check_point, determinant, gradients_at, subsets};

/// Second prime used by the replication policy.
pub const SECOND_PRIME: u32 = 65537;

/// Fresh slices tried before giving up on an input.
pub const MAX_ATTEMPTS: u32 = 5;

/// One degree measurement over a prime field.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeExperiment {
    pub ideal: IdealSpec<PrimeField>,
    pub point: Vec<u32>,
    pub codim: usize,
    pub seed: u64,
    pub prime: u32,
    /// Degree of the squarefree boundary polynomial on the line.
    pub degree: usize,
    /// Degree counted with multiplicity.
    pub raw_degree: usize,
    pub attempts: u32,
}

fn derived_seed(seed: u64, attempt: u32) -> u64 {
    seed.wrapping_add(u64::from(attempt).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_elem(rng: &mut ChaCha8Rng, p: u32) -> u32 {
    rng.gen_range(0..p)
}

fn random_nonzero(rng: &mut ChaCha8Rng, p: u32) -> u32 {
    rng.gen_range(1..p)
}

/// Measures the Voronoi degree of `V(ideal)` at `y` over the ideal's prime
/// field. Unlucky slices are retried with fresh randomness.
pub fn voronoi_degree_modp(ideal: &IdealSpec<PrimeField>, y: &[u32], c: usize, seed: u64, budget: Budget) -> Result<DegreeExperiment> {
    check_point(ideal, y)?;
    let field = *ideal.ring().field();
    let grads = gradients_at(ideal, y)?;
    let mut basis = grads.clone();
    let rank = rref(&field, &mut basis).len();
    if rank != c {
        return Err(Error::SingularPoint { rank, expected: c });
    }
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(derived_seed(seed, attempt));
        if let Some((degree, raw_degree)) = sliced_degree(ideal, y, &basis, &mut rng, budget)? {
            return Ok(DegreeExperiment {
                ideal: ideal.clone(),
                point: y.to_vec(),
                codim: c,
                seed,
                prime: field.modulus(),
                degree,
                raw_degree,
                attempts: attempt + 1,
            });
        }
    }
    Err(Error::UnluckySlice { attempts: MAX_ATTEMPTS as usize, reason: "the sliced system never became zero-dimensional".into() })
}

/// `Some((squarefree degree, degree))`, or `None` when this slice is degenerate.
fn sliced_degree(
    ideal: &IdealSpec<PrimeField>,
    y: &[u32],
    normal_basis: &[Vec<u32>],
    rng: &mut ChaCha8Rng,
    budget: Budget,
) -> Result<Option<(usize, usize)>> {
    let field = *ideal.ring().field();
    let p = field.modulus();
    let n = y.len();
    let c = normal_basis.len();
    // the line u = a + lambda b inside the normal space
    let (a, b): (Vec<u32>, Vec<u32>) = if c == 1 {
        (y.to_vec(), normal_basis[0].clone())
    } else {
        let alpha: Vec<u32> = (0..c).map(|_| random_elem(rng, p)).collect();
        let beta: Vec<u32> = (0..c).map(|_| random_elem(rng, p)).collect();
        let comb = |w: &[u32], base: Vec<u32>| {
            let mut out = base;
            for (k, v) in normal_basis.iter().enumerate() {
                for j in 0..n {
                    out[j] = field.add(&out[j], &field.mul(&w[k], &v[j]));
                }
            }
            out
        };
        (comb(&alpha, y.to_vec()), comb(&beta, vec![0; n]))
    };
    if b.iter().all(|v| *v == 0) {
        return Ok(None);
    }
    let weights: Vec<u32> = (0..n).map(|_| random_nonzero(rng, p)).collect();

    let x_ring = ideal.ring();
    let mut names = vec![fresh_name(x_ring, "t")];
    names.extend(x_ring.vars().iter().cloned());
    names.push(fresh_name(x_ring, "lambda"));
    let ring = PolyRing::new(field, &names, MonomialOrder::GrevLex)?;
    let lam = Polynomial::var(&ring, n + 1);
    let cst = |v: u32| Polynomial::constant(&ring, v);
    let x = |j: usize| Polynomial::var(&ring, j + 1);
    let u: Vec<Polynomial<PrimeField>> = (0..n).map(|j| &cst(a[j]) + &lam.scale(&b[j])).collect();

    let map: Vec<Option<usize>> = (0..n).map(|j| Some(j + 1)).collect();
    let fs: Vec<Polynomial<PrimeField>> = ideal.generators().iter().map(|f| f.rename_into(&ring, &map)).collect::<Result<_>>()?;
    let mut rows = vec![(0..n).map(|j| &u[j] - &x(j)).collect::<Vec<_>>()];
    for f in &fs {
        rows.push((0..n).map(|j| f.partial_derivative(j + 1)).collect());
    }
    let mut gens = fs.clone();
    for rs in subsets(rows.len(), c + 1) {
        for cs in subsets(n, c + 1) {
            let m: Vec<Vec<Polynomial<PrimeField>>> = rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect()).collect();
            gens.push(determinant(&m));
        }
    }
    let mut sphere = Polynomial::zero(&ring);
    let mut g = Polynomial::zero(&ring);
    for j in 0..n {
        let dx = &x(j) - &u[j];
        let dy = &cst(y[j]) - &u[j];
        sphere = &(&sphere + &(&dx * &dx)) - &(&dy * &dy);
        g = &g + &(&x(j) - &cst(y[j])).scale(&weights[j]);
    }
    gens.push(sphere);
    gens.push(&cst(1) - &(&Polynomial::var(&ring, 0) * &g));

    let system = IdealSpec::new(&ring, gens)?;
    let gb = system.groebner_stage(MonomialOrder::GrevLex, budget, "sliced critical system")?;
    if gb.is_unit() {
        return Ok(Some((0, 0)));
    }
    if !gb.is_zero_dimensional() {
        return Ok(None);
    }
    let mp = gb.minimal_polynomial(&lam)?;
    let sf = squarefree_part(&field, &mp);
    Ok(Some((sf.len() - 1, mp.len() - 1)))
}

fn fresh_name(ring: &PolyRing<PrimeField>, base: &str) -> String {
    let mut name = base.to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// All exponent vectors in `n` variables of total degree `d` (`exact`) or at most `d`.
fn exponent_vectors(n: usize, d: u32, exact: bool) -> Vec<Monomial> {
    fn go(i: usize, n: usize, left: u32, cur: &mut Monomial, exact: bool, out: &mut Vec<Monomial>) {
        if i == n {
            if !exact || left == 0 {
                out.push(*cur);
            }
            return;
        }
        for e in 0..=left {
            cur.set_exp(i, e as u16);
            go(i + 1, n, left - e, cur, exact, out);
        }
        cur.set_exp(i, 0);
    }
    let mut out = Vec::new();
    go(0, n, d, &mut Monomial::one(), exact, &mut out);
    out
}

/// A dense random polynomial of degree `d` in `x1..xn` through a random point,
/// both drawn from one seeded stream.
pub fn random_hypersurface(n: usize, d: u32, homogeneous: bool, prime: u32, seed: u64) -> Result<(IdealSpec<PrimeField>, Vec<u32>)> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidInput("need n >= 1 and d >= 1".into()));
    }
    let field = PrimeField::new(prime)?;
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ring: Arc<PolyRing<PrimeField>> = PolyRing::new(field, &names, MonomialOrder::GrevLex)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let y: Vec<u32> = (0..n).map(|_| random_nonzero(&mut rng, prime)).collect();
    let terms: Vec<(Monomial, u32)> = exponent_vectors(n, d, homogeneous).into_iter().map(|m| (m, random_elem(&mut rng, prime))).collect();
    let mut f = Polynomial::from_terms(&ring, terms);
    let v = f.eval(&y)?;
    // shift one coefficient so that f(y) = 0
    let (m, scale) = if homogeneous {
        let mut m = Monomial::one();
        m.set_exp(0, d as u16);
        (m, Polynomial::monomial(&ring, m, 1).eval(&y)?)
    } else {
        (Monomial::one(), 1)
    };
    let shift = field.neg(&field.div(&v, &scale).expect("point has nonzero coordinates"));
    f = &f + &Polynomial::monomial(&ring, m, shift);
    debug_assert!(field.is_zero(&f.eval(&y)?));
    Ok((IdealSpec::new(&ring, vec![f])?.with_codim(Some(1)), y))
}

/// Measures one random hypersurface, regenerating it if the point is singular.
pub fn hypersurface_experiment(n: usize, d: u32, homogeneous: bool, prime: u32, seed: u64, budget: Budget) -> Result<DegreeExperiment> {
    let mut last = None;
    for attempt in 0..MAX_ATTEMPTS {
        let s = derived_seed(seed, attempt);
        let (ideal, y) = random_hypersurface(n, d, homogeneous, prime, s)?;
        match voronoi_degree_modp(&ideal, &y, 1, s, budget) {
            Ok(mut e) => {
                e.seed = seed;
                e.attempts += attempt;
                return Ok(e);
            }
            Err(err @ (Error::SingularPoint { .. } | Error::UnluckySlice { .. })) => last = Some(err),
            Err(err) => return Err(err),
        }
    }
    Err(last.unwrap_or(Error::UnluckySlice { attempts: MAX_ATTEMPTS as usize, reason: "no usable hypersurface".into() }))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Replica {
    pub seed: u64,
    pub prime: u32,
    pub degree: Option<usize>,
    pub attempts: u32,
    pub error: Option<String>,
}

/// Replicated measurement on random hypersurfaces.
#[derive(Clone, Debug, PartialEq)]
pub struct HypersurfaceDegree {
    pub n: usize,
    pub d: u32,
    pub homogeneous: bool,
    pub seed: u64,
    pub prime: u32,
    /// Most frequent degree among successful replicas (ties go to the smaller value).
    pub degree: Option<usize>,
    /// All replicas succeeded and agree.
    pub stable: bool,
    pub replicas: Vec<Replica>,
}

/// Primes used by default: the given one and a second, distinct one.
pub fn default_primes(prime: u32) -> Vec<u32> {
    if prime == SECOND_PRIME {
        vec![prime, crate::exactmath::DEFAULT_PRIME]
    } else {
        vec![prime, SECOND_PRIME]
    }
}

/// Runs `replicas` measurements with seeds `seed, seed+1, ...`, cycling
/// through `primes`. Replicas run in parallel.
pub fn hypersurface_degree(
    n: usize,
    d: u32,
    homogeneous: bool,
    seed: u64,
    primes: &[u32],
    replicas: usize,
    budget: Budget,
) -> Result<HypersurfaceDegree> {
    if primes.is_empty() || replicas == 0 {
        return Err(Error::InvalidInput("need at least one prime and one replica".into()));
    }
    for &p in primes {
        PrimeField::new(p)?;
    }
    let runs: Vec<Replica> = (0..replicas)
        .into_par_iter()
        .map(|k| {
            let s = seed.wrapping_add(k as u64);
            let p = primes[k % primes.len()];
            match hypersurface_experiment(n, d, homogeneous, p, s, budget) {
                Ok(e) => Replica { seed: s, prime: p, degree: Some(e.degree), attempts: e.attempts, error: None },
                Err(err) => Replica { seed: s, prime: p, degree: None, attempts: 0, error: Some(err.to_string()) },
            }
        })
        .collect();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for r in &runs {
        if let Some(d) = r.degree {
            *counts.entry(d).or_default() += 1;
        }
    }
    let degree = counts.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0))).map(|(d, _)| *d);
    let stable = counts.len() == 1 && runs.iter().all(|r| r.degree.is_some());
    Ok(HypersurfaceDegree { n, d, homogeneous, seed, prime: primes[0], degree, stable, replicas: runs })
}
