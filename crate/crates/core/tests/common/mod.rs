#![allow(dead_code)]

use std::sync::Arc;

use algvor::exactmath::{Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, Rationals};
use algvor::groebner::{eliminate, into_ring, saturate_by, Budget, IdealSpec};
use algvor::linalg::{symmetric_eigen, DenseMatrix};
use algvor::lowrank::{cell_membership, eckart_young_truncate, Membership};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const P: u32 = 32003;

pub fn fp_ring() -> Arc<PolyRing<PrimeField>> {
    PolyRing::new(PrimeField::new(P).unwrap(), &["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
}

pub fn q_ring() -> Arc<PolyRing<Rationals>> {
    PolyRing::new(Rationals, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
}

fn random_exps(rng: &mut ChaCha8Rng, max_deg: u16) -> Monomial {
    let mut e = [0u16; 3];
    let deg = rng.gen_range(0..=max_deg);
    for _ in 0..deg {
        e[rng.gen_range(0..3)] += 1;
    }
    Monomial::from_exps(&e)
}

pub fn random_fp_poly(ring: &Arc<PolyRing<PrimeField>>, rng: &mut ChaCha8Rng, terms: usize, max_deg: u16) -> Polynomial<PrimeField> {
    let t = (0..terms).map(|_| (random_exps(rng, max_deg), rng.gen_range(1..P))).collect();
    Polynomial::from_terms(ring, t)
}

pub fn random_q_poly(ring: &Arc<PolyRing<Rationals>>, rng: &mut ChaCha8Rng, terms: usize, max_deg: u16) -> Polynomial<Rationals> {
    let t = (0..terms)
        .map(|_| {
            let num = BigInt::from(rng.gen_range(-50i64..=50));
            let den = BigInt::from(rng.gen_range(1i64..=9));
            (random_exps(rng, max_deg), BigRational::new(num, den))
        })
        .collect();
    Polynomial::from_terms(ring, t)
}

/// Two or three generators with up to four terms of degree at most three.
pub fn random_fp_ideal(seed: u64) -> IdealSpec<PrimeField> {
    let ring = fp_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(2..=3);
    let gens = (0..k)
        .map(|_| {
            let terms = rng.gen_range(1..=4);
            random_fp_poly(&ring, &mut rng, terms, 3)
        })
        .filter(|g| !g.is_zero())
        .collect();
    IdealSpec::new(&ring, gens).unwrap()
}

pub fn check_gb_uniqueness(seed: u64) -> Result<(), String> {
    let ideal = random_fp_ideal(seed);
    let ring = ideal.ring().clone();
    let budget = Budget::default();
    for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
        let gb = ideal.groebner_basis(order, budget).map_err(|e| e.to_string())?;
        let again = IdealSpec::new(gb.ring(), gb.elements().to_vec()).unwrap().groebner_basis(order, budget).map_err(|e| e.to_string())?;
        if again != gb {
            return Err(format!("seed {seed}: basis of a basis differs ({order:?})"));
        }
        let mut gens: Vec<_> = ideal.generators().iter().rev().cloned().collect();
        if gens.len() >= 2 {
            let combo = &gens[0] + &gens[1].mul_monomial(&Monomial::var(2));
            gens.push(combo);
        }
        let other = IdealSpec::new(&ring, gens).unwrap().groebner_basis(order, budget).map_err(|e| e.to_string())?;
        if other != gb {
            return Err(format!("seed {seed}: different generating sets give different bases ({order:?})"));
        }
        for g in into_ring(&ideal, gb.ring()).map_err(|e| e.to_string())?.generators() {
            if !gb.normal_form(g).map_err(|e| e.to_string())?.is_zero() {
                return Err(format!("seed {seed}: generator not reduced to zero"));
            }
        }
        if !gb.is_reduced() {
            return Err(format!("seed {seed}: basis not reduced"));
        }
    }
    Ok(())
}

pub fn check_saturation_idempotent(seed: u64) -> Result<(), String> {
    let ideal = random_fp_ideal(seed);
    let ring = ideal.ring().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a5a);
    let g = random_fp_poly(&ring, &mut rng, 2, 1);
    if g.is_zero() {
        return Ok(());
    }
    let budget = Budget::default();
    let once = saturate_by(&ideal, &g, budget).map_err(|e| e.to_string())?;
    let twice = saturate_by(&once, &g, budget).map_err(|e| e.to_string())?;
    if !once.same_ideal(&twice, budget).map_err(|e| e.to_string())? {
        return Err(format!("seed {seed}: saturation is not idempotent"));
    }
    for f in ideal.generators() {
        if !once.contains(f, budget).map_err(|e| e.to_string())? {
            return Err(format!("seed {seed}: saturation lost a generator"));
        }
    }
    Ok(())
}

pub fn check_elimination_sound(seed: u64) -> Result<(), String> {
    let ideal = random_fp_ideal(seed);
    let ring = ideal.ring().clone();
    let budget = Budget::default();
    let elim = eliminate(&ideal, &[0], budget).map_err(|e| e.to_string())?;
    if elim.ring().vars() != ["y", "z"] {
        return Err(format!("seed {seed}: wrong output ring"));
    }
    let back = into_ring(&elim, &ring).map_err(|e| e.to_string())?;
    for f in back.generators() {
        if f.uses_var(0) || !ideal.contains(f, budget).map_err(|e| e.to_string())? {
            return Err(format!("seed {seed}: eliminant not in the ideal"));
        }
    }
    // the x-free part of a lex basis generates the same elimination ideal
    let lex = ideal.groebner_basis(MonomialOrder::Lex, budget).map_err(|e| e.to_string())?;
    let free: Vec<_> = lex.elements().iter().filter(|g| !g.uses_var(0)).cloned().collect();
    let reference = into_ring(&IdealSpec::new(lex.ring(), free).unwrap(), &ring).map_err(|e| e.to_string())?;
    if !reference.same_ideal(&back, budget).map_err(|e| e.to_string())? {
        return Err(format!("seed {seed}: elimination ideal incomplete"));
    }
    Ok(())
}

pub fn check_parse_round_trip(seed: u64) -> Result<(), String> {
    let ring = q_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms = rng.gen_range(0..=6);
    let f = random_q_poly(&ring, &mut rng, terms, 4);
    let text = f.to_string();
    let g = algvor::exactmath::parse_polynomial(&text, &ring).map_err(|e| format!("seed {seed}: `{text}`: {e}"))?;
    if g != f {
        return Err(format!("seed {seed}: `{text}` parsed to `{g}`"));
    }
    let fp = fp_ring();
    let h = random_fp_poly(&fp, &mut rng, terms, 4);
    let back = algvor::exactmath::parse_polynomial(&h.to_string(), &fp).map_err(|e| e.to_string())?;
    if back != h {
        return Err(format!("seed {seed}: modular round trip failed for `{h}`"));
    }
    Ok(())
}

pub fn random_matrix(rng: &mut ChaCha8Rng, m: usize, n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(m, n, |_, _| rng.gen_range(-1.0..1.0))
}

/// Gram-Schmidt on a random square matrix.
pub fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    let mut cols: Vec<Vec<f64>> = Vec::new();
    while cols.len() < n {
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        for _ in 0..2 {
            for c in &cols {
                let dot: f64 = v.iter().zip(c).map(|(a, b)| a * b).sum();
                v.iter_mut().zip(c).for_each(|(a, b)| *a -= dot * b);
            }
        }
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm > 1e-3 {
            cols.push(v.into_iter().map(|a| a / norm).collect());
        }
    }
    DenseMatrix::from_fn(n, n, |i, j| cols[j][i])
}

/// A random rank-`r` matrix `A B^T`.
pub fn random_rank(rng: &mut ChaCha8Rng, m: usize, n: usize, r: usize) -> DenseMatrix {
    random_matrix(rng, m, r).matmul(&random_matrix(rng, n, r).transpose())
}

fn random_shape(rng: &mut ChaCha8Rng) -> (usize, usize, usize) {
    let m = rng.gen_range(2..=6);
    let n = rng.gen_range(2..=8);
    let r = rng.gen_range(1..m.min(n));
    (m, n, r)
}

/// The truncation of a random matrix lies in its own cell and beats random
/// rank-`r` competitors and nearby perturbations of itself.
pub fn check_truncation_is_nearest(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, n, r) = random_shape(&mut rng);
    let u = random_matrix(&mut rng, m, n);
    let v = eckart_young_truncate(&u, r).map_err(|e| e.to_string())?;
    let status = cell_membership(&u, &v, r, 1e-8).map_err(|e| e.to_string())?;
    if status == Membership::Outside {
        return Err(format!("seed {seed}: {m}x{n} rank {r} truncation outside its own cell"));
    }
    let best = u.sub(&v).frobenius_norm();
    for _ in 0..20 {
        let w = random_rank(&mut rng, m, n, r);
        if u.sub(&w).frobenius_norm() < best - 1e-9 {
            return Err(format!("seed {seed}: random rank-{r} matrix is closer than the truncation"));
        }
        // perturb the factors of v along a random direction
        let eps = 1e-3;
        let a = v.add(&random_matrix(&mut rng, m, r).matmul(&random_matrix(&mut rng, r, n)).scale(eps));
        let near = eckart_young_truncate(&a, r).map_err(|e| e.to_string())?;
        if u.sub(&near).frobenius_norm() < best - 1e-9 {
            return Err(format!("seed {seed}: a perturbed rank-{r} matrix is closer than the truncation"));
        }
    }
    // squared distance equals the tail of the spectrum of u u^T
    let (mut eig, _) = symmetric_eigen(&u.matmul(&u.transpose()));
    eig.sort_by(|a, b| b.total_cmp(a));
    let tail: f64 = eig[r..].iter().sum();
    if (tail - best * best).abs() > 1e-9 * (1.0 + tail) {
        return Err(format!("seed {seed}: distance {} vs spectral tail {}", best * best, tail));
    }
    Ok(())
}

/// Membership and truncation commute with `U -> P U Q` for orthogonal `P`, `Q`.
pub fn check_orthogonal_invariance(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, n, r) = random_shape(&mut rng);
    let v = random_rank(&mut rng, m, n, r);
    let u = v.add(&random_matrix(&mut rng, m, n).scale(rng.gen_range(0.0..1.0)));
    let (p, q) = (random_orthogonal(&mut rng, m), random_orthogonal(&mut rng, n));
    let rot = |a: &DenseMatrix| p.matmul(a).matmul(&q);
    let before = cell_membership(&u, &v, r, 1e-8).map_err(|e| e.to_string())?;
    let after = cell_membership(&rot(&u), &rot(&v), r, 1e-8).map_err(|e| e.to_string())?;
    if before != after {
        return Err(format!("seed {seed}: membership {before:?} became {after:?}"));
    }
    let sv = algvor::linalg::svd(&u).singular_values;
    if sv[r - 1] - sv[r] > 1e-6 {
        let t1 = rot(&eckart_young_truncate(&u, r).map_err(|e| e.to_string())?);
        let t2 = eckart_young_truncate(&rot(&u), r).map_err(|e| e.to_string())?;
        if t1.sub(&t2).max_abs() > 1e-8 {
            return Err(format!("seed {seed}: truncation not equivariant ({:e})", t1.sub(&t2).max_abs()));
        }
    }
    Ok(())
}

/// `V + W` with `W` in the complementary frame block of spectral norm
/// `rho * sigma_r`: inside for `rho < 1`, outside for `rho > 1`.
pub fn check_frame_block_threshold(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, n, r) = random_shape(&mut rng);
    let v = random_rank(&mut rng, m, n, r);
    let frame = algvor::linalg::svd(&v);
    let sigma_r = frame.singular_values[r - 1];
    let block = random_matrix(&mut rng, m - r, n - r);
    let block = block.scale(1.0 / block.spectral_norm());
    for (rho, expected) in [(0.9, Membership::Inside), (1.1, Membership::Outside)] {
        let w = DenseMatrix::from_fn(m, n, |i, j| if i >= r && j >= r { rho * sigma_r * block[(i - r, j - r)] } else { 0.0 });
        let u = v.add(&frame.left.matmul(&w).matmul(&frame.right));
        let got = cell_membership(&u, &v, r, 1e-8).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("seed {seed}: rho {rho} gave {got:?}"));
        }
        // oracle: outside exactly when the truncation of u is strictly closer than v
        let t = eckart_young_truncate(&u, r).map_err(|e| e.to_string())?;
        let closer = u.sub(&t).frobenius_norm() < u.sub(&v).frobenius_norm() - 1e-9;
        if closer != (expected == Membership::Outside) {
            return Err(format!("seed {seed}: rho {rho} disagrees with the distance oracle"));
        }
    }
    Ok(())
}
