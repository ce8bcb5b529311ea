//! Dense univariate polynomials over the rationals: gcd, Sturm sequences,
//! real-root isolation and rational roots.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::field::{rational_to_f64, Rationals};
use super::monomial::Monomial;
use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// Coefficients in ascending degree order, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    /// Reads a polynomial in which at most variable `var` occurs.
    pub fn from_polynomial(f: &Polynomial<Rationals>, var: usize) -> Result<Self> {
        let mut coeffs = vec![BigRational::zero(); f.degree_in(var) as usize + 1];
        for (m, c) in f.terms() {
            if m.degree() != m.exp(var) as u32 {
                return Err(Error::NotUnivariate);
            }
            coeffs[m.exp(var) as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Embeds as a polynomial in variable `var` of `ring`.
    pub fn to_polynomial(&self, ring: &Arc<PolyRing<Rationals>>, var: usize) -> Polynomial<Rationals> {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let mut m = Monomial::one();
                m.set_exp(var, k as u16);
                (m, c.clone())
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + rational_to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * q(k as i64)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        UniPoly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    /// Scales to integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        UniPoly::new(ints.into_iter().map(|c| BigRational::from_integer(c / &g * &sign)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(vec![]);
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = BigRational::zero();
        UniPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) - other.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dl = divisor.leading();
        let dd = divisor.degree();
        if rem.len() < divisor.coeffs.len() {
            return (UniPoly::new(vec![]), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree(&self) -> Self {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Sturm sequence of the square-free part.
    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let p0 = self.squarefree().primitive();
        let mut seq = vec![p0.clone()];
        let mut p1 = p0.derivative().primitive();
        while !p1.is_zero() {
            let r = seq.last().unwrap().rem(&p1);
            seq.push(p1);
            // primitive() keeps the leading sign positive; restore the negated remainder's sign
            let neg = r.scale(&q(-1));
            p1 = if neg.is_zero() {
                neg
            } else {
                let sgn = if neg.leading().is_negative() { q(-1) } else { q(1) };
                neg.primitive().scale(&sgn)
            };
        }
        seq
    }

    /// Cauchy bound: every real root lies strictly inside (-B, B).
    pub fn root_bound(&self) -> BigRational {
        let l = self.leading().abs();
        let m = self.coeffs[..self.degree()].iter().map(|c| c.abs() / &l).max().unwrap_or_else(BigRational::zero);
        m + q(1)
    }

    /// Real roots of `f`: one isolating interval per distinct root, in increasing order.
    pub fn real_roots(&self) -> Result<Vec<RootInterval>> {
        sturm_isolate(self, &BigRational::new(1.into(), BigInt::from(1_000_000_000u64)))
    }

    /// Rational roots of `f`, sorted ascending, without multiplicity.
    pub fn rational_roots(&self) -> Result<Vec<BigRational>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.squarefree().primitive();
        if p.degree() == 0 {
            return Ok(vec![]);
        }
        let lead = p.leading().to_integer().abs();
        let divisors = divisors_of(&lead);
        // two distinct rationals with denominators dividing `lead` differ by at least 1/lead^2
        let width = BigRational::new(BigInt::one(), &lead * &lead * 2);
        let mut out = Vec::new();
        for iv in sturm_isolate(&p, &width)? {
            if let Some(r) = iv.exact.clone() {
                out.push(r);
                continue;
            }
            'den: for d in &divisors {
                let dq = BigRational::from_integer(d.clone());
                let lo = (&iv.lo * &dq).ceil().to_integer();
                let hi = (&iv.hi * &dq).floor().to_integer();
                let mut n = lo;
                while n <= hi {
                    let cand = BigRational::new(n.clone(), d.clone());
                    if cand > iv.lo && cand <= iv.hi && p.eval(&cand).is_zero() {
                        out.push(cand);
                        break 'den;
                    }
                    n += 1;
                }
            }
        }
        Ok(out)
    }
}

fn divisors_of(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    // trial division; leading coefficients at desk scale are small
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(10_000_000u64);
    while &p * &p <= m && p < limit {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if m > BigInt::one() {
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// An isolating interval `(lo, hi]` containing exactly one real root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "ser_rational")]
    pub lo: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub hi: BigRational,
    /// Set when the root was hit exactly by a bisection point.
    #[serde(serialize_with = "ser_opt_rational")]
    pub exact: Option<BigRational>,
}

fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn ser_opt_rational<S: serde::Serializer>(q: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_str(&q.to_string()),
        None => s.serialize_none(),
    }
}

impl RootInterval {
    pub fn midpoint(&self) -> f64 {
        match &self.exact {
            Some(r) => rational_to_f64(r),
            None => (rational_to_f64(&self.lo) + rational_to_f64(&self.hi)) / 2.0,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        rational_to_f64(&self.lo) <= x && x <= rational_to_f64(&self.hi)
    }
}

fn sign_changes(seq: &[UniPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots in `(a, b]`.
pub fn count_roots(seq: &[UniPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_changes(seq, a).saturating_sub(sign_changes(seq, b))
}

/// Isolates all real roots of `f` into disjoint intervals of width at most `precision`.
pub fn sturm_isolate(f: &UniPoly, precision: &BigRational) -> Result<Vec<RootInterval>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !precision.is_positive() {
        return Err(Error::InvalidInput("precision must be positive".into()));
    }
    if f.degree() == 0 {
        return Ok(vec![]);
    }
    let seq = f.sturm_sequence();
    let sqf = &seq[0];
    let b = f.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(&seq, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(refine(sqf, lo, hi, precision));
            continue;
        }
        let mid = (&lo + &hi) / q(2);
        // pushed right half first so the left one pops first
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

fn refine(f: &UniPoly, mut lo: BigRational, mut hi: BigRational, precision: &BigRational) -> RootInterval {
    if f.eval(&hi).is_zero() {
        return RootInterval { lo, hi: hi.clone(), exact: Some(hi) };
    }
    let s_hi = f.eval(&hi).is_positive();
    while &hi - &lo > *precision {
        let mid = (&lo + &hi) / q(2);
        let v = f.eval(&mid);
        if v.is_zero() {
            let w = precision / q(4);
            return RootInterval { lo: &mid - &w, hi: &mid + &w, exact: Some(mid) };
        }
        if v.is_positive() == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootInterval { lo, hi, exact: None }
}

/// Nearest `f64` for each isolated root.
pub fn approximate_roots(f: &UniPoly) -> Result<Vec<f64>> {
    Ok(f.real_roots()?.iter().map(|r| r.midpoint()).collect())
}
