//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::monomial::{Monomial, MonomialOrder};
use crate::exactmath::poly::{same_ring, PolyRing, Polynomial, Term};
use crate::exactmath::Field;

/// Default cap on S-pair reductions per basis computation.
pub const DEFAULT_MAX_REDUCTIONS: u64 = 1_000_000;

/// Resource limits for one Groebner basis computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_reductions: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_reductions: DEFAULT_MAX_REDUCTIONS }
    }
}

impl Budget {
    pub fn new(max_reductions: u64) -> Self {
        Budget { max_reductions: max_reductions.max(1) }
    }

    /// Reads `VORONOI_BUDGET` if set and valid, else the default.
    pub fn from_env() -> Self {
        std::env::var("VORONOI_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&v| v > 0)
            .map(Budget::new)
            .unwrap_or_default()
    }
}

/// A reduced Groebner basis: monic elements sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<K: Field> {
    ring: Arc<PolyRing<K>>,
    elements: Vec<Polynomial<K>>,
}

impl<K: Field> GroebnerBasis<K> {
    pub(crate) fn from_parts(ring: Arc<PolyRing<K>>, elements: Vec<Polynomial<K>>) -> Self {
        GroebnerBasis { ring, elements }
    }

    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<K>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<K>> {
        self.elements
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| *g.leading_monomial().unwrap()).collect()
    }

    /// Remainder of multivariate division by the basis.
    pub fn normal_form(&self, f: &Polynomial<K>) -> Result<Polynomial<K>> {
        if f.ring().order() != self.ring.order() {
            return Err(Error::OrderMismatch);
        }
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let lts: Vec<(Monomial, u32)> = self
            .elements
            .iter()
            .map(|g| {
                let m = *g.leading_monomial().unwrap();
                (m, m.support_mask())
            })
            .collect();
        Ok(reduce_full(f.clone(), &self.elements, &lts))
    }

    pub fn contains(&self, f: &Polynomial<K>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

#[inline]
fn find_divisor(m: &Monomial, lts: &[(Monomial, u32)]) -> Option<usize> {
    let mask = m.support_mask();
    lts.iter().position(|(lt, lmask)| lmask & !mask == 0 && lt.divides(m))
}

/// Full reduction of `p` by monic `basis` elements with cached leading monomials.
pub(crate) fn reduce_full<K: Field>(mut p: Polynomial<K>, basis: &[Polynomial<K>], lts: &[(Monomial, u32)]) -> Polynomial<K> {
    let ring = p.ring().clone();
    let field = ring.field().clone();
    let mut rem: Vec<Term<K>> = Vec::new();
    loop {
        let (lm, lc) = match p.terms().first() {
            Some((m, c)) => (*m, c.clone()),
            None => break,
        };
        match find_divisor(&lm, lts) {
            Some(k) => {
                let g = &basis[k];
                let c = if field.is_one(g.leading_coeff().unwrap()) {
                    lc
                } else {
                    field.div(&lc, g.leading_coeff().unwrap()).unwrap()
                };
                let shift = lts[k].0.quotient_of(&lm);
                p.sub_scaled(&c, &shift, g.terms());
            }
            None => {
                // move the head term to the remainder
                let t = p.terms_mut().remove(0);
                rem.push(t);
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`
/// with respect to the order of their common ring.
pub fn buchberger<K: Field>(gens: &[Polynomial<K>], budget: Budget) -> Result<GroebnerBasis<K>> {
    buchberger_stage(gens, budget, "groebner basis")
}

pub(crate) fn buchberger_stage<K: Field>(gens: &[Polynomial<K>], budget: Budget, stage: &str) -> Result<GroebnerBasis<K>> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Err(Error::InvalidInput("empty generator list".into())),
    };
    if gens.iter().any(|g| !same_ring(g.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    let mut state = State { ring: ring.clone(), basis: Vec::new(), lts: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    // insert the generators in a fixed order: ascending leading monomial, then input index
    let mut input: Vec<(usize, &Polynomial<K>)> = gens.iter().enumerate().filter(|(_, g)| !g.is_zero()).collect();
    input.sort_by(|a, b| ring.cmp_monomials(a.1.leading_monomial().unwrap(), b.1.leading_monomial().unwrap()).then(a.0.cmp(&b.0)));
    for (_, g) in input {
        let h = reduce_full(g.clone(), &state.basis, &state.lts);
        if !h.is_zero() {
            if h.is_constant() {
                return Ok(unit_basis(&ring));
            }
            state.insert(h.monic());
        }
    }
    let mut reductions = 0u64;
    while let Some(pair) = state.select_pair() {
        reductions += 1;
        if reductions > budget.max_reductions {
            return Err(Error::BudgetExhausted { stage: stage.to_string(), limit: budget.max_reductions });
        }
        let s = state.s_polynomial(&pair);
        let h = reduce_full(s, &state.basis, &state.lts);
        if !h.is_zero() {
            if h.is_constant() {
                return Ok(unit_basis(&ring));
            }
            state.insert(h.monic());
        }
    }
    Ok(state.finish())
}

fn unit_basis<K: Field>(ring: &Arc<PolyRing<K>>) -> GroebnerBasis<K> {
    GroebnerBasis { ring: ring.clone(), elements: vec![Polynomial::from_int(ring, 1)] }
}

struct State<K: Field> {
    ring: Arc<PolyRing<K>>,
    basis: Vec<Polynomial<K>>,
    lts: Vec<(Monomial, u32)>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<K: Field> State<K> {
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.ring.cmp_monomials(a, b)
    }

    /// Normal strategy: smallest lcm first, ties by insertion indices.
    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let o = self.cmp(&a.lcm, &b.lcm).then((a.j, a.i).cmp(&(b.j, b.i)));
            if o == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, pair: &Pair) -> Polynomial<K> {
        let (gi, gj) = (&self.basis[pair.i], &self.basis[pair.j]);
        let mi = self.lts[pair.i].0.quotient_of(&pair.lcm);
        let mj = self.lts[pair.j].0.quotient_of(&pair.lcm);
        let mut s = gi.mul_monomial(&mi);
        let one = self.ring.field().one();
        s.sub_scaled(&one, &mj, gj.terms());
        s
    }

    /// Gebauer–Möller update with a new monic element.
    fn insert(&mut self, h: Polynomial<K>) {
        let hidx = self.basis.len();
        let lth = *h.leading_monomial().unwrap();
        let new: Vec<Pair> = (0..hidx)
            .filter(|&i| self.active[i])
            .map(|i| Pair { i, j: hidx, lcm: self.lts[i].0.lcm(&lth) })
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in new.iter().enumerate() {
            let coprime = self.lts[p.i].0.is_coprime(&lth);
            let dominated = !coprime
                && (new[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                    || kept.iter().any(|q| q.lcm.divides(&p.lcm)));
            if coprime || !dominated {
                kept.push(Pair { i: p.i, j: p.j, lcm: p.lcm });
            }
        }
        let kept: Vec<Pair> = kept.into_iter().filter(|p| !self.lts[p.i].0.is_coprime(&lth)).collect();
        // drop old pairs whose lcm is a proper multiple through h
        let lts = &self.lts;
        self.pairs.retain(|p| {
            if !lth.divides(&p.lcm) {
                return true;
            }
            let lih = lts[p.i].0.lcm(&lth);
            let ljh = lts[p.j].0.lcm(&lth);
            lih == p.lcm || ljh == p.lcm
        });
        self.pairs.extend(kept);
        for i in 0..hidx {
            if self.active[i] && lth.divides(&self.lts[i].0) {
                self.active[i] = false;
            }
        }
        self.lts.push((lth, lth.support_mask()));
        self.basis.push(h);
        self.active.push(true);
    }

    fn finish(self) -> GroebnerBasis<K> {
        let ring = self.ring.clone();
        let mut min: Vec<Polynomial<K>> = self
            .basis
            .into_iter()
            .zip(self.active)
            .filter_map(|(g, a)| a.then_some(g))
            .collect();
        min.sort_by(|a, b| ring.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        let mut reduced: Vec<Polynomial<K>> = Vec::with_capacity(min.len());
        let mut lts: Vec<(Monomial, u32)> = Vec::with_capacity(min.len());
        for g in min {
            let lm = *g.leading_monomial().unwrap();
            let r = reduce_full(g, &reduced, &lts).monic();
            debug_assert_eq!(r.leading_monomial(), Some(&lm));
            reduced.push(r);
            lts.push((lm, lm.support_mask()));
        }
        GroebnerBasis { ring, elements: reduced }
    }
}
