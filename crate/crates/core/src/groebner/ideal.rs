//! Ideals and the operations the Voronoi pipeline needs.

use std::collections::HashSet;
use std::sync::Arc;

use super::buchberger::{buchberger_stage, Budget, GroebnerBasis};
use crate::error::{Error, Result};
use crate::exactmath::monomial::{Monomial, MonomialOrder};
use crate::exactmath::poly::{same_ring, PolyRing, Polynomial};
use crate::exactmath::{parse_polynomial, Field};

/// Generators in a common ring plus an optional declared codimension.
/// Zero generators are dropped; an empty list is the zero ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealSpec<K: Field> {
    ring: Arc<PolyRing<K>>,
    generators: Vec<Polynomial<K>>,
    codim: Option<usize>,
}

impl<K: Field> IdealSpec<K> {
    pub fn new(ring: &Arc<PolyRing<K>>, generators: Vec<Polynomial<K>>) -> Result<Self> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(IdealSpec { ring: ring.clone(), generators: generators.into_iter().filter(|g| !g.is_zero()).collect(), codim: None })
    }

    /// Parses generators written in the polynomial grammar.
    pub fn parse<S: AsRef<str>>(ring: &Arc<PolyRing<K>>, gens: &[S]) -> Result<Self> {
        let g = gens.iter().map(|s| parse_polynomial(s.as_ref(), ring)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, g)
    }

    pub fn with_codim(mut self, c: Option<usize>) -> Self {
        self.codim = c;
        self
    }

    pub fn unit(ring: &Arc<PolyRing<K>>) -> Self {
        IdealSpec { ring: ring.clone(), generators: vec![Polynomial::from_int(ring, 1)], codim: None }
    }

    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.generators
    }

    pub fn codim(&self) -> Option<usize> {
        self.codim
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Groebner basis under `order` (the generators are re-sorted into that order).
    pub fn groebner_basis(&self, order: MonomialOrder, budget: Budget) -> Result<GroebnerBasis<K>> {
        self.groebner_stage(order, budget, "groebner basis")
    }

    pub(crate) fn groebner_stage(&self, order: MonomialOrder, budget: Budget, stage: &str) -> Result<GroebnerBasis<K>> {
        let ring = if self.ring.order() == order { self.ring.clone() } else { self.ring.with_order(order) };
        let gens: Vec<Polynomial<K>> = self.generators.iter().map(|g| g.reorder(&ring)).collect::<Result<_>>()?;
        if gens.is_empty() {
            return Ok(GroebnerBasis::empty(&ring));
        }
        buchberger_stage(&gens, budget, stage)
    }

    /// The ideal generated by a reduced basis, in this ideal's ring and order.
    pub fn reduced(&self, budget: Budget) -> Result<Self> {
        let gb = self.groebner_basis(self.ring.order(), budget)?;
        Ok(IdealSpec { ring: self.ring.clone(), generators: gb.into_elements(), codim: self.codim })
    }

    /// Equality of ideals via reduced Groebner bases.
    pub fn same_ideal(&self, other: &Self, budget: Budget) -> Result<bool> {
        if self.ring.vars() != other.ring.vars() || self.ring.field() != other.ring.field() {
            return Err(Error::RingMismatch);
        }
        let order = self.ring.order();
        let a = self.groebner_basis(order, budget)?;
        let b = other.groebner_basis(order, budget)?;
        Ok(a.elements() == b.elements())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Self::new(&self.ring, g)
    }

    pub fn contains(&self, f: &Polynomial<K>, budget: Budget) -> Result<bool> {
        let gb = self.groebner_basis(f.ring().order(), budget)?;
        gb.contains(&f.reorder(gb.ring())?)
    }
}

impl<K: Field> GroebnerBasis<K> {
    pub(crate) fn empty(ring: &Arc<PolyRing<K>>) -> Self {
        GroebnerBasis::from_parts(ring.clone(), Vec::new())
    }

    /// True when every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let n = self.ring().nvars();
        let mut seen = vec![false; n];
        for lt in self.leading_monomials() {
            if let Some(i) = lt.pure_power_var() {
                seen[i] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Monomials outside the leading-term ideal (zero-dimensional bases only).
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        if self.is_unit() {
            return Ok(vec![]);
        }
        let lts = self.leading_monomials();
        let n = self.ring().nvars();
        let standard = |m: &Monomial| !lts.iter().any(|lt| lt.divides(m));
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut stack = vec![Monomial::one()];
        seen.insert(Monomial::one());
        let mut out = Vec::new();
        // the standard monomials form an order ideal, so a search from 1 finds them all
        while let Some(m) = stack.pop() {
            out.push(m);
            for i in 0..n {
                let next = m.mul(&Monomial::var(i));
                if standard(&next) && seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        let ring = self.ring().clone();
        out.sort_by(|a, b| ring.cmp_monomials(a, b));
        Ok(out)
    }

    /// Vector-space dimension of the quotient ring.
    pub fn quotient_degree(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    /// Monic minimal polynomial of multiplication by `f` on the quotient ring,
    /// as ascending coefficients. Requires a zero-dimensional, non-unit basis.
    pub fn minimal_polynomial(&self, f: &Polynomial<K>) -> Result<Vec<K::Elem>> {
        let std = self.standard_monomials()?;
        if std.is_empty() {
            return Err(Error::InvalidInput("minimal polynomial of the unit ideal".into()));
        }
        let field = self.ring().field().clone();
        let index: std::collections::HashMap<Monomial, usize> = std.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let f = self.normal_form(f)?;
        let to_vec = |p: &Polynomial<K>| {
            let mut v = vec![field.zero(); std.len()];
            for (m, c) in p.terms() {
                v[index[m]] = c.clone();
            }
            v
        };
        // echelon rows: pivot column, reduced vector, combination of powers of f
        let mut rows: Vec<(usize, Vec<K::Elem>, Vec<K::Elem>)> = Vec::new();
        let mut power = Polynomial::from_int(self.ring(), 1);
        for k in 0..=std.len() {
            if k > 0 {
                power = self.normal_form(&(&power * &f))?;
            }
            let mut v = to_vec(&power);
            let mut combo = vec![field.zero(); k + 1];
            combo[k] = field.one();
            for (col, rv, rc) in &rows {
                if field.is_zero(&v[*col]) {
                    continue;
                }
                let s = field.div(&v[*col], &rv[*col]).expect("pivot is nonzero");
                for (a, b) in v.iter_mut().zip(rv) {
                    *a = field.sub(a, &field.mul(&s, b));
                }
                for (a, b) in combo.iter_mut().zip(rc) {
                    *a = field.sub(a, &field.mul(&s, b));
                }
            }
            match v.iter().position(|c| !field.is_zero(c)) {
                Some(col) => rows.push((col, v, combo)),
                None => return Ok(combo),
            }
        }
        unreachable!("the powers of f are dependent after dim+1 steps")
    }
}

/// A ring whose variables are `front` followed by the variables of `base`.
fn extended_ring<K: Field>(base: &Arc<PolyRing<K>>, front: &[&str], order: MonomialOrder) -> Result<Arc<PolyRing<K>>> {
    let mut names: Vec<String> = Vec::new();
    for f in front {
        let mut name = f.to_string();
        while base.var_index(&name).is_some() {
            name.push('_');
        }
        names.push(name);
    }
    names.extend(base.vars().iter().cloned());
    PolyRing::new(base.field().clone(), &names, order)
}

/// Generators of `I ∩ k[remaining variables]`, in a ring of the remaining
/// variables (original relative order, GrevLex).
pub fn eliminate<K: Field>(ideal: &IdealSpec<K>, drop_vars: &[usize], budget: Budget) -> Result<IdealSpec<K>> {
    eliminate_stage(ideal, drop_vars, budget, "elimination")
}

pub(crate) fn eliminate_stage<K: Field>(ideal: &IdealSpec<K>, drop_vars: &[usize], budget: Budget, stage: &str) -> Result<IdealSpec<K>> {
    let base = ideal.ring();
    let n = base.nvars();
    if drop_vars.iter().any(|&i| i >= n) {
        return Err(Error::InvalidInput("variable index out of range".into()));
    }
    let dropped: Vec<usize> = {
        let mut d = drop_vars.to_vec();
        d.sort_unstable();
        d.dedup();
        d
    };
    let kept: Vec<usize> = (0..n).filter(|i| !dropped.contains(i)).collect();
    let k = dropped.len();
    // permuted ring: dropped block first
    let perm_names: Vec<&str> = dropped.iter().chain(kept.iter()).map(|&i| base.vars()[i].as_str()).collect();
    let perm_ring = PolyRing::new(base.field().clone(), &perm_names, MonomialOrder::BlockElim(k))?;
    let mut to_perm = vec![None; n];
    for (pos, &i) in dropped.iter().chain(kept.iter()).enumerate() {
        to_perm[i] = Some(pos);
    }
    let gens: Vec<Polynomial<K>> = ideal.generators().iter().map(|g| g.rename_into(&perm_ring, &to_perm)).collect::<Result<_>>()?;
    let kept_names: Vec<&str> = kept.iter().map(|&i| base.vars()[i].as_str()).collect();
    let out_ring = PolyRing::new(base.field().clone(), &kept_names, MonomialOrder::GrevLex)?;
    if gens.is_empty() {
        return IdealSpec::new(&out_ring, vec![]);
    }
    let gb = buchberger_stage(&gens, budget, stage)?;
    let mut back = vec![None; n];
    for (j, slot) in back.iter_mut().enumerate().skip(k) {
        *slot = Some(j - k);
    }
    let out: Vec<Polynomial<K>> = gb
        .elements()
        .iter()
        .filter(|g| (0..k).all(|i| !g.uses_var(i)))
        .map(|g| g.rename_into(&out_ring, &back))
        .collect::<Result<_>>()?;
    IdealSpec::new(&out_ring, out)
}

/// Moves an ideal of a ring with the same variable names into `target` (order may differ).
pub fn into_ring<K: Field>(ideal: &IdealSpec<K>, target: &Arc<PolyRing<K>>) -> Result<IdealSpec<K>> {
    let map: Vec<Option<usize>> = ideal.ring().vars().iter().map(|v| target.var_index(v)).collect();
    let gens = ideal.generators().iter().map(|g| g.rename_into(target, &map)).collect::<Result<Vec<_>>>()?;
    Ok(IdealSpec::new(target, gens)?.with_codim(ideal.codim()))
}

/// `(I : g^∞)` via one fresh variable `t` and the generator `1 - t g`.
pub fn saturate_by<K: Field>(ideal: &IdealSpec<K>, g: &Polynomial<K>, budget: Budget) -> Result<IdealSpec<K>> {
    if !same_ring(g.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    if g.is_zero() {
        return Ok(IdealSpec::unit(ideal.ring()));
    }
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    let base = ideal.ring();
    let ext = extended_ring(base, &["t"], MonomialOrder::BlockElim(1))?;
    let shift: Vec<Option<usize>> = (0..base.nvars()).map(|i| Some(i + 1)).collect();
    let mut gens: Vec<Polynomial<K>> = ideal.generators().iter().map(|f| f.rename_into(&ext, &shift)).collect::<Result<_>>()?;
    let t = Polynomial::var(&ext, 0);
    let g_ext = g.rename_into(&ext, &shift)?;
    gens.push(&Polynomial::from_int(&ext, 1) - &(&t * &g_ext));
    let sat = eliminate_stage(&IdealSpec::new(&ext, gens)?, &[0], budget, "saturation")?;
    into_ring(&sat, base)
}

/// `(I : J^∞) = ∩_g (I : g^∞)` over the generators `g` of `J`.
pub fn saturate<K: Field>(ideal: &IdealSpec<K>, by: &IdealSpec<K>, budget: Budget) -> Result<IdealSpec<K>> {
    if !same_ring(ideal.ring(), by.ring()) {
        return Err(Error::RingMismatch);
    }
    if by.is_zero_ideal() {
        return Ok(IdealSpec::unit(ideal.ring()));
    }
    let mut acc: Option<IdealSpec<K>> = None;
    for g in by.generators() {
        let s = saturate_by(ideal, g, budget)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(&a, &s, budget)?,
        });
    }
    let out = acc.expect("nonempty generator list");
    out.reduced(budget)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
pub fn intersect<K: Field>(a: &IdealSpec<K>, b: &IdealSpec<K>, budget: Budget) -> Result<IdealSpec<K>> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return IdealSpec::new(a.ring(), vec![]);
    }
    let base = a.ring();
    let ext = extended_ring(base, &["t"], MonomialOrder::BlockElim(1))?;
    let shift: Vec<Option<usize>> = (0..base.nvars()).map(|i| Some(i + 1)).collect();
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::from_int(&ext, 1) - &t;
    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(&t * &f.rename_into(&ext, &shift)?);
    }
    for f in b.generators() {
        gens.push(&one_minus_t * &f.rename_into(&ext, &shift)?);
    }
    let out = eliminate_stage(&IdealSpec::new(&ext, gens)?, &[0], budget, "intersection")?;
    into_ring(&out, base)
}

/// Radical of a zero-dimensional ideal: adjoins the squarefree part of the
/// minimal polynomial of each variable (valid in characteristic zero and in
/// characteristic above the quotient degree).
pub fn radical_zero_dimensional<K: Field>(ideal: &IdealSpec<K>, budget: Budget) -> Result<IdealSpec<K>> {
    let order = ideal.ring().order();
    let gb = ideal.groebner_basis(order, budget)?;
    if gb.is_unit() {
        return Ok(IdealSpec::unit(ideal.ring()).with_codim(ideal.codim()));
    }
    if !gb.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let ring = ideal.ring();
    let field = ring.field();
    let mut extra = Vec::new();
    for i in 0..ring.nvars() {
        let mp = gb.minimal_polynomial(&Polynomial::var(ring, i))?;
        let sf = squarefree_part(field, &mp);
        if sf.len() < mp.len() {
            let x = Polynomial::var(ring, i);
            let mut p = Polynomial::zero(ring);
            for c in sf.iter().rev() {
                p = &(&p * &x) + &Polynomial::constant(ring, c.clone());
            }
            extra.push(p);
        }
    }
    if extra.is_empty() {
        return Ok(IdealSpec::new(ring, gb.into_elements())?.with_codim(ideal.codim()));
    }
    let mut gens = gb.into_elements();
    gens.extend(extra);
    Ok(IdealSpec::new(ring, gens)?.reduced(budget)?.with_codim(ideal.codim()))
}

/// Ascending dense univariate helpers over a field.
fn trim<K: Field>(field: &K, mut p: Vec<K::Elem>) -> Vec<K::Elem> {
    while p.last().is_some_and(|c| field.is_zero(c)) {
        p.pop();
    }
    p
}

fn rem_dense<K: Field>(field: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    let mut r = a.to_vec();
    let lb = field.inv(b.last().expect("nonzero divisor")).expect("nonzero lead");
    while r.len() >= b.len() {
        let c = field.mul(r.last().unwrap(), &lb);
        let shift = r.len() - b.len();
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = field.sub(&r[shift + j], &field.mul(&c, bj));
        }
        r.pop();
        r = trim(field, r);
    }
    r
}

fn gcd_dense<K: Field>(field: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    let (mut a, mut b) = (trim(field, a.to_vec()), trim(field, b.to_vec()));
    while !b.is_empty() {
        let r = rem_dense(field, &a, &b);
        a = b;
        b = r;
    }
    a
}

fn quo_dense<K: Field>(field: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    let mut r = a.to_vec();
    let lb = field.inv(b.last().unwrap()).unwrap();
    let mut q = vec![field.zero(); a.len() + 1 - b.len()];
    while r.len() >= b.len() && !r.is_empty() {
        let c = field.mul(r.last().unwrap(), &lb);
        let shift = r.len() - b.len();
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = field.sub(&r[shift + j], &field.mul(&c, bj));
        }
        q[shift] = c;
        r.pop();
    }
    q
}

/// `p / gcd(p, p')`, monic.
pub(crate) fn squarefree_part<K: Field>(field: &K, p: &[K::Elem]) -> Vec<K::Elem> {
    let deriv: Vec<K::Elem> = p.iter().enumerate().skip(1).map(|(i, c)| field.mul(&field.from_i64(i as i64), c)).collect();
    let deriv = trim(field, deriv);
    if deriv.is_empty() {
        return p.to_vec();
    }
    let g = gcd_dense(field, p, &deriv);
    let q = quo_dense(field, p, &g);
    let lead = field.inv(q.last().unwrap()).unwrap();
    q.iter().map(|c| field.mul(c, &lead)).collect()
}

/// The minimal polynomial of `f` modulo a zero-dimensional ideal.
pub fn minimal_polynomial<K: Field>(ideal: &IdealSpec<K>, f: &Polynomial<K>, budget: Budget) -> Result<Vec<K::Elem>> {
    let gb = ideal.groebner_basis(f.ring().order(), budget)?;
    gb.minimal_polynomial(&f.reorder(gb.ring())?)
}

pub fn is_zero_dimensional<K: Field>(ideal: &IdealSpec<K>, budget: Budget) -> Result<bool> {
    Ok(ideal.groebner_basis(MonomialOrder::GrevLex, budget)?.is_zero_dimensional())
}

/// Number of standard monomials of a zero-dimensional ideal.
pub fn quotient_degree<K: Field>(ideal: &IdealSpec<K>, budget: Budget) -> Result<usize> {
    ideal.groebner_basis(MonomialOrder::GrevLex, budget)?.quotient_degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Rationals;

    fn ring(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vars, MonomialOrder::GrevLex).unwrap()
    }

    fn ideal(r: &Arc<PolyRing<Rationals>>, g: &[&str]) -> IdealSpec<Rationals> {
        IdealSpec::parse(r, g).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn eliminate_parameter() {
        let r = ring(&["t", "x", "y"]);
        let e = eliminate(&ideal(&r, &["t*x - 1", "t*y - 1"]), &[0], b()).unwrap();
        let expect = ideal(e.ring(), &["x - y"]);
        assert!(e.same_ideal(&expect, b()).unwrap());
        // x - y vanishes on (1/s, 1/s)
        for s in 1..5 {
            let v = Rationals.from_rational(&num_rational::BigRational::new(1.into(), s.into())).unwrap();
            assert!(e.generators()[0].eval(&[v.clone(), v]).unwrap() == Rationals.zero());
        }
    }

    #[test]
    fn eliminate_nothing_and_everything() {
        let r = ring(&["x", "u"]);
        let i = ideal(&r, &["x^2 - u", "x*u"]);
        let e = eliminate(&i, &[], b()).unwrap();
        assert!(e.same_ideal(&i, b()).unwrap());
        let z = eliminate(&ideal(&r, &["x - u^2"]), &[0], b()).unwrap();
        assert!(z.is_zero_ideal());
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y"]);
        let s = saturate(&ideal(&r, &["x^2*y"]), &ideal(&r, &["x"]), b()).unwrap();
        assert!(s.same_ideal(&ideal(&r, &["y"]), b()).unwrap());
        let i = ideal(&r, &["x^2*y", "y^3 - x"]);
        let s1 = saturate(&i, &IdealSpec::unit(&r), b()).unwrap();
        assert!(s1.same_ideal(&i, b()).unwrap());
        let s2 = saturate(&ideal(&r, &["x*(x-1)"]), &ideal(&r, &["x"]), b()).unwrap();
        assert!(s2.same_ideal(&ideal(&r, &["x - 1"]), b()).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = ring(&["x", "y"]);
        let i = intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"]), b()).unwrap();
        assert!(i.same_ideal(&ideal(&r, &["x*y"]), b()).unwrap());
        let j = ideal(&r, &["x^2 - y", "y^2"]);
        assert!(intersect(&j, &j, b()).unwrap().same_ideal(&j, b()).unwrap());
        let u = ring(&["u1", "u2"]);
        let both = intersect(&ideal(&u, &["u1 - 28", "u2"]), &ideal(&u, &["u1 + 26", "u2 - 18"]), b()).unwrap();
        assert_eq!(quotient_degree(&both, b()).unwrap(), 2);
        let gb = both.groebner_basis(MonomialOrder::GrevLex, b()).unwrap();
        for pt in [[28, 0], [-26, 18]] {
            let p: Vec<_> = pt.iter().map(|&v| Rationals.from_i64(v)).collect();
            assert!(gb.elements().iter().all(|g| g.eval(&p).unwrap() == Rationals.zero()));
        }
    }

    #[test]
    fn zero_dimensionality() {
        let r = ring(&["x", "y"]);
        assert!(is_zero_dimensional(&ideal(&r, &["x^2", "y^3"]), b()).unwrap());
        assert!(!is_zero_dimensional(&ideal(&r, &["x*y"]), b()).unwrap());
        assert_eq!(quotient_degree(&ideal(&r, &["x^2", "y^3"]), b()).unwrap(), 6);
        assert!(matches!(quotient_degree(&ideal(&r, &["x*y"]), b()), Err(Error::NotZeroDimensional)));
    }

    #[test]
    fn minimal_polynomial_of_coordinate() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 - 2", "y - x"]);
        let x = Polynomial::var(&r, 0);
        let mp = minimal_polynomial(&i, &x, b()).unwrap();
        let expect: Vec<_> = [-2, 0, 1].iter().map(|&c| Rationals.from_i64(c)).collect();
        assert_eq!(mp, expect);
        // x + y = 2x also has degree two; x*y = 2 is rational
        let xy = parse_polynomial("x*y", &r).unwrap();
        assert_eq!(minimal_polynomial(&i, &xy, b()).unwrap().len(), 2);
    }

    #[test]
    fn radical_removes_multiplicity() {
        let r = ring(&["u1", "u2"]);
        let i = ideal(&r, &["u1 + 3*u2 - 28", "u2*(u2 - 18)^3"]);
        assert_eq!(quotient_degree(&i, b()).unwrap(), 4);
        let rad = radical_zero_dimensional(&i, b()).unwrap();
        assert_eq!(quotient_degree(&rad, b()).unwrap(), 2);
        assert!(rad.same_ideal(&ideal(&r, &["u1 + 3*u2 - 28", "u2*(u2 - 18)"]), b()).unwrap());
        let p = [6, -5, 1].map(|c| Rationals.from_i64(c));
        assert_eq!(squarefree_part(&Rationals, &p), p.to_vec());
    }

    #[test]
    fn quotient_degrees_of_boundary_components() {
        let u = ring(&["u1", "u2"]);
        let c1 = ideal(&u, &["u1 - 28", "u2"]);
        let c2 = ideal(&u, &["u1 + 26", "u2 - 18"]);
        let c3 = ideal(&u, &["u1 + 3*u2 - 28", "27*u2^2 - 486*u2 + 2197"]);
        assert_eq!(quotient_degree(&c1, b()).unwrap(), 1);
        assert_eq!(quotient_degree(&c3, b()).unwrap(), 2);
        let all = intersect(&intersect(&c1, &c2, b()).unwrap(), &c3, b()).unwrap();
        assert_eq!(quotient_degree(&all, b()).unwrap(), 4);
    }
}
