//! Sparse multivariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

/// Variable names, coefficient field and monomial order of a polynomial ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<K: Field> {
    field: K,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<K: Field> PolyRing<K> {
    pub fn new<S: AsRef<str>>(field: K, vars: &[S], order: MonomialOrder) -> Result<Arc<Self>> {
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidInput(format!(
                "{} variables exceed the limit of {MAX_VARS}",
                vars.len()
            )));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidInput(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing { field: self.field.clone(), vars: self.vars.clone(), order })
    }

    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, self.vars.len())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub type Term<K> = (Monomial, <K as Field>::Elem);

/// A polynomial with terms kept sorted in descending monomial order.
#[derive(Clone)]
pub struct Polynomial<K: Field> {
    ring: Arc<PolyRing<K>>,
    terms: Vec<Term<K>>,
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<K: Field> Eq for Polynomial<K> {}

pub(crate) fn same_ring<K: Field>(a: &Arc<PolyRing<K>>, b: &Arc<PolyRing<K>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<K: Field> Polynomial<K> {
    pub fn zero(ring: &Arc<PolyRing<K>>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<PolyRing<K>>, c: K::Elem) -> Self {
        let terms = if ring.field().is_zero(&c) { vec![] } else { vec![(Monomial::one(), c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn from_int(ring: &Arc<PolyRing<K>>, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn var(ring: &Arc<PolyRing<K>>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(i), ring.field().one())] }
    }

    pub fn monomial(ring: &Arc<PolyRing<K>>, m: Monomial, c: K::Elem) -> Self {
        Self::constant(ring, c).mul_monomial(&m)
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing<K>>, mut terms: Vec<Term<K>>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let mut out: Vec<Term<K>> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if field.is_zero(&last.1) {
                out.pop();
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Wraps terms already sorted, merged and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing<K>>, terms: Vec<Term<K>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn field(&self) -> &K {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term<K>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<K>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<K>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&K::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.iter().map(|t| t.0.exp(i)).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> K::Elem {
        self.terms
            .last()
            .filter(|t| t.0.is_one())
            .map(|t| t.1.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn coefficient(&self, m: &Monomial) -> K::Elem {
        self.terms
            .iter()
            .find(|t| t.0 == *m)
            .map(|t| t.1.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.0.exp(i) > 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.uses_var(i)).collect()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_impl(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_impl(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { field.sub(&a[i].1, &b[j].1) } else { field.add(&a[i].1, &b[j].1) };
                    if !field.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { field.neg(&t.1) } else { t.1.clone() };
            out.push((t.0, c));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            let part = large.mul_term(m, c);
            acc = acc.add_impl(&part, false);
        }
        acc
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, field.mul(a, c))).collect(),
        }
    }

    /// `c * m * self`. Multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &K::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(mm, a)| (mm.mul(m), field.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(mm, a)| (mm.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::from_int(&self.ring, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(i < self.ring.nvars(), "variable index out of range");
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let e = m.exp(i);
                let mut dm = *m;
                dm.set_exp(i, e - 1);
                (dm, field.mul(c, &field.from_i64(e as i64)))
            })
            .collect();
        // order of derived terms may change, and characteristic may kill coefficients
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Evaluates at a point with one coordinate per ring variable.
    pub fn eval(&self, point: &[K::Elem]) -> Result<K::Elem> {
        if point.len() != self.ring.nvars() {
            return Err(Error::InvalidInput(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = field.mul(&t, x);
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Ring homomorphism sending variable `i` to `images[i]` (all in a common target ring).
    pub fn substitute(&self, target: &Arc<PolyRing<K>>, images: &[Polynomial<K>]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidInput("one image per variable is required".into()));
        }
        if images.iter().any(|p| !same_ring(p.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        let nv = self.ring.nvars();
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial<K>>> = vec![vec![Polynomial::from_int(target, 1)]; nv];
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for i in 0..nv {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_impl(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul_impl(&powers[i][e]);
            }
            acc = acc.add_impl(&t, false);
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target` sending variable `i` to variable
    /// `var_map[i]`. Variables mapped to `None` must not occur.
    pub fn rename_into(&self, target: &Arc<PolyRing<K>>, var_map: &[Option<usize>]) -> Result<Self> {
        if var_map.len() != self.ring.nvars() {
            return Err(Error::InvalidInput("variable map has the wrong length".into()));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut nm = Monomial::one();
            for (i, slot) in var_map.iter().enumerate() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                match slot {
                    Some(j) if *j < target.nvars() => nm.set_exp(*j, nm.exp(*j) + e),
                    _ => {
                        return Err(Error::InvalidInput(format!(
                            "variable `{}` has no image in the target ring",
                            self.ring.vars()[i]
                        )))
                    }
                }
            }
            terms.push((nm, c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Re-sorts the terms for a ring with the same variables and field but possibly another order.
    pub fn reorder(&self, target: &Arc<PolyRing<K>>) -> Result<Self> {
        if target.vars() != self.ring.vars() || target.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(target, self.terms.clone()))
    }

    /// Subtracts `c * m * g` in place (all in the same ring).
    pub(crate) fn sub_scaled(&mut self, c: &K::Elem, m: &Monomial, g: &[Term<K>]) {
        let field = self.ring.field();
        let ring = &self.ring;
        let a = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(a.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let mut gm: Option<(Monomial, K::Elem)> = None;
        let next_g = |j: usize| -> (Monomial, K::Elem) { (g[j].0.mul(m), field.mul(&g[j].1, c)) };
        while i < a.len() && j < g.len() {
            if gm.is_none() {
                gm = Some(next_g(j));
            }
            let (bm, bc) = gm.as_ref().unwrap();
            match ring.cmp_monomials(&a[i].0, bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*bm, field.neg(bc)));
                    gm = None;
                    j += 1;
                }
                Ordering::Equal => {
                    let v = field.sub(&a[i].1, bc);
                    if !field.is_zero(&v) {
                        out.push((a[i].0, v));
                    }
                    gm = None;
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        while j < g.len() {
            let (bm, bc) = match gm.take() {
                Some(x) => x,
                None => next_g(j),
            };
            out.push((bm, field.neg(&bc)));
            j += 1;
        }
        self.terms = out;
    }

    pub(crate) fn terms_mut(&mut self) -> &mut Vec<Term<K>> {
        &mut self.terms
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl<'a, K: Field> std::ops::$tr<&'a Polynomial<K>> for &'a Polynomial<K> {
            type Output = Polynomial<K>;
            /// Panics when the operands live in different rings; use the `checked_` variant otherwise.
            fn $method(self, rhs: &'a Polynomial<K>) -> Polynomial<K> {
                self.$imp(rhs).expect("polynomials from different rings")
            }
        }
        impl<K: Field> std::ops::$tr<Polynomial<K>> for Polynomial<K> {
            type Output = Polynomial<K>;
            fn $method(self, rhs: Polynomial<K>) -> Polynomial<K> {
                self.$imp(&rhs).expect("polynomials from different rings")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<K: Field> std::ops::Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial::neg(self)
    }
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = format_monomial(m, self.ring.vars());
            if mono.is_empty() {
                write!(f, "{}", field.format(&abs))?;
            } else if field.is_one(&abs) {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", field.format(&abs))?;
            }
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

pub fn format_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, v) in vars.iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(v.clone()),
            e => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{PrimeField, Rationals};

    fn ring_q(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, vars, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn add_cancels_to_zero() {
        let r = ring_q(&["x1", "x2"]);
        let x = Polynomial::var(&r, 0);
        assert!((&x + &x.neg()).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring_q(&["x1", "x2"]);
        let (x1, x2) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let p = &(&x1 - &x2) * &(&x1 + &x2);
        assert_eq!(p.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn modular_product() {
        let f7 = PrimeField::new(7).unwrap();
        let r = PolyRing::new(f7, &["x"], MonomialOrder::GrevLex).unwrap();
        let x = Polynomial::var(&r, 0);
        let p = &x.scale(&3) * &x.scale(&5);
        assert_eq!(p, x.pow(2));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::var(&ring_q(&["x"]), 0);
        let b = Polynomial::var(&ring_q(&["y"]), 0);
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch)));
    }

    #[test]
    fn derivative_of_cusp() {
        let r = ring_q(&["x1", "x2"]);
        let (x1, x2) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let f = &x1.pow(3) - &x2.pow(2);
        assert_eq!(f.partial_derivative(0).to_string(), "3*x1^2");
        assert_eq!(f.partial_derivative(1).to_string(), "-2*x2");
        assert!(Polynomial::from_int(&r, 5).partial_derivative(0).is_zero());
    }

    #[test]
    fn derivative_vanishes_in_characteristic() {
        let f3 = PrimeField::new(3).unwrap();
        let r = PolyRing::new(f3, &["x"], MonomialOrder::GrevLex).unwrap();
        let x = Polynomial::var(&r, 0);
        assert!(x.pow(3).partial_derivative(0).is_zero());
    }

    #[test]
    fn substitution_composes() {
        let r = ring_q(&["x", "y"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let f = &x.pow(2) + &y;
        let g = f.substitute(&r, &[&x + &y, y.clone()]).unwrap();
        assert_eq!(g, &(&x + &y).pow(2) + &y);
    }

    #[test]
    fn sub_scaled_matches_naive() {
        let r = ring_q(&["x", "y"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let f = &(&x.pow(3) + &y) + &Polynomial::from_int(&r, 2);
        let g = &(&x * &y) - &Polynomial::from_int(&r, 1);
        let c = Rationals.from_i64(3);
        let m = Monomial::from_exps(&[1, 1]);
        let mut h = f.clone();
        h.sub_scaled(&c, &m, g.terms());
        assert_eq!(h, &f - &g.mul_term(&m, &c));
    }
}
