//! Splitting a zero-dimensional Voronoi ideal along a separating linear form.

use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::exactmath::{Field, MonomialOrder, Polynomial, Rationals, UniPoly};
use crate::groebner::{Budget, IdealSpec};

/// One piece of a zero-dimensional ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct Component<K: Field> {
    /// Reduced lexicographic basis.
    pub ideal: IdealSpec<K>,
    pub degree: usize,
    /// `Some(false)` when the component is certified to have no real points.
    pub real: Option<bool>,
    /// Coordinates when the component is a single rational point.
    pub point: Option<Vec<K::Elem>>,
}

/// Linear forms tried in turn: single coordinates from the last one, then
/// `u1 + k u2 + k^2 u3 + ...` for small `k`.
fn candidate_forms(n: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = (0..n).rev().map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for k in 2..8i64 {
        out.push((0..n).map(|j| k.pow(j as u32)).collect());
    }
    out
}

/// Splits a zero-dimensional radical ideal into rational points and the
/// remaining cofactor. Returns `None` when the ideal is not zero-dimensional,
/// is the unit ideal, or no candidate linear form separates its points.
pub fn decompose(ideal: &IdealSpec<Rationals>, budget: Budget) -> Result<Option<Vec<Component<Rationals>>>> {
    if ideal.is_zero_ideal() {
        return Ok(None);
    }
    let gb = ideal.groebner_stage(MonomialOrder::GrevLex, budget, "components")?;
    if gb.is_unit() || !gb.is_zero_dimensional() {
        return Ok(None);
    }
    let total = gb.quotient_degree()?;
    let ring = gb.ring().clone();
    let n = ring.nvars();
    let q = Rationals;
    for coeffs in candidate_forms(n) {
        let mut ell = Polynomial::zero(&ring);
        for (j, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                ell = &ell + &Polynomial::var(&ring, j).scale(&q.from_i64(c));
            }
        }
        let mp = gb.minimal_polynomial(&ell)?;
        if mp.len() - 1 != total {
            continue;
        }
        let p = UniPoly::new(mp);
        let lex = ideal.ring().with_order(MonomialOrder::Lex);
        let ell_lex = ell.reorder(&lex)?;
        let base = IdealSpec::new(&lex, ideal.generators().iter().map(|g| g.reorder(&lex)).collect::<Result<_>>()?)?;
        let mut out = Vec::new();
        let mut rest = p.clone();
        for r in p.rational_roots()? {
            let lin = &ell_lex - &Polynomial::constant(&lex, r.clone());
            let comp = base.sum(&IdealSpec::new(&lex, vec![lin])?)?.reduced(budget)?;
            let point = point_of(&comp);
            rest = rest.div_rem(&UniPoly::new(vec![-r, BigRational::one()])).0;
            out.push(Component { ideal: comp, degree: 1, real: Some(true), point });
        }
        if rest.degree() > 0 {
            let image = rest.to_polynomial(&lex, 0).substitute(&lex, &std::iter::once(ell_lex.clone()).chain((1..n).map(|j| Polynomial::var(&lex, j))).collect::<Vec<_>>())?;
            let comp = base.sum(&IdealSpec::new(&lex, vec![image])?)?.reduced(budget)?;
            // the form separates the points, so each real root of the cofactor is one real point
            let real = !rest.real_roots()?.is_empty();
            out.push(Component { ideal: comp, degree: rest.degree(), real: Some(real), point: None });
        }
        return Ok(Some(out));
    }
    Ok(None)
}

/// Reads off `(a1, .., an)` from a basis `{u1 - a1, .., un - an}`.
fn point_of(comp: &IdealSpec<Rationals>) -> Option<Vec<BigRational>> {
    let n = comp.ring().nvars();
    let mut coords = vec![None; n];
    for g in comp.generators() {
        if g.total_degree() != Some(1) || g.support().len() != 1 {
            return None;
        }
        let j = g.support()[0];
        let lead = g.leading_coeff()?.clone();
        coords[j] = Some(-g.constant_term() / lead);
    }
    coords.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::PolyRing;
    use crate::groebner::intersect;

    #[test]
    fn splits_two_points_and_a_complex_pair() {
        let u = PolyRing::new(Rationals, &["u1", "u2"], MonomialOrder::GrevLex).unwrap();
        let b = Budget::default();
        let parts = [vec!["u1 - 28", "u2"], vec!["u1 + 26", "u2 - 18"], vec!["u1 + 3*u2 - 28", "27*u2^2 - 486*u2 + 2197"]];
        let ideals: Vec<_> = parts.iter().map(|g| IdealSpec::parse(&u, g).unwrap()).collect();
        let all = intersect(&intersect(&ideals[0], &ideals[1], b).unwrap(), &ideals[2], b).unwrap();
        let comps = decompose(&all, b).unwrap().unwrap();
        assert_eq!(comps.len(), 3);
        let pts: Vec<_> = comps.iter().filter_map(|c| c.point.clone()).collect();
        let r = |v: i64| BigRational::from_integer(v.into());
        assert!(pts.contains(&vec![r(28), r(0)]));
        assert!(pts.contains(&vec![r(-26), r(18)]));
        let quad = comps.iter().find(|c| c.degree == 2).unwrap();
        assert_eq!(quad.real, Some(false));
        let lex = ideals[2].ring().with_order(MonomialOrder::Lex);
        let expect = IdealSpec::new(&lex, ideals[2].generators().iter().map(|g| g.reorder(&lex).unwrap()).collect()).unwrap();
        assert!(quad.ideal.same_ideal(&expect, b).unwrap());
    }
}
