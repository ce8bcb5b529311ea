//! Normal bundles, critical ideals and Voronoi ideals of a variety at a point.
//!
//! All constructions live in a ring with the input variables `x1..xn`
//! followed by the ambient coordinates `u1..un` of the normal space.

mod boundary;
mod components;

pub use boundary::{boundary_on_normal_line, NormalLineBoundary};
pub use components::{decompose, Component};

use std::sync::Arc;
use std::time::Instant;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmath::rowreduce::{rank, rref};
use crate::exactmath::{Field, MonomialOrder, PolyRing, Polynomial, Rationals};
use crate::groebner::buchberger::buchberger_stage;
use crate::groebner::{intersect, radical_zero_dimensional, Budget, IdealSpec};

/// Names for the `u` block that do not collide with the input variables.
pub fn u_names<K: Field>(x_ring: &PolyRing<K>) -> Vec<String> {
    (1..=x_ring.nvars())
        .map(|i| {
            let mut name = format!("u{i}");
            while x_ring.var_index(&name).is_some() {
                name.push('_');
            }
            name
        })
        .collect()
}

/// The ring `k[u1..un]` matching an input ring `k[x1..xn]`.
pub fn u_ring<K: Field>(x_ring: &PolyRing<K>, order: MonomialOrder) -> Result<Arc<PolyRing<K>>> {
    PolyRing::new(x_ring.field().clone(), &u_names(x_ring), order)
}

/// The ring `k[x1..xn, u1..un]`.
pub fn bundle_ring<K: Field>(x_ring: &PolyRing<K>) -> Result<Arc<PolyRing<K>>> {
    let mut names = x_ring.vars().to_vec();
    names.extend(u_names(x_ring));
    PolyRing::new(x_ring.field().clone(), &names, MonomialOrder::GrevLex)
}

/// Rows `u - x` and the gradients of the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct AugmentedJacobian<K: Field> {
    ring: Arc<PolyRing<K>>,
    n: usize,
    rows: Vec<Vec<Polynomial<K>>>,
}

impl<K: Field> AugmentedJacobian<K> {
    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn ncols(&self) -> usize {
        self.n
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Polynomial<K>>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<K> {
        &self.rows[i][j]
    }

    /// All `size × size` minors, rows and columns taken in lexicographic subset order.
    pub fn minors(&self, size: usize) -> Vec<Polynomial<K>> {
        let mut out = Vec::new();
        for rs in subsets(self.nrows(), size) {
            for cs in subsets(self.n, size) {
                let m: Vec<Vec<Polynomial<K>>> = rs.iter().map(|&i| cs.iter().map(|&j| self.rows[i][j].clone()).collect()).collect();
                out.push(determinant(&m));
            }
        }
        out
    }
}

pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant<K: Field>(m: &[Vec<Polynomial<K>>]) -> Polynomial<K> {
    match m.len() {
        0 => panic!("determinant of an empty matrix"),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        k => {
            let mut acc = Polynomial::zero(m[0][0].ring());
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Polynomial<K>>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect()).collect();
                let term = &m[0][j] * &determinant(&sub);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn x_embedding(n: usize) -> Vec<Option<usize>> {
    (0..n).map(Some).collect()
}

pub fn augmented_jacobian<K: Field>(ideal: &IdealSpec<K>) -> Result<AugmentedJacobian<K>> {
    let x_ring = ideal.ring();
    let n = x_ring.nvars();
    let ring = bundle_ring(x_ring)?;
    let map = x_embedding(n);
    let mut rows = vec![(0..n).map(|j| &Polynomial::var(&ring, n + j) - &Polynomial::var(&ring, j)).collect::<Vec<_>>()];
    for f in ideal.generators() {
        let fe = f.rename_into(&ring, &map)?;
        rows.push((0..n).map(|j| fe.partial_derivative(j)).collect());
    }
    Ok(AugmentedJacobian { ring, n, rows })
}

/// The input ideal together with the `(c+1)`-minors of its augmented Jacobian.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalBundle<K: Field> {
    pub input: IdealSpec<K>,
    pub jacobian: AugmentedJacobian<K>,
    pub codim: usize,
    pub minors: Vec<Polynomial<K>>,
    pub ideal: IdealSpec<K>,
}

pub fn normal_bundle_ideal<K: Field>(ideal: &IdealSpec<K>, c: usize) -> Result<NormalBundle<K>> {
    let n = ideal.ring().nvars();
    let m = ideal.generators().len();
    let max = m.min(n);
    if c == 0 || c > max {
        return Err(Error::CodimensionOutOfRange { c, max });
    }
    let jacobian = augmented_jacobian(ideal)?;
    let minors: Vec<Polynomial<K>> = jacobian.minors(c + 1).into_iter().filter(|p| !p.is_zero()).collect();
    let map = x_embedding(n);
    let mut gens: Vec<Polynomial<K>> = ideal.generators().iter().map(|f| f.rename_into(jacobian.ring(), &map)).collect::<Result<_>>()?;
    gens.extend(minors.iter().cloned());
    let bundle = IdealSpec::new(jacobian.ring(), gens)?.with_codim(Some(c));
    Ok(NormalBundle { input: ideal.clone(), jacobian, codim: c, minors, ideal: bundle })
}

/// Fails unless `y` has the right length and every generator vanishes at it.
pub fn check_point<K: Field>(ideal: &IdealSpec<K>, y: &[K::Elem]) -> Result<()> {
    let n = ideal.ring().nvars();
    if y.len() != n {
        return Err(Error::InvalidInput(format!("point has {} coordinates, expected {n}", y.len())));
    }
    for (index, f) in ideal.generators().iter().enumerate() {
        let v = f.eval(y)?;
        if !ideal.ring().field().is_zero(&v) {
            return Err(Error::PointNotOnVariety { index, value: ideal.ring().field().format(&v) });
        }
    }
    Ok(())
}

/// Gradients of the generators at `y`, one row per generator.
pub fn gradients_at<K: Field>(ideal: &IdealSpec<K>, y: &[K::Elem]) -> Result<Vec<Vec<K::Elem>>> {
    let n = ideal.ring().nvars();
    ideal.generators().iter().map(|f| (0..n).map(|j| f.partial_derivative(j).eval(y)).collect()).collect()
}

pub fn jacobian_rank_at<K: Field>(ideal: &IdealSpec<K>, y: &[K::Elem]) -> Result<usize> {
    Ok(rank(ideal.ring().field(), &gradients_at(ideal, y)?))
}

/// Affine-linear equations of the normal space at `y`, in `k[u]`.
/// A Jacobian rank below the codimension is rejected unless `allow_singular`.
pub fn normal_space_ideal<K: Field>(bundle: &NormalBundle<K>, y: &[K::Elem], allow_singular: bool) -> Result<IdealSpec<K>> {
    let input = &bundle.input;
    check_point(input, y)?;
    let r = jacobian_rank_at(input, y)?;
    if r != bundle.codim && !(allow_singular && r < bundle.codim) {
        return Err(Error::SingularPoint { rank: r, expected: bundle.codim });
    }
    let field = input.ring().field();
    let n = input.ring().nvars();
    let target = u_ring(input.ring(), MonomialOrder::GrevLex)?;
    let mut images: Vec<Polynomial<K>> = y.iter().map(|c| Polynomial::constant(&target, c.clone())).collect();
    images.extend((0..n).map(|j| Polynomial::var(&target, j)));
    let mut rows = Vec::new();
    for minor in &bundle.minors {
        let lin = minor.substitute(&target, &images)?;
        if lin.is_zero() {
            continue;
        }
        if lin.total_degree().unwrap_or(0) > 1 {
            return Err(Error::InvalidInput("normal-space equation is not affine-linear".into()));
        }
        let mut row = vec![field.zero(); n + 1];
        for (m, c) in lin.terms() {
            match (0..n).find(|&j| m.exp(j) == 1) {
                Some(j) => row[j] = c.clone(),
                None => row[n] = c.clone(),
            }
        }
        rows.push(row);
    }
    rref(field, &mut rows);
    let gens = rows
        .into_iter()
        .map(|row| {
            let mut p = Polynomial::constant(&target, row[n].clone());
            for (j, c) in row[..n].iter().enumerate() {
                if !field.is_zero(c) {
                    p = &p + &Polynomial::var(&target, j).scale(c);
                }
            }
            p
        })
        .collect();
    IdealSpec::new(&target, gens)
}

/// `I + N_I + N_I(y) + <|x-u|^2 - |y-u|^2>` in `k[x, u]`.
pub fn critical_ideal<K: Field>(bundle: &NormalBundle<K>, y: &[K::Elem], normal_space: &IdealSpec<K>) -> Result<IdealSpec<K>> {
    let ring = bundle.jacobian.ring().clone();
    let n = bundle.input.ring().nvars();
    let mut gens = bundle.ideal.generators().to_vec();
    let u_map: Vec<Option<usize>> = (0..n).map(|j| Some(n + j)).collect();
    for l in normal_space.generators() {
        gens.push(l.rename_into(&ring, &u_map)?);
    }
    let mut sphere = Polynomial::zero(&ring);
    for (j, yj) in y.iter().enumerate() {
        let x = Polynomial::var(&ring, j);
        let u = Polynomial::var(&ring, n + j);
        let dx = &x - &u;
        let dy = &Polynomial::constant(&ring, yj.clone()) - &u;
        sphere = &(&sphere + &(&dx * &dx)) - &(&dy * &dy);
    }
    gens.push(sphere);
    IdealSpec::new(&ring, gens)
}

#[derive(Clone, Copy, Debug)]
#[derive(Default)]
pub struct VoronoiOptions {
    /// Overrides the codimension declared on the ideal.
    pub codim: Option<usize>,
    pub allow_singular: bool,
    pub budget: Budget,
}


#[derive(Clone, Debug, PartialEq)]
pub struct StageTiming {
    pub stage: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VoronoiReport<K: Field> {
    pub input: IdealSpec<K>,
    pub point: Vec<K::Elem>,
    pub codim: usize,
    /// Jacobian rank at the point is below the codimension.
    pub singular: bool,
    /// A nonzero normal vector at a smooth point of a hypersurface.
    pub normal_vector: Option<Vec<K::Elem>>,
    pub normal_space: IdealSpec<K>,
    pub critical_generators: usize,
    /// Reduced lexicographic basis in `k[u]`; the radical when zero-dimensional.
    pub voronoi_ideal: IdealSpec<K>,
    pub zero_dimensional: bool,
    pub degree: Option<usize>,
    /// Quotient degree before passing to the radical.
    pub raw_degree: Option<usize>,
    /// Monic generator in `lambda` along `u = y + lambda * normal_vector`.
    pub boundary_poly: Option<Polynomial<K>>,
    pub components: Option<Vec<Component<K>>>,
    pub timings: Vec<StageTiming>,
}

struct Clock(Vec<StageTiming>, Instant);

impl Clock {
    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        self.0.push(StageTiming { stage: stage.to_string(), seconds: (now - self.1).as_secs_f64() });
        self.1 = now;
    }
}

/// Runs the pipeline over any field. Components are not computed here.
pub fn voronoi_pipeline<K: Field>(ideal: &IdealSpec<K>, y: &[K::Elem], opts: &VoronoiOptions) -> Result<VoronoiReport<K>> {
    if ideal.is_zero_ideal() {
        return Err(Error::InvalidInput("the zero ideal has no Voronoi cells".into()));
    }
    let mut clock = Clock(Vec::new(), Instant::now());
    check_point(ideal, y)?;
    let field = ideal.ring().field().clone();
    let n = ideal.ring().nvars();
    let m = ideal.generators().len();
    let grads = gradients_at(ideal, y)?;
    let r = rank(&field, &grads);
    let c = match opts.codim.or(ideal.codim()) {
        Some(c) => c,
        None if r > 0 => r,
        None => m.min(n),
    };
    if r > c {
        return Err(Error::InvalidInput(format!("Jacobian rank {r} at the point exceeds the codimension {c}")));
    }
    let singular = r < c;
    let bundle = normal_bundle_ideal(ideal, c)?;
    let normal_space = normal_space_ideal(&bundle, y, opts.allow_singular)?;
    let normal_vector = if c == 1 && !singular { grads.iter().find(|g| g.iter().any(|v| !field.is_zero(v))).cloned() } else { None };
    let critical = critical_ideal(&bundle, y, &normal_space)?;
    clock.lap("critical ideal");

    let vor = saturate_and_eliminate(&critical, y, n, opts.budget)?;
    clock.lap("saturation and elimination");

    let lex = u_ring(ideal.ring(), MonomialOrder::Lex)?;
    let vor = if vor.is_zero_ideal() {
        IdealSpec::new(&lex, vec![])?
    } else {
        let gb = vor.groebner_stage(MonomialOrder::Lex, opts.budget, "lex basis")?;
        IdealSpec::new(&lex, gb.into_elements())?
    };
    let mut raw_degree = None;
    let (vor, zero_dimensional, degree) = if vor.is_zero_ideal() {
        (vor, false, None)
    } else {
        let gb = vor.groebner_stage(MonomialOrder::Lex, opts.budget, "lex basis")?;
        if gb.is_zero_dimensional() {
            raw_degree = Some(gb.quotient_degree()?);
            let rad = radical_zero_dimensional(&vor, opts.budget)?;
            let d = rad.groebner_stage(MonomialOrder::Lex, opts.budget, "lex basis")?.quotient_degree()?;
            (rad, true, Some(d))
        } else if vor.generators().len() == 1 {
            let d = vor.generators()[0].total_degree().map(|d| d as usize);
            (vor, false, d)
        } else {
            let dim = n - normal_space.generators().len();
            let d = if dim >= 2 { sliced_degree(&vor, dim - 1, opts.budget)? } else { None };
            (vor, false, d)
        }
    };
    let boundary_poly = match (&normal_vector, zero_dimensional && degree != Some(0)) {
        (Some(v), true) => Some(restrict_to_line(&vor, y, v, opts.budget)?),
        _ => None,
    };
    clock.lap("boundary");
    Ok(VoronoiReport {
        input: ideal.clone(),
        point: y.to_vec(),
        codim: c,
        singular,
        normal_vector,
        normal_space,
        critical_generators: critical.generators().len(),
        voronoi_ideal: vor,
        zero_dimensional,
        degree,
        raw_degree,
        boundary_poly,
        components: None,
        timings: clock.0,
    })
}

/// The pipeline over the rationals, including the component split of a
/// zero-dimensional Voronoi ideal.
pub fn voronoi_ideal(ideal: &IdealSpec<Rationals>, y: &[BigRational], opts: &VoronoiOptions) -> Result<VoronoiReport<Rationals>> {
    let mut report = voronoi_pipeline(ideal, y, opts)?;
    let start = Instant::now();
    report.components = decompose(&report.voronoi_ideal, opts.budget)?;
    report.timings.push(StageTiming { stage: "components".into(), seconds: start.elapsed().as_secs_f64() });
    Ok(report)
}

/// `(C : <x - y>^∞) ∩ k[u]`. Each generator `x_i - y_i` is saturated and
/// eliminated in one basis computation over `k[t, x, u]`, and the results are
/// intersected in `k[u]`.
fn saturate_and_eliminate<K: Field>(critical: &IdealSpec<K>, y: &[K::Elem], n: usize, budget: Budget) -> Result<IdealSpec<K>> {
    let base = critical.ring();
    let mut t_name = "t".to_string();
    while base.var_index(&t_name).is_some() {
        t_name.push('_');
    }
    let mut names = vec![t_name];
    names.extend(base.vars().iter().cloned());
    let ext = PolyRing::new(base.field().clone(), &names, MonomialOrder::BlockElim(n + 1))?;
    let shift: Vec<Option<usize>> = (0..2 * n).map(|i| Some(i + 1)).collect();
    let lifted: Vec<Polynomial<K>> = critical.generators().iter().map(|g| g.rename_into(&ext, &shift)).collect::<Result<_>>()?;
    let target = PolyRing::new(base.field().clone(), &base.vars()[n..], MonomialOrder::GrevLex)?;
    let back: Vec<Option<usize>> = (0..=2 * n).map(|i| if i > n { Some(i - n - 1) } else { None }).collect();
    let t = Polynomial::var(&ext, 0);
    let one = Polynomial::from_int(&ext, 1);
    let mut acc: Option<IdealSpec<K>> = None;
    for i in 0..n {
        let g = &Polynomial::var(&ext, i + 1) - &Polynomial::constant(&ext, y[i].clone());
        let mut gens = lifted.clone();
        gens.push(&one - &(&t * &g));
        let stage = format!("saturation by {} - y{}", base.vars()[i], i + 1);
        let gb = buchberger_stage(&gens, budget, &stage)?;
        let part: Vec<Polynomial<K>> = gb
            .elements()
            .iter()
            .filter(|p| (0..=n).all(|v| !p.uses_var(v)))
            .map(|p| p.rename_into(&target, &back))
            .collect::<Result<_>>()?;
        let part = IdealSpec::new(&target, part)?;
        acc = Some(match acc {
            None => part,
            Some(a) if part.is_zero_ideal() || a.is_zero_ideal() => IdealSpec::new(&target, vec![])?,
            Some(a) => intersect(&a, &part, budget)?,
        });
    }
    Ok(acc.expect("at least one variable"))
}

/// Number of points cut out by `k` fixed pseudo-random hyperplanes, counted
/// without multiplicity; `None` if the slice is not zero-dimensional.
fn sliced_degree<K: Field>(vor: &IdealSpec<K>, k: usize, budget: Budget) -> Result<Option<usize>> {
    let ring = vor.ring();
    let field = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut gens = vor.generators().to_vec();
    for _ in 0..k {
        let mut h = Polynomial::constant(ring, field.from_i64(rng.gen_range(-97..=97)));
        for i in 0..ring.nvars() {
            h = &h + &Polynomial::var(ring, i).scale(&field.from_i64(rng.gen_range(-97..=97)));
        }
        gens.push(h);
    }
    let sliced = IdealSpec::new(ring, gens)?;
    let gb = sliced.groebner_stage(MonomialOrder::Lex, budget, "degree slice")?;
    if !gb.is_zero_dimensional() || gb.is_unit() {
        return Ok(None);
    }
    let rad = radical_zero_dimensional(&sliced, budget)?;
    Ok(Some(rad.groebner_stage(MonomialOrder::Lex, budget, "degree slice")?.quotient_degree()?))
}

/// Monic generator of the ideal obtained by substituting `u = y + lambda v`.
fn restrict_to_line<K: Field>(vor: &IdealSpec<K>, y: &[K::Elem], v: &[K::Elem], budget: Budget) -> Result<Polynomial<K>> {
    let line = PolyRing::new(vor.ring().field().clone(), &["lambda"], MonomialOrder::Lex)?;
    let lam = Polynomial::var(&line, 0);
    let images: Vec<Polynomial<K>> = y.iter().zip(v).map(|(a, b)| &Polynomial::constant(&line, a.clone()) + &lam.scale(b)).collect();
    let gens: Vec<Polynomial<K>> = vor.generators().iter().map(|g| g.substitute(&line, &images)).collect::<Result<_>>()?;
    let restricted = IdealSpec::new(&line, gens)?;
    if restricted.is_zero_ideal() {
        return Err(Error::NotZeroDimensional);
    }
    let gb = restricted.groebner_stage(MonomialOrder::Lex, budget, "normal line")?;
    Ok(gb.into_elements().remove(0))
}

/// Parses rational coordinates such as `"4"` or `"-1/2"`.
pub fn parse_point<S: AsRef<str>>(coords: &[S]) -> Result<Vec<BigRational>> {
    coords.iter().map(|c| crate::exactmath::parse_rational(c.as_ref())).collect()
}

/// Maps rational coordinates into another field.
pub fn point_in<K: Field>(field: &K, y: &[BigRational]) -> Result<Vec<K::Elem>> {
    y.iter().map(|c| field.from_rational(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cusp() -> IdealSpec<Rationals> {
        let r = PolyRing::new(Rationals, &["x1", "x2"], MonomialOrder::GrevLex).unwrap();
        IdealSpec::parse(&r, &["x1^3 - x2^2"]).unwrap()
    }

    fn pt(c: &[&str]) -> Vec<BigRational> {
        parse_point(c).unwrap()
    }

    #[test]
    fn jacobian_of_cusp() {
        let j = augmented_jacobian(&cusp()).unwrap();
        let shown: Vec<Vec<String>> = j.rows().iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
        assert_eq!(shown, vec![vec!["-x1 + u1", "-x2 + u2"], vec!["3*x1^2", "-2*x2"]]);
    }

    #[test]
    fn determinant_three_by_three() {
        let r = PolyRing::new(Rationals, &["a"], MonomialOrder::GrevLex).unwrap();
        let c = |v: i64| Polynomial::from_int(&r, v);
        let m = vec![vec![c(2), c(0), c(1)], vec![c(1), c(3), c(2)], vec![c(1), c(1), c(1)]];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(determinant(&m).is_zero());
        let a = Polynomial::var(&r, 0);
        let m = vec![vec![a.clone(), c(1)], vec![c(1), a.clone()]];
        assert_eq!(determinant(&m).to_string(), "a^2 - 1");
    }

    #[test]
    fn normal_space_of_cusp() {
        let b = normal_bundle_ideal(&cusp(), 1).unwrap();
        assert_eq!(b.minors.len(), 1);
        let ns = normal_space_ideal(&b, &pt(&["4", "8"]), false).unwrap();
        assert_eq!(ns.generators().len(), 1);
        assert_eq!(ns.generators()[0].to_string(), "u1 + 3*u2 - 28");
        assert!(matches!(normal_space_ideal(&b, &pt(&["1", "2"]), false), Err(Error::PointNotOnVariety { index: 0, .. })));
        assert!(matches!(normal_space_ideal(&b, &pt(&["0", "0"]), false), Err(Error::SingularPoint { rank: 0, expected: 1 })));
        assert!(normal_space_ideal(&b, &pt(&["0", "0"]), true).unwrap().is_zero_ideal());
        assert!(matches!(normal_bundle_ideal(&cusp(), 2), Err(Error::CodimensionOutOfRange { c: 2, max: 1 })));
    }

    #[test]
    fn critical_ideal_bookkeeping() {
        let b = normal_bundle_ideal(&cusp(), 1).unwrap();
        let y = pt(&["4", "8"]);
        let ns = normal_space_ideal(&b, &y, false).unwrap();
        let c = critical_ideal(&b, &y, &ns).unwrap();
        assert_eq!(c.generators().len(), 1 + 1 + 1 + 1);
        let sphere = parse_crate("x1^2 + x2^2 - 2*u1*x1 - 2*u2*x2 + 8*u1 + 16*u2 - 80", c.ring());
        assert_eq!(c.generators()[3], sphere);
    }

    fn parse_crate(s: &str, r: &Arc<PolyRing<Rationals>>) -> Polynomial<Rationals> {
        crate::exactmath::parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn twisted_cubic_has_one_maximal_minor() {
        let r = PolyRing::new(Rationals, &["x1", "x2", "x3"], MonomialOrder::GrevLex).unwrap();
        let tc = IdealSpec::parse(&r, &["x2 - x1^2", "x3 - x1*x2"]).unwrap();
        let b = normal_bundle_ideal(&tc, 2).unwrap();
        assert_eq!(b.minors.len(), 1);
        let ns = normal_space_ideal(&b, &pt(&["0", "0", "0"]), false).unwrap();
        // the tangent line at the origin is the x1-axis, so the normal plane is u1 = 0
        assert_eq!(ns.generators().len(), 1);
        assert_eq!(ns.generators()[0].to_string(), "u1");
    }

    #[test]
    fn cusp_pipeline_at_smooth_point() {
        let rep = voronoi_ideal(&cusp(), &pt(&["4", "8"]), &VoronoiOptions::default()).unwrap();
        assert!(rep.zero_dimensional);
        assert_eq!(rep.degree, Some(4));
        assert_eq!(rep.boundary_poly.as_ref().unwrap().total_degree(), Some(4));
        let comps = rep.components.as_ref().unwrap();
        assert_eq!(comps.len(), 3);
    }
}
