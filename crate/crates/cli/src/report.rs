//! JSON shapes written by the subcommands.

use algvor::degree_lab::HypersurfaceDegree;
use algvor::exactmath::{Field, RootInterval};
use algvor::groebner::IdealSpec;
use algvor::voronoi::{NormalLineBoundary, StageTiming, VoronoiReport};
use num_rational::BigRational;
use serde::Serialize;

pub const SCHEMA: u32 = 1;

fn gens<K: Field>(ideal: &IdealSpec<K>) -> Vec<String> {
    ideal.generators().iter().map(ToString::to_string).collect()
}

fn elems<K: Field>(field: &K, v: &[K::Elem]) -> Vec<String> {
    v.iter().map(|e| field.format(e)).collect()
}

fn rationals(v: &[BigRational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
pub struct ComponentJson {
    pub generators: Vec<String>,
    pub degree: usize,
    pub real: Option<bool>,
    pub point: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct NormalLineJson {
    pub direction: Vec<String>,
    pub polynomial: Vec<String>,
    pub roots: Vec<RootInterval>,
    pub boundary_points: Vec<Vec<String>>,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    /// `null` when the cell is unbounded along the normal line in both directions.
    pub reach: Option<f64>,
}

impl From<&NormalLineBoundary> for NormalLineJson {
    fn from(b: &NormalLineBoundary) -> Self {
        NormalLineJson {
            direction: rationals(&b.direction),
            polynomial: rationals(b.poly.coeffs()),
            roots: b.roots.clone(),
            boundary_points: b.boundary_points.iter().map(|p| rationals(p)).collect(),
            lower: b.lower,
            upper: b.upper,
            reach: b.reach,
        }
    }
}

#[derive(Serialize)]
pub struct TimingJson {
    pub stage: String,
    pub seconds: f64,
}

#[derive(Serialize)]
pub struct VoronoiJson {
    pub schema: u32,
    pub field: String,
    pub vars: Vec<String>,
    pub generators: Vec<String>,
    pub point: Vec<String>,
    pub codim: usize,
    pub singular: bool,
    pub normal_space: Vec<String>,
    pub critical_generators: usize,
    pub voronoi_ideal: Vec<String>,
    pub zero_dimensional: bool,
    pub degree: Option<usize>,
    pub raw_degree: Option<usize>,
    pub boundary_polynomial: Option<String>,
    pub components: Option<Vec<ComponentJson>>,
    pub normal_line: Option<NormalLineJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<TimingJson>>,
}

impl VoronoiJson {
    pub fn new<K: Field>(report: &VoronoiReport<K>, normal_line: Option<&NormalLineBoundary>, timings: bool) -> Self {
        let field = report.input.ring().field();
        let components = report.components.as_ref().map(|cs| {
            cs.iter()
                .map(|c| ComponentJson {
                    generators: gens(&c.ideal),
                    degree: c.degree,
                    real: c.real,
                    point: c.point.as_ref().map(|p| elems(field, p)),
                })
                .collect()
        });
        VoronoiJson {
            schema: SCHEMA,
            field: field.descriptor(),
            vars: report.input.ring().vars().to_vec(),
            generators: gens(&report.input),
            point: elems(field, &report.point),
            codim: report.codim,
            singular: report.singular,
            normal_space: gens(&report.normal_space),
            critical_generators: report.critical_generators,
            voronoi_ideal: gens(&report.voronoi_ideal),
            zero_dimensional: report.zero_dimensional,
            degree: report.degree,
            raw_degree: report.raw_degree,
            boundary_polynomial: report.boundary_poly.as_ref().map(ToString::to_string),
            components,
            normal_line: normal_line.map(NormalLineJson::from),
            timings: timings.then(|| report.timings.iter().map(|StageTiming { stage, seconds }| TimingJson { stage: stage.clone(), seconds: *seconds }).collect()),
        }
    }
}

#[derive(Serialize)]
pub struct ReplicaJson {
    pub seed: u64,
    pub prime: u32,
    pub degree: Option<usize>,
    pub attempts: u32,
    pub error: Option<String>,
}

#[derive(Serialize)]
pub struct DegreeJson {
    pub schema: u32,
    pub n: usize,
    pub d: u32,
    pub homogeneous: bool,
    pub seed: u64,
    pub prime: u32,
    pub degree: Option<usize>,
    pub stable: bool,
    pub replicas: Vec<ReplicaJson>,
    pub tabulated: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<i64>,
}

impl DegreeJson {
    pub fn new(h: &HypersurfaceDegree, tabulated: Option<i64>, formula: Option<i64>) -> Self {
        DegreeJson {
            schema: SCHEMA,
            n: h.n,
            d: h.d,
            homogeneous: h.homogeneous,
            seed: h.seed,
            prime: h.prime,
            degree: h.degree,
            stable: h.stable,
            replicas: h
                .replicas
                .iter()
                .map(|r| ReplicaJson { seed: r.seed, prime: r.prime, degree: r.degree, attempts: r.attempts, error: r.error.clone() })
                .collect(),
            tabulated,
            formula,
        }
    }
}

#[derive(Serialize)]
pub struct FormulaJson {
    pub schema: u32,
    pub formula: &'static str,
    pub inputs: serde_json::Map<String, serde_json::Value>,
    pub degree: i64,
}

#[derive(Serialize)]
pub struct LowrankJson {
    pub schema: u32,
    pub membership: algvor::lowrank::Membership,
    pub rank: usize,
    pub shape: (usize, usize),
    pub tol: f64,
}

#[derive(Serialize)]
pub struct SdpJson {
    pub schema: u32,
    pub status: algvor::sdp::SdpStatus,
    pub level: u32,
    pub lambda: Option<Vec<f64>>,
    pub margin: f64,
    pub iterations: usize,
}

/// Pretty JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
