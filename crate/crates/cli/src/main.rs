//! `algvor`: Voronoi cells of algebraic varieties from the command line.
//!
//! Exit codes: 0 success (member, inside), 1 input error, 2 budget
//! exhausted, 3 non-member or outside, 4 inconclusive or on the boundary.

mod contour;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use algvor::degree_lab::formulas::{
    formula_cone, formula_curve, formula_surface, lowrank_voronoi_degree, plane_curve_genus, surface_in_p3, veronese_surface,
};
use algvor::degree_lab::{conjecture_hypersurface, default_primes, hypersurface_degree, is_desk_scale, tabulated};
use algvor::exactmath::field::rational_to_f64;
use algvor::exactmath::{parse_rational, DEFAULT_PRIME};
use algvor::groebner::{AnyIdeal, Budget, IdealFile};
use algvor::linalg::DenseMatrix;
use algvor::lowrank::{cell_membership, eckart_young_truncate, Membership};
use algvor::sdp::{leveld_membership, level1_membership, SdpStatus};
use algvor::voronoi::{boundary_on_normal_line, parse_point, point_in, voronoi_ideal, voronoi_pipeline, VoronoiOptions};
use algvor::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use report::{render, DegreeJson, FormulaJson, LowrankJson, SdpJson, VoronoiJson, SCHEMA};

#[derive(Parser, Debug)]
#[command(name = "algvor", version, about = "Voronoi cells of real algebraic varieties")]
struct RunConfig {
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Voronoi ideal, boundary and components at a point of a variety.
    Voronoi(VoronoiArgs),
    /// Voronoi degree of a random hypersurface over a prime field.
    Degree(DegreeArgs),
    /// Closed-form Voronoi degrees.
    #[command(subcommand)]
    Formula(FormulaCmd),
    /// Membership in the Voronoi cell of a low-rank matrix.
    Lowrank(LowrankArgs),
    /// Spectrahedral certificate that a point lies in a Voronoi cell.
    SdpMember(SdpArgs),
    /// CSV sign grid of a bivariate polynomial.
    Contour(ContourArgs),
}

#[derive(Args, Debug)]
struct VoronoiArgs {
    /// Ideal file (JSON with `vars`, `gens`, optional `field` and `codim`).
    ideal: PathBuf,
    /// Comma-separated coordinates of the point, e.g. `4,8` or `1/2,0`.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[arg(long)]
    codim: Option<usize>,
    #[arg(long)]
    allow_singular: bool,
    /// Cap on S-pair reductions per Groebner basis (default: `VORONOI_BUDGET` or 10^6).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Include wall-clock stage timings (makes output run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct DegreeArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    homogeneous: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=64))]
    replicas: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Also print the conjectured closed-form value.
    #[arg(long)]
    formula: bool,
    /// Run sizes outside the desk-scale whitelist.
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand, Debug)]
enum FormulaCmd {
    /// Curve of degree d and genus g in general position.
    Curve {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
    },
    /// Smooth plane curve of degree d.
    PlaneCurve {
        #[arg(long)]
        d: i64,
    },
    /// Surface with degree d, Euler characteristic chi and quadric-section genus g2.
    Surface {
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        g2: i64,
    },
    /// Smooth surface of degree d in 3-space.
    SurfaceP3 {
        #[arg(long)]
        d: i64,
    },
    /// Veronese surface of order e.
    Veronese {
        #[arg(long)]
        e: i64,
    },
    /// Affine cone over a curve of degree d and genus g.
    Cone {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
    },
    /// General hypersurface of degree d in n-space.
    Hypersurface {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        homogeneous: bool,
    },
    /// Matrices of size m x n and rank at most r.
    Lowrank {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Args, Debug)]
struct LowrankArgs {
    /// Matrix as a JSON array of rows, or a path to such a file.
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    /// Rank-r center; defaults to the best rank-r approximation of U.
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value_t = algvor::lowrank::DEFAULT_TOL)]
    tol: f64,
}

#[derive(Args, Debug)]
struct SdpArgs {
    ideal: PathBuf,
    /// Point on the variety.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    /// Candidate point of the Voronoi cell.
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    #[arg(long, default_value_t = 1)]
    level: u32,
    #[arg(long, default_value_t = algvor::sdp::DEFAULT_TOL)]
    tol: f64,
}

#[derive(Args, Debug)]
struct ContourArgs {
    /// Polynomial in the two variables.
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, default_value = "u1,u2")]
    vars: String,
    /// `a_min,a_max,b_min,b_max`.
    #[arg(long, allow_hyphen_values = true, default_value = "-1,1,-1,1")]
    window: String,
    #[arg(long, default_value_t = 200)]
    resolution: usize,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::BudgetExhausted { .. }) { 2 } else { 1 };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

/// Report text and exit code.
type Outcome = Result<(String, u8), Failure>;

fn budget(explicit: Option<u64>) -> Budget {
    explicit.map(Budget::new).unwrap_or_else(Budget::from_env)
}

fn read_ideal(path: &PathBuf) -> Result<IdealFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    Ok(IdealFile::from_json(&text)?)
}

fn split_coords(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).collect()
}

fn cmd_voronoi(args: &VoronoiArgs) -> Outcome {
    let file = read_ideal(&args.ideal)?;
    let y = parse_point(&split_coords(&args.point))?;
    let opts = VoronoiOptions { codim: args.codim, allow_singular: args.allow_singular, budget: budget(args.budget) };
    let json = match file.build()? {
        AnyIdeal::Rational(ideal) => {
            let report = voronoi_ideal(&ideal, &y, &opts)?;
            let line = match report.normal_vector {
                Some(_) if report.boundary_poly.is_some() => Some(boundary_on_normal_line(&report)?),
                _ => None,
            };
            VoronoiJson::new(&report, line.as_ref(), args.timings)
        }
        AnyIdeal::Modular(ideal) => {
            let yp = point_in(ideal.ring().field(), &y)?;
            let report = voronoi_pipeline(&ideal, &yp, &opts)?;
            VoronoiJson::new(&report, None, args.timings)
        }
    };
    Ok((render(&json), 0))
}

fn cmd_degree(args: &DegreeArgs) -> Outcome {
    if args.n == 0 || args.d == 0 {
        return Err(input_error("n and d must be positive"));
    }
    let d = i64::from(args.d);
    if !args.force && !is_desk_scale(args.n, d, args.homogeneous) {
        return Err(input_error(format!(
            "(n={}, d={}) is outside the desk-scale whitelist and may take very long; pass --force to run it anyway",
            args.n, args.d
        )));
    }
    let h = hypersurface_degree(
        args.n as usize,
        args.d,
        args.homogeneous,
        args.seed,
        &default_primes(args.prime),
        args.replicas as usize,
        budget(args.budget),
    )?;
    if h.degree.is_none() {
        if let Some(msg) = h.replicas.iter().find_map(|r| r.error.as_deref()) {
            if msg.starts_with("budget exhausted") {
                eprintln!("error: {msg}");
                return Ok((render(&DegreeJson::new(&h, tabulated(args.n, d, args.homogeneous), None)), 2));
            }
        }
    }
    let formula = if args.formula && d >= 2 { Some(conjecture_hypersurface(args.n, d, args.homogeneous)?) } else { None };
    Ok((render(&DegreeJson::new(&h, tabulated(args.n, d, args.homogeneous), formula)), 0))
}

fn cmd_formula(cmd: &FormulaCmd) -> Outcome {
    let (name, inputs, degree): (&'static str, Value, i64) = match *cmd {
        FormulaCmd::Curve { d, g } => ("curve", json!({"d": d, "g": g}), formula_curve(d, g)),
        FormulaCmd::PlaneCurve { d } => {
            let g = plane_curve_genus(d);
            ("curve", json!({"d": d, "g": g}), formula_curve(d, g))
        }
        FormulaCmd::Surface { d, chi, g2 } => ("surface", json!({"d": d, "chi": chi, "g2": g2}), formula_surface(d, chi, g2)),
        FormulaCmd::SurfaceP3 { d } => {
            let s = surface_in_p3(d);
            ("surface", json!({"d": s.d, "chi": s.chi, "g2": s.g2}), formula_surface(s.d, s.chi, s.g2))
        }
        FormulaCmd::Veronese { e } => {
            let s = veronese_surface(e);
            ("surface", json!({"d": s.d, "chi": s.chi, "g2": s.g2}), formula_surface(s.d, s.chi, s.g2))
        }
        FormulaCmd::Cone { d, g } => ("cone", json!({"d": d, "g": g}), formula_cone(d, g)),
        FormulaCmd::Hypersurface { n, d, homogeneous } => {
            ("hypersurface", json!({"n": n, "d": d, "homogeneous": homogeneous}), conjecture_hypersurface(n, d, homogeneous)?)
        }
        FormulaCmd::Lowrank { m, n, r } => {
            let v = lowrank_voronoi_degree(m, n, r)?;
            ("lowrank", json!({"m": m, "n": n, "r": r}), i64::try_from(v).map_err(|_| input_error("overflow"))?)
        }
    };
    let Value::Object(inputs) = inputs else { unreachable!("inputs are objects") };
    Ok((render(&FormulaJson { schema: SCHEMA, formula: name, inputs, degree }), 0))
}

fn read_matrix(arg: &str) -> Result<DenseMatrix, Failure> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| input_error(format!("cannot read {arg}: {e}")))?
    };
    let rows: Vec<Vec<f64>> = serde_json::from_str(&text).map_err(|e| input_error(format!("invalid matrix: {e}")))?;
    Ok(DenseMatrix::from_rows(&rows)?)
}

fn cmd_lowrank(args: &LowrankArgs) -> Outcome {
    let u = read_matrix(&args.u)?;
    let v = match &args.v {
        Some(v) => read_matrix(v)?,
        None => eckart_young_truncate(&u, args.r)?,
    };
    let membership = cell_membership(&u, &v, args.r, args.tol)?;
    let code = match membership {
        Membership::Inside => 0,
        Membership::Outside => 3,
        Membership::Boundary => 4,
    };
    Ok((render(&LowrankJson { schema: SCHEMA, membership, rank: args.r, shape: u.shape(), tol: args.tol }), code))
}

fn parse_reals(text: &str) -> Result<Vec<f64>, Failure> {
    split_coords(text)
        .into_iter()
        .map(|c| match c.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => parse_rational(c).map(|q| rational_to_f64(&q)).map_err(Failure::from),
        })
        .collect()
}

fn cmd_sdp(args: &SdpArgs) -> Outcome {
    let file = read_ideal(&args.ideal)?;
    let AnyIdeal::Rational(ideal) = file.build()? else {
        return Err(input_error("spectrahedral certificates need an ideal over Q"));
    };
    let y = parse_reals(&args.point)?;
    let u = parse_reals(&args.u)?;
    let result = match args.level {
        0 => return Err(input_error("level must be positive")),
        1 => level1_membership(ideal.generators(), &y, &u, args.tol)?,
        d => leveld_membership(ideal.generators(), &y, &u, d, args.tol)?,
    };
    let code = match result.status {
        SdpStatus::Member => 0,
        SdpStatus::NonMember => 3,
        SdpStatus::Inconclusive => 4,
    };
    let json = SdpJson {
        schema: SCHEMA,
        status: result.status,
        level: result.level,
        lambda: result.lmi.lambda,
        margin: result.lmi.margin,
        iterations: result.lmi.iterations,
    };
    Ok((render(&json), code))
}

fn cmd_contour(args: &ContourArgs) -> Outcome {
    let vars: Vec<String> = split_coords(&args.vars).into_iter().map(String::from).collect();
    let f = contour::parse_bivariate(&args.poly, &vars)?;
    let window = contour::Window::parse(&args.window)?;
    let cells = contour::sign_grid(&f, &window, args.resolution)?;
    Ok((contour::render_csv(&cells), 0))
}

fn run(config: &RunConfig) -> Outcome {
    match &config.command {
        Command::Voronoi(a) => cmd_voronoi(a),
        Command::Degree(a) => cmd_degree(a),
        Command::Formula(f) => cmd_formula(f),
        Command::Lowrank(a) => cmd_lowrank(a),
        Command::SdpMember(a) => cmd_sdp(a),
        Command::Contour(a) => cmd_contour(a),
    }
}

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok((text, code)) => {
            let written = match &config.output {
                Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::from(code),
                Err(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(1)
                }
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
