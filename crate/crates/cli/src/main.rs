//! `cycavg`: evaluate, cross-check and plot cyclic averages of regular
//! polygons and Platonic solids.
//!
//! Exit status: 0 on success, 1 on usage errors, 2 on domain errors, 3 when
//! `verify` finds a failing identity.

mod plot;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cycavg_core::polygon::{locus_classify, power_sum_brute, power_sum_closed, recover_r2_l2};
use cycavg_core::rational_distance::icositetragon_report;
use cycavg_core::relations::{recover_spec_from_distances, solve_distances};
use cycavg_core::scalar::parse_rational;
use cycavg_core::solid::{recover_r2_l2_solid, solid_locus_classify, solid_mean_closed_sq, solid_power_sum_brute};
use cycavg_core::verify::{self, Scope};
use cycavg_core::{
    errata, Angle, DistanceMultiset, Error, PlanePlacement, PolygonSpec, QSqrt5, Rational, Scalar, SolidKind,
    SolidSpec, SpacePlacement, Turns,
};

#[derive(Parser, Debug)]
#[command(name = "cycavg", version, about = "Cyclic averages of regular polygons and Platonic solids")]
struct Cli {
    /// Arithmetic backend.
    #[arg(long, value_enum, env = "CYCAVG_BACKEND", default_value = "float", global = true)]
    backend: Backend,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Exact,
    Float,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form sum Σ d^{2m}.
    Eval(EvalArgs),
    /// Brute-force sum over the vertices.
    Oracle(OracleArgs),
    /// Level set of Σ d^{2m} = C.
    Locus(LocusArgs),
    /// All squared distances of a triangle, square or hexagon from R, L and d1².
    Solve(SolveArgs),
    /// R² and L² from averages, or R² from a full list of squared distances.
    Recover(RecoverArgs),
    /// Seeded sweep over every identity.
    Verify(VerifyArgs),
    /// The impossibility argument for the unit 24-gon.
    Rational24,
    /// CSV or SVG plot data.
    Plot(plot::PlotArgs),
    /// Known misprints, re-verified.
    Errata,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct FigureArgs {
    /// Regular polygon with this many vertices.
    #[arg(long)]
    pub polygon: Option<usize>,
    /// Platonic solid: tetrahedron, octahedron, cube, icosahedron, dodecahedron.
    #[arg(long)]
    pub solid: Option<SolidKind>,
}

pub enum Figure {
    Polygon(usize),
    Solid(SolidKind),
}

impl FigureArgs {
    pub fn figure(&self) -> Figure {
        match (self.polygon, self.solid) {
            (Some(n), _) => Figure::Polygon(n),
            (None, Some(k)) => Figure::Solid(k),
            (None, None) => unreachable!("clap enforces one figure"),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct AngleArgs {
    /// Polar angle of the point (radians unless --degrees or --turns).
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, conflicts_with = "turns")]
    pub degrees: bool,
    /// Read --alpha as a fraction of a full turn, e.g. 1/8.
    #[arg(long)]
    pub turns: bool,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    figure: FigureArgs,
    /// Circumradius.
    #[arg(long = "R")]
    r: String,
    /// Distance from the centre.
    #[arg(long = "L")]
    l: String,
    #[arg(long)]
    m: usize,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    figure: FigureArgs,
    /// Circumradius (polygons; solids when the coordinate scale is representable).
    #[arg(long = "R")]
    r: Option<String>,
    /// Coordinate scale of a solid (vertices such as (±c, ±c, ±c)).
    #[arg(long, conflicts_with = "r")]
    c: Option<String>,
    /// Distance from the centre (polygons).
    #[arg(long = "L")]
    l: Option<String>,
    #[command(flatten)]
    angle: AngleArgs,
    /// Point x,y,z (solids).
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    #[arg(long)]
    m: usize,
}

#[derive(Args, Debug)]
struct LocusArgs {
    #[command(flatten)]
    figure: FigureArgs,
    #[arg(long = "R")]
    r: String,
    #[arg(long)]
    m: usize,
    /// Level of the sum.
    #[arg(long = "C")]
    c: String,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    polygon: usize,
    #[arg(long = "R")]
    r: String,
    #[arg(long = "L")]
    l: String,
    /// Squared distance to the first vertex.
    #[arg(long)]
    d1sq: String,
}

#[derive(Args, Debug)]
struct RecoverArgs {
    #[command(flatten)]
    figure: FigureArgs,
    /// Mean of d².
    #[arg(long, requires = "s4", conflicts_with = "dsq")]
    s2: Option<String>,
    /// Mean of d⁴.
    #[arg(long, requires = "s2")]
    s4: Option<String>,
    /// Comma-separated squared distances d1²,…,dn² (polygons with n = 3, 4, 6).
    #[arg(long)]
    dsq: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    scope: Scope,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
}

/// Failure of a command: usage problems exit 1, domain errors exit 2.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

pub type CmdResult<T> = std::result::Result<T, Failure>;

pub fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// A number in the selected backend: floats accept anything `f64` parses,
/// exact backends need a rational literal.
pub fn num<S: Scalar>(flag: &str, s: &str) -> CmdResult<S> {
    if S::EXACT {
        return Ok(S::from_rational(&parse_rational(s)?));
    }
    if let Ok(v) = s.trim().parse::<f64>() {
        if v.is_finite() {
            return S::from_f64(v).ok_or_else(|| usage(format!("{flag}: invalid number {s:?}")));
        }
    }
    match parse_rational(s) {
        Ok(r) => Ok(S::from_rational(&r)),
        Err(_) => Err(usage(format!("{flag}: expected a number, got {s:?}"))),
    }
}

fn parse_turns(s: &str) -> CmdResult<Turns> {
    let r = parse_rational(s)?;
    let (n, d) = (r.numer().try_into(), r.denom().try_into());
    match (n, d) {
        (Ok(n), Ok(d)) => Ok(Turns::new(n, d)),
        _ => Err(usage(format!("--alpha: {s:?} is too large"))),
    }
}

pub fn angle(a: &AngleArgs, exact: bool) -> CmdResult<Angle> {
    if a.turns {
        return Ok(Angle::Turns(parse_turns(&a.alpha)?));
    }
    if exact {
        let r = parse_rational(&a.alpha)?;
        if a.degrees {
            let t = r / Rational::from_integer(360.into());
            return Ok(Angle::Turns(parse_turns(&t.to_string())?));
        }
        if num_traits::Zero::is_zero(&r) {
            return Ok(Angle::zero());
        }
        return Err(Failure::Domain(Error::NotExact("exact backend needs the angle in --turns or --degrees")));
    }
    let v = num::<f64>("--alpha", &a.alpha)?;
    Ok(if a.degrees { Angle::from_degrees(v) } else { Angle::Radians(v) })
}

fn list<S: Scalar>(flag: &str, s: &str) -> CmdResult<Vec<S>> {
    s.split(',').map(|x| num::<S>(flag, x)).collect()
}

fn check_solid_m(kind: SolidKind, m: usize) -> CmdResult<()> {
    let max = kind.max_power_index();
    if m < 1 || m > max {
        return Err(Failure::Domain(Error::OutOfRange { m, min: 1, max }));
    }
    Ok(())
}

fn eval<S: Scalar>(a: &EvalArgs) -> CmdResult<String> {
    let r: S = num("--R", &a.r)?;
    let l: S = num("--L", &a.l)?;
    let v = match a.figure.figure() {
        Figure::Polygon(n) => power_sum_closed(&PolygonSpec::new(n, r)?, a.m, &l)?,
        Figure::Solid(kind) => {
            check_solid_m(kind, a.m)?;
            if r <= S::zero() {
                return Err(Error::InvalidSpec("circumradius must be positive".into()).into());
            }
            if l.is_negative() {
                return Err(Error::Negative("L").into());
            }
            S::from_int(kind.vertex_count() as i64) * solid_mean_closed_sq(a.m, &r.square(), &l.square())?
        }
    };
    Ok(v.render())
}

fn solid_spec<S: Scalar>(kind: SolidKind, r: Option<&str>, c: Option<&str>) -> CmdResult<SolidSpec<S>> {
    match (r, c) {
        (_, Some(c)) => Ok(SolidSpec::new(kind, num::<S>("--c", c)?)?),
        (Some(r), None) => Ok(SolidSpec::from_circumradius_sq(kind, num::<S>("--R", r)?.square())?),
        (None, None) => Err(usage("solids need --R or --c")),
    }
}

fn oracle_solid<S: Scalar>(a: &OracleArgs, kind: SolidKind) -> CmdResult<String> {
    let spec = solid_spec::<S>(kind, a.r.as_deref(), a.c.as_deref())?;
    let p = a.point.as_deref().ok_or_else(|| usage("solids need --point x,y,z"))?;
    let v: Vec<S> = list("--point", p)?;
    let [x, y, z]: [S; 3] = v.try_into().map_err(|_| usage("--point needs three coordinates"))?;
    if a.m < 1 {
        return Err(Error::OutOfRange { m: a.m, min: 1, max: usize::MAX }.into());
    }
    Ok(solid_power_sum_brute(&spec, a.m, &SpacePlacement::new(x, y, z))?.render())
}

fn oracle<S: Scalar>(a: &OracleArgs) -> CmdResult<String> {
    match a.figure.figure() {
        Figure::Polygon(n) => {
            let r: S = num("--R", a.r.as_deref().ok_or_else(|| usage("polygons need --R"))?)?;
            let l: S = num("--L", a.l.as_deref().ok_or_else(|| usage("polygons need --L"))?)?;
            let p = PlanePlacement::new(l, angle(&a.angle, S::EXACT)?)?;
            Ok(power_sum_brute(&PolygonSpec::new(n, r)?, a.m, &p)?.render())
        }
        Figure::Solid(kind) => oracle_solid::<S>(a, kind),
    }
}

fn locus<S: Scalar>(a: &LocusArgs) -> CmdResult<String> {
    let r: S = num("--R", &a.r)?;
    let c: S = num("--C", &a.c)?;
    let class = match a.figure.figure() {
        Figure::Polygon(n) => locus_classify(&PolygonSpec::new(n, r)?, a.m, &c)?,
        Figure::Solid(kind) => solid_locus_classify(&SolidSpec::from_circumradius_sq(kind, r.square())?, a.m, &c)?,
    };
    Ok(class.to_string())
}

fn join<S: Scalar>(v: &[S]) -> String {
    v.iter().map(Scalar::render).collect::<Vec<_>>().join(", ")
}

fn solve<S: Scalar>(a: &SolveArgs) -> CmdResult<String> {
    let r: S = num("--R", &a.r)?;
    let l: S = num("--L", &a.l)?;
    let d1: S = num("--d1sq", &a.d1sq)?;
    let b = solve_distances(a.polygon, &r, &l, &d1)?;
    Ok(format!("plus:  {}\nminus: {}", join(b.plus.as_slice()), join(b.minus.as_slice())))
}

fn recover<S: Scalar>(a: &RecoverArgs) -> CmdResult<String> {
    if let Some(d) = &a.dsq {
        let Figure::Polygon(n) = a.figure.figure() else {
            return Err(usage("--dsq needs --polygon"));
        };
        let d = DistanceMultiset::new(list::<S>("--dsq", d)?)?;
        let b = recover_spec_from_distances(n, &d)?;
        return Ok(format!("R^2 = {} or {}", b.plus.render(), b.minus.render()));
    }
    let (Some(s2), Some(s4)) = (&a.s2, &a.s4) else {
        return Err(usage("recover needs --s2 and --s4, or --dsq"));
    };
    let (s2, s4): (S, S) = (num("--s2", s2)?, num("--s4", s4)?);
    let b = match a.figure.figure() {
        Figure::Polygon(_) => recover_r2_l2(&s2, &s4)?,
        Figure::Solid(_) => recover_r2_l2_solid(&s2, &s4)?,
    };
    Ok(format!(
        "{{R^2, L^2}} = {{{}, {}}}\nR and L enter symmetrically; the larger value is listed first",
        b.plus.render(),
        b.minus.render()
    ))
}

fn with_backend(
    backend: Backend,
    exact: impl FnOnce() -> CmdResult<String>,
    float: impl FnOnce() -> CmdResult<String>,
) -> CmdResult<String> {
    match backend {
        Backend::Exact => exact(),
        Backend::Float => float(),
    }
}

fn run(cli: &Cli) -> CmdResult<(String, bool)> {
    let b = cli.backend;
    let out = match &cli.command {
        Command::Eval(a) => with_backend(b, || eval::<Rational>(a), || eval::<f64>(a))?,
        Command::Oracle(a) => match (b, a.figure.figure()) {
            (Backend::Exact, Figure::Solid(k)) if k.needs_golden_ratio() => oracle_solid::<QSqrt5>(a, k)?,
            _ => with_backend(b, || oracle::<Rational>(a), || oracle::<f64>(a))?,
        },
        Command::Locus(a) => with_backend(b, || locus::<Rational>(a), || locus::<f64>(a))?,
        Command::Solve(a) => with_backend(b, || solve::<Rational>(a), || solve::<f64>(a))?,
        Command::Recover(a) => with_backend(b, || recover::<Rational>(a), || recover::<f64>(a))?,
        Command::Verify(a) => {
            let report = verify::run(a.scope, a.seed);
            return Ok((report.render(), report.all_passed()));
        }
        Command::Rational24 => icositetragon_report()?.text,
        Command::Plot(a) => plot::run(a)?,
        Command::Errata => errata::errata_table()?,
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `cycavg --help` for the grammar");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("domain error: {e}");
            ExitCode::from(2)
        }
    }
}
