//! Plot data: CSV samples and standalone SVG documents (1000×1000 viewport).

use std::f64::consts::TAU;
use std::fmt::Write as _;

use clap::{Args, ValueEnum};
use cycavg_core::polygon::{locus_classify, power_sum_brute};
use cycavg_core::scalar::format_g12;
use cycavg_core::solid::{solid_locus_classify, solid_power_sum_brute};
use cycavg_core::{Angle, LocusClass, PlanePlacement, PolygonSpec, SolidSpec, SpacePlacement};

use crate::{num, usage, CmdResult, Figure, FigureArgs, Output};

const VIEW: f64 = 1000.0;
const MARGIN: f64 = 50.0;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotKind {
    /// The level set Σ d^{2m} = C drawn with the figure.
    LocusCircle,
    /// Σ d^{2m} against the polar angle α at fixed L.
    PowersumVsAlpha,
    /// Σ d^{2m} against L at fixed α.
    PowersumVsL,
}

#[derive(Args, Debug)]
pub struct PlotArgs {
    #[arg(value_enum)]
    kind: PlotKind,
    #[command(flatten)]
    figure: FigureArgs,
    #[arg(long = "R", default_value = "1")]
    r: String,
    #[arg(long = "L", default_value = "1")]
    l: String,
    #[arg(long)]
    m: usize,
    /// Level for locus-circle.
    #[arg(long = "C")]
    c: Option<String>,
    /// Polar angle in radians, for powersum-vs-l.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    alpha: String,
    /// Largest L for powersum-vs-l (default 2R).
    #[arg(long)]
    lmax: Option<String>,
    #[arg(long, default_value_t = 512)]
    samples: usize,
    /// Defaults to svg for locus-circle and csv otherwise.
    #[arg(long, value_enum)]
    output: Option<Output>,
}

fn csv(header: &str, rows: &[(f64, f64)]) -> String {
    let mut t = format!("{header}\n");
    for (x, y) in rows {
        let _ = writeln!(t, "{x},{y}");
    }
    t
}

fn svg_open() -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{VIEW}\" height=\"{VIEW}\" viewBox=\"0 0 {VIEW} {VIEW}\">\n\
         <rect x=\"0\" y=\"0\" width=\"{VIEW}\" height=\"{VIEW}\" fill=\"white\"/>\n"
    )
}

fn curve_svg(title: &str, x_label: &str, rows: &[(f64, f64)]) -> String {
    let (x0, x1) = rows.iter().fold((f64::MAX, f64::MIN), |(a, b), r| (a.min(r.0), b.max(r.0)));
    let (y0, y1) = rows.iter().fold((f64::MAX, f64::MIN), |(a, b), r| (a.min(r.1), b.max(r.1)));
    let span = |a: f64, b: f64| if b - a > 1e-12 * b.abs().max(1.0) { b - a } else { 0.0 };
    let (sx, sy) = (span(x0, x1), span(y0, y1));
    let inner = VIEW - 2.0 * MARGIN;
    let px = |x: f64| if sx == 0.0 { VIEW / 2.0 } else { MARGIN + (x - x0) / sx * inner };
    let py = |y: f64| if sy == 0.0 { VIEW / 2.0 } else { VIEW - MARGIN - (y - y0) / sy * inner };
    let mut t = svg_open();
    let _ = writeln!(
        t,
        "<path d=\"M {MARGIN} {b} H {r} M {MARGIN} {b} V {MARGIN}\" stroke=\"black\" fill=\"none\"/>",
        b = VIEW - MARGIN,
        r = VIEW - MARGIN
    );
    let points: Vec<String> = rows.iter().map(|&(x, y)| format!("{:.3},{:.3}", px(x), py(y))).collect();
    let _ = writeln!(t, "<polyline points=\"{}\" fill=\"none\" stroke=\"steelblue\"/>", points.join(" "));
    let _ = writeln!(t, "<text x=\"{MARGIN}\" y=\"30\" font-size=\"20\">{title}</text>");
    let _ = writeln!(
        t,
        "<text x=\"{}\" y=\"{}\" font-size=\"16\" text-anchor=\"end\">{x_label} ∈ [{}, {}], sum ∈ [{}, {}]</text>",
        VIEW - MARGIN,
        VIEW - 15.0,
        format_g12(x0),
        format_g12(x1),
        format_g12(y0),
        format_g12(y1)
    );
    t.push_str("</svg>\n");
    t
}

fn vertices(fig: &Figure, r: f64) -> CmdResult<Vec<(f64, f64)>> {
    Ok(match fig {
        Figure::Polygon(n) => (0..*n)
            .map(|k| {
                let t = TAU * k as f64 / *n as f64;
                (r * t.cos(), r * t.sin())
            })
            .collect(),
        // projection onto the xy plane
        Figure::Solid(kind) => {
            let spec = SolidSpec::from_circumradius_sq(*kind, r * r)?;
            cycavg_core::solid_vertices(&spec).iter().map(|v| (v[0], v[1])).collect()
        }
    })
}

fn locus_svg(fig: &Figure, r: f64, class: &LocusClass) -> CmdResult<String> {
    let radius = match class {
        LocusClass::Circle { radius } | LocusClass::Sphere { radius } => Some(*radius),
        _ => None,
    };
    let scale = (VIEW / 2.0 - MARGIN) / r.max(radius.unwrap_or(0.0));
    let c = VIEW / 2.0;
    let map = |(x, y): (f64, f64)| (c + x * scale, c - y * scale);
    let mut t = svg_open();
    let vs = vertices(fig, r)?;
    if let Figure::Polygon(_) = fig {
        let pts: Vec<String> = vs.iter().map(|&v| map(v)).map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
        let _ = writeln!(t, "<polygon class=\"figure\" points=\"{}\" fill=\"none\" stroke=\"black\"/>", pts.join(" "));
    }
    for v in &vs {
        let (x, y) = map(*v);
        let _ = writeln!(t, "<circle class=\"vertex\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"black\"/>");
    }
    let _ = writeln!(t, "<circle class=\"centroid\" cx=\"{c}\" cy=\"{c}\" r=\"3\" fill=\"gray\"/>");
    match radius {
        Some(l) => {
            let _ = writeln!(
                t,
                "<circle class=\"locus\" data-radius=\"{}\" cx=\"{c}\" cy=\"{c}\" r=\"{:.3}\" fill=\"none\" stroke=\"crimson\"/>",
                format_g12(l),
                l * scale
            );
        }
        None => {
            let _ = writeln!(t, "<text x=\"{MARGIN}\" y=\"30\" font-size=\"20\">{class}</text>");
        }
    }
    t.push_str("</svg>\n");
    Ok(t)
}

pub fn run(a: &PlotArgs) -> CmdResult<String> {
    if a.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let fig = a.figure.figure();
    let r: f64 = num("--R", &a.r)?;
    let m = a.m;
    let output = a.output.unwrap_or(match a.kind {
        PlotKind::LocusCircle => Output::Svg,
        _ => Output::Csv,
    });
    let step = |k: usize, hi: f64| hi * k as f64 / (a.samples - 1) as f64;
    match a.kind {
        PlotKind::LocusCircle => {
            let c: f64 = num("--C", a.c.as_deref().ok_or_else(|| usage("locus-circle needs --C"))?)?;
            let class = match fig {
                Figure::Polygon(n) => locus_classify(&PolygonSpec::new(n, r)?, m, &c)?,
                Figure::Solid(k) => solid_locus_classify(&SolidSpec::from_circumradius_sq(k, r * r)?, m, &c)?,
            };
            match output {
                Output::Svg => locus_svg(&fig, r, &class),
                Output::Csv => {
                    let rows: Vec<(f64, f64)> = match class {
                        LocusClass::Circle { radius } | LocusClass::Sphere { radius } => (0..a.samples)
                            .map(|k| {
                                let t = TAU * k as f64 / a.samples as f64;
                                (radius * t.cos(), radius * t.sin())
                            })
                            .collect(),
                        LocusClass::Centroid => vec![(0.0, 0.0)],
                        LocusClass::Empty => vec![],
                    };
                    Ok(csv("x,y", &rows))
                }
                Output::Text => Ok(class.to_string()),
            }
        }
        PlotKind::PowersumVsAlpha => {
            let Figure::Polygon(n) = fig else {
                return Err(usage("powersum-vs-alpha needs --polygon"));
            };
            let l: f64 = num("--L", &a.l)?;
            let spec = PolygonSpec::new(n, r)?;
            let rows = (0..a.samples)
                .map(|k| {
                    let alpha = TAU * k as f64 / a.samples as f64;
                    let p = PlanePlacement::new(l, Angle::Radians(alpha))?;
                    Ok((alpha, power_sum_brute(&spec, m, &p)?))
                })
                .collect::<CmdResult<Vec<_>>>()?;
            Ok(match output {
                Output::Svg => curve_svg(&format!("Σ d^{} over P{n}, R = {}, L = {}", 2 * m, a.r, a.l), "α", &rows),
                _ => csv("alpha,value", &rows),
            })
        }
        PlotKind::PowersumVsL => {
            let lmax: f64 = match &a.lmax {
                Some(s) => num("--lmax", s)?,
                None => 2.0 * r,
            };
            let alpha: f64 = num("--alpha", &a.alpha)?;
            let rows = (0..a.samples)
                .map(|k| {
                    let l = step(k, lmax);
                    let v = match fig {
                        Figure::Polygon(n) => power_sum_brute(
                            &PolygonSpec::new(n, r)?,
                            m,
                            &PlanePlacement::new(l, Angle::Radians(alpha))?,
                        )?,
                        Figure::Solid(kind) => {
                            let spec = SolidSpec::from_circumradius_sq(kind, r * r)?;
                            let p = SpacePlacement::new(l * alpha.cos(), l * alpha.sin(), 0.0);
                            solid_power_sum_brute(&spec, m, &p)?
                        }
                    };
                    Ok((l, v))
                })
                .collect::<CmdResult<Vec<_>>>()?;
            Ok(match output {
                Output::Svg => curve_svg(&format!("Σ d^{} against L, R = {}", 2 * m, a.r), "L", &rows),
                _ => csv("L,value", &rows),
            })
        }
    }
}
