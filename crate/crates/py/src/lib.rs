//! Python bindings: `import cycavg`.

use cycavg_core::polygon::{locus_classify, power_sum_brute, power_sum_closed, power_sum_closed_sq, recover_r2_l2};
use cycavg_core::rational_distance::icositetragon_report;
use cycavg_core::scalar::parse_rational;
use cycavg_core::solid::{solid_power_sum_brute, solid_power_sum_closed};
use cycavg_core::verify::{self, Scope};
use cycavg_core::{Angle, PlanePlacement, PolygonSpec, SolidKind, SolidSpec, SpacePlacement};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn solid_kind(name: &str) -> PyResult<SolidKind> {
    name.parse().map_err(err)
}

/// Closed-form Σ d^{2m} for a regular n-gon.
#[pyfunction]
fn power_sum(n: usize, r: f64, l: f64, m: usize) -> PyResult<f64> {
    power_sum_closed(&PolygonSpec::new(n, r).map_err(err)?, m, &l).map_err(err)
}

/// Σ d^{2m} summed over the vertices.
#[pyfunction]
#[pyo3(signature = (n, r, l, m, alpha = 0.0))]
fn power_sum_vertices(n: usize, r: f64, l: f64, m: usize, alpha: f64) -> PyResult<f64> {
    let spec = PolygonSpec::new(n, r).map_err(err)?;
    let p = PlanePlacement::new(l, Angle::Radians(alpha)).map_err(err)?;
    power_sum_brute(&spec, m, &p).map_err(err)
}

/// Exact closed form from squared radii given as strings such as "9/4";
/// returns the result as a string.
#[pyfunction]
fn power_sum_exact(n: usize, r_sq: &str, l_sq: &str, m: usize) -> PyResult<String> {
    let (r2, l2) = (parse_rational(r_sq).map_err(err)?, parse_rational(l_sq).map_err(err)?);
    Ok(power_sum_closed_sq(n, m, &r2, &l2).map_err(err)?.to_string())
}

#[pyfunction]
fn solid_power_sum(kind: &str, c: f64, point: (f64, f64, f64), m: usize) -> PyResult<(f64, f64)> {
    let spec = SolidSpec::new(solid_kind(kind)?, c).map_err(err)?;
    let p = SpacePlacement::new(point.0, point.1, point.2);
    let closed = solid_power_sum_closed(&spec, m, &p.l_sq()).map_err(err)?;
    let brute = solid_power_sum_brute(&spec, m, &p).map_err(err)?;
    Ok((closed, brute))
}

/// Level set of Σ d^{2m} = C: "empty", "centroid" or "circle of radius …".
#[pyfunction]
fn locus(n: usize, r: f64, m: usize, c: f64) -> PyResult<String> {
    Ok(locus_classify(&PolygonSpec::new(n, r).map_err(err)?, m, &c).map_err(err)?.to_string())
}

/// `(R², L²)` with the larger value first.
#[pyfunction]
fn recover(s2: f64, s4: f64) -> PyResult<(f64, f64)> {
    let b = recover_r2_l2(&s2, &s4).map_err(err)?;
    Ok((b.plus, b.minus))
}

#[pyfunction]
fn rational24() -> PyResult<String> {
    Ok(icositetragon_report().map_err(err)?.text)
}

/// `(all_passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (scope = "all", seed = verify::DEFAULT_SEED))]
fn run_verify(scope: &str, seed: u64) -> PyResult<(bool, String)> {
    let scope: Scope = scope.parse().map_err(err)?;
    let r = verify::run(scope, seed);
    Ok((r.all_passed(), r.render()))
}

#[pymodule]
fn cycavg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(power_sum, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum_exact, m)?)?;
    m.add_function(wrap_pyfunction!(solid_power_sum, m)?)?;
    m.add_function(wrap_pyfunction!(locus, m)?)?;
    m.add_function(wrap_pyfunction!(recover, m)?)?;
    m.add_function(wrap_pyfunction!(rational24, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
