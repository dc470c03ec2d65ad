//! Registry of known misprints in the published identities.
//!
//! Each entry can evaluate both the printed and the corrected form against a
//! brute-force sum over the vertices at a fixed test point with `R ≠ 1`, so a
//! dimensional slip such as `R²` for `R⁴` cannot hide.

use std::fmt::Write as _;

use crate::error::Result;
use crate::geometry::{
    polygon_distances_squared, solid_distances_squared, PlanePlacement, PolygonSpec, SolidKind, SolidSpec,
    SpacePlacement,
};
use crate::scalar::{format_g12, Angle};

/// A printed form counts as wrong above this relative residual.
pub const PRINTED_FAIL_THRESHOLD: f64 = 1e-3;
/// A corrected form counts as verified below this relative residual.
pub const CORRECTED_PASS_THRESHOLD: f64 = 1e-9;

pub const TEST_R: f64 = 1.7;
pub const TEST_L: f64 = 1.2;
pub const TEST_ALPHA: f64 = 0.4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErratumId {
    SquareSystemR4,
    SquareDiscriminantS4,
    NonagonS16L8,
    DodecahedronTenthPower,
}

#[derive(Clone, Copy, Debug)]
pub struct Erratum {
    pub id: ErratumId,
    pub location: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub evidence: &'static str,
}

pub const ERRATA: [Erratum; 4] = [
    Erratum {
        id: ErratumId::SquareSystemR4,
        location: "square system, R⁴ term",
        printed: "S₄^(4) + 3R² = (S₄^(2) + R²)²",
        corrected: "S₄^(4) + 3R⁴ = (S₄^(2) + R²)²",
        evidence: "dimensional check; matches the general n-gon form; brute sum over P₄",
    },
    Erratum {
        id: ErratumId::SquareDiscriminantS4,
        location: "square discriminant, S₄ term",
        printed: "3(S_n^(2))² − 2S_n^(2) = [3(Σd²)² − 8Σd⁴]/16",
        corrected: "3(S_n^(2))² − 2S_n^(4) = [3(Σd²)² − 8Σd⁴]/16",
        evidence: "dimensional check; brute sums over P₄",
    },
    Erratum {
        id: ErratumId::NonagonS16L8,
        location: "nonagon S₉^(16), last term",
        printed: "… + 70R⁸L⁶",
        corrected: "… + 70R⁸L⁸",
        evidence: "general expansion C(8,8)·C(8,4) R⁸L⁸; brute mean over P₉",
    },
    Erratum {
        id: ErratumId::DodecahedronTenthPower,
        location: "dodecahedron Σd^(10)",
        printed: "20((R²+L²)² + (40/3)R²L²(R²+L²)³ + 16R⁴L⁴(R²+L²))",
        corrected: "20((R²+L²)⁵ + (40/3)R²L²(R²+L²)³ + 16R⁴L⁴(R²+L²))",
        evidence: "solid table at m=5; brute sum over the dodecahedron",
    },
];

#[derive(Clone, Copy, Debug)]
pub struct ErratumCheck {
    pub erratum: &'static Erratum,
    pub printed_residual: f64,
    pub corrected_residual: f64,
}

impl ErratumCheck {
    pub fn fails_as_printed(&self) -> bool {
        self.printed_residual > PRINTED_FAIL_THRESHOLD
    }

    pub fn passes_as_corrected(&self) -> bool {
        self.corrected_residual < CORRECTED_PASS_THRESHOLD
    }

    pub fn confirmed(&self) -> bool {
        self.fails_as_printed() && self.passes_as_corrected()
    }
}

fn rel(value: f64, oracle: f64) -> f64 {
    (value - oracle).abs() / oracle.abs().max(f64::MIN_POSITIVE)
}

fn polygon_d_sq(n: usize, r: f64, l: f64, alpha: f64) -> Result<Vec<f64>> {
    let spec = PolygonSpec::new(n, r)?;
    let p = PlanePlacement::new(l, Angle::Radians(alpha))?;
    Ok(polygon_distances_squared(&spec, &p)?.into_vec())
}

fn sum_pow(d: &[f64], m: i32) -> f64 {
    d.iter().map(|x| x.powi(m)).sum()
}

/// `(printed, corrected)` relative residuals at `(r, l, alpha)`.
pub fn residuals(id: ErratumId, r: f64, l: f64, alpha: f64) -> Result<(f64, f64)> {
    let (r2, l2) = (r * r, l * l);
    let a = r2 + l2;
    Ok(match id {
        ErratumId::SquareSystemR4 => {
            let d = polygon_d_sq(4, r, l, alpha)?;
            let (s2, s4) = (sum_pow(&d, 1) / 4.0, sum_pow(&d, 2) / 4.0);
            let rhs = (s2 + r2).powi(2);
            (rel(s4 + 3.0 * r2, rhs), rel(s4 + 3.0 * r2 * r2, rhs))
        }
        ErratumId::SquareDiscriminantS4 => {
            let d = polygon_d_sq(4, r, l, alpha)?;
            let (sum2, sum4) = (sum_pow(&d, 1), sum_pow(&d, 2));
            let (s2, s4) = (sum2 / 4.0, sum4 / 4.0);
            let rhs = (3.0 * sum2 * sum2 - 8.0 * sum4) / 16.0;
            // the two sides are a small difference of large terms, so scale by S2²
            let scale = s2 * s2;
            (
                (3.0 * s2 * s2 - 2.0 * s2 - rhs).abs() / scale,
                (3.0 * s2 * s2 - 2.0 * s4 - rhs).abs() / scale,
            )
        }
        ErratumId::NonagonS16L8 => {
            let d = polygon_d_sq(9, r, l, alpha)?;
            let oracle = sum_pow(&d, 8) / 9.0;
            let u = r2 * l2;
            let head = a.powi(8) + 56.0 * u * a.powi(6) + 420.0 * u * u * a.powi(4) + 560.0 * u.powi(3) * a * a;
            let r8 = r2.powi(4);
            (rel(head + 70.0 * r8 * l2.powi(3), oracle), rel(head + 70.0 * r8 * l2.powi(4), oracle))
        }
        ErratumId::DodecahedronTenthPower => {
            let spec = SolidSpec::from_circumradius_sq(SolidKind::Dodecahedron, r2)?;
            // a point off every symmetry axis
            let dir = [0.48f64, -0.6, 0.64];
            let p = SpacePlacement::new(l * dir[0], l * dir[1], l * dir[2]);
            let oracle = solid_distances_squared(&spec, &p).power_sum(5);
            let u = r2 * l2;
            let tail = 40.0 / 3.0 * u * a.powi(3) + 16.0 * u * u * a;
            (rel(20.0 * (a.powi(2) + tail), oracle), rel(20.0 * (a.powi(5) + tail), oracle))
        }
    })
}

pub fn check(e: &'static Erratum) -> Result<ErratumCheck> {
    let (printed_residual, corrected_residual) = residuals(e.id, TEST_R, TEST_L, TEST_ALPHA)?;
    Ok(ErratumCheck { erratum: e, printed_residual, corrected_residual })
}

pub fn check_all() -> Result<Vec<ErratumCheck>> {
    ERRATA.iter().map(check).collect()
}

/// Plain-text table, re-verified on every call.
pub fn errata_table() -> Result<String> {
    let mut t = String::new();
    let _ = writeln!(
        t,
        "Errata (test point R = {}, L = {}, α = {})",
        format_g12(TEST_R),
        format_g12(TEST_L),
        format_g12(TEST_ALPHA)
    );
    for c in check_all()? {
        let e = c.erratum;
        let _ = writeln!(t);
        let _ = writeln!(t, "{}", e.location);
        let _ = writeln!(t, "  printed:   {}", e.printed);
        let _ = writeln!(t, "  corrected: {}", e.corrected);
        let _ = writeln!(t, "  evidence:  {}", e.evidence);
        let _ = writeln!(
            t,
            "  residual printed {:.3e} ({}), corrected {:.3e} ({})",
            c.printed_residual,
            if c.fails_as_printed() { "fails" } else { "NOT REFUTED" },
            c.corrected_residual,
            if c.passes_as_corrected() { "corrected form verified" } else { "FAILED" }
        );
    }
    Ok(t)
}
