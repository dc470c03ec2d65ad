//! Figures, placements and squared-distance primitives.
//!
//! Vertex indices are 1-based (`A₁ … A_n`). Polygon vertex `i` sits at polar
//! angle `(i−1)·2π/n` on the circumcircle and the evaluation angle α is
//! measured from the direction of `A₁`. Solid vertex lists follow the
//! classical coordinate tables in order, so antipodal vertices are adjacent
//! (`A₁A₂`, `A₃A₄`, …) and the cube's odd/even vertices form the two inscribed
//! tetrahedra.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{Angle, Scalar, Turns};

#[derive(Clone, Debug, PartialEq)]
pub struct PolygonSpec<S> {
    n: usize,
    r: S,
}

impl<S: Scalar> PolygonSpec<S> {
    pub fn new(n: usize, r: S) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSpec(format!("a polygon needs n >= 3, got {n}")));
        }
        if r <= S::zero() {
            return Err(Error::InvalidSpec("circumradius must be positive".into()));
        }
        Ok(Self { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> &S {
        &self.r
    }

    pub fn r_sq(&self) -> S {
        self.r.square()
    }

    /// Polar position of vertex `i`, in turns.
    pub fn vertex_turns(&self, i: usize) -> Turns {
        Turns::new((i as i64) - 1, self.n as i64)
    }

    /// Squared side `a² = 2R²(1 − cos(2π/n))`.
    pub fn side_sq(&self) -> Result<S> {
        let c: S = Angle::Turns(Turns::new(1, self.n as i64)).cos()?;
        Ok(S::from_int(2) * self.r_sq() * (S::one() - c))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::IndexOutOfRange { index: i, n: self.n })
        } else {
            Ok(())
        }
    }
}

/// A point in the polygon's plane: distance `L` from the centroid and polar
/// angle α from the direction of vertex 1.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanePlacement<S> {
    l: S,
    alpha: Angle,
}

impl<S: Scalar> PlanePlacement<S> {
    pub fn new(l: S, alpha: Angle) -> Result<Self> {
        if l.is_negative() {
            return Err(Error::Negative("L"));
        }
        Ok(Self { l, alpha })
    }

    pub fn l(&self) -> &S {
        &self.l
    }

    pub fn alpha(&self) -> Angle {
        self.alpha
    }

    pub fn cartesian_f64(&self) -> (f64, f64) {
        let (l, a) = (self.l.to_f64(), self.alpha.radians());
        (l * a.cos(), l * a.sin())
    }
}

/// A point in space, centroid at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct SpacePlacement<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> SpacePlacement<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Self { x, y, z }
    }

    pub fn l_sq(&self) -> S {
        self.x.square() + self.y.square() + self.z.square()
    }
}

/// `A = R² + L²`, `B = 2RL`; every squared distance is `A − B·cos θ`.
#[derive(Clone, Debug, PartialEq)]
pub struct SumBasis<S> {
    pub a: S,
    pub b: S,
}

impl<S: Scalar> SumBasis<S> {
    pub fn new(r: &S, l: &S) -> Self {
        Self {
            a: r.square() + l.square(),
            b: S::from_int(2) * r.clone() * l.clone(),
        }
    }

    pub fn distance_sq(&self, cos_theta: &S) -> S {
        self.a.clone() - self.b.clone() * cos_theta.clone()
    }
}

/// Squared distances `d_i²` to vertices `1..n`, in vertex order.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMultiset<S>(Vec<S>);

impl<S: Scalar> DistanceMultiset<S> {
    pub fn new(d_sq: Vec<S>) -> Result<Self> {
        if d_sq.iter().any(Scalar::is_negative) {
            return Err(Error::Negative("squared distance"));
        }
        Ok(Self(d_sq))
    }

    pub fn as_slice(&self) -> &[S] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<S> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d_i²` with a 1-based index.
    pub fn get(&self, i: usize) -> &S {
        &self.0[i - 1]
    }

    /// `Σ d_i^{2m}`.
    pub fn power_sum(&self, m: u32) -> S {
        self.0.iter().fold(S::zero(), |acc, d| acc + d.powi(m))
    }

    pub fn expect_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            Err(Error::LengthMismatch { expected: n, got: self.len() })
        } else {
            Ok(())
        }
    }

    /// Multiset equality: both sorted, compared entrywise within `rel_tol`
    /// (relative to the largest entry).
    pub fn matches(&self, other: &Self, rel_tol: f64) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let sorted = |v: &[S]| {
            let mut v: Vec<f64> = v.iter().map(Scalar::to_f64).collect();
            v.sort_by(f64::total_cmp);
            v
        };
        if S::EXACT {
            let mut a = self.0.clone();
            let mut b = other.0.clone();
            a.sort_by(|x, y| x.partial_cmp(y).expect("ordered"));
            b.sort_by(|x, y| x.partial_cmp(y).expect("ordered"));
            return a == b;
        }
        let (a, b) = (sorted(&self.0), sorted(&other.0));
        let scale = a.iter().chain(&b).fold(1e-300f64, |m, v| m.max(v.abs()));
        a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= rel_tol * scale)
    }
}

/// `d_i² = A − B·cos(α − (i−1)·2π/n)`.
pub fn polygon_distance_squared<S: Scalar>(
    spec: &PolygonSpec<S>,
    p: &PlanePlacement<S>,
    i: usize,
) -> Result<S> {
    spec.check_index(i)?;
    let basis = SumBasis::new(spec.r(), p.l());
    let cos = p.alpha().minus_turns(spec.vertex_turns(i)).cos::<S>()?;
    Ok(basis.distance_sq(&cos).snap_nonnegative(&basis.a))
}

/// All `n` squared distances of a plane placement.
pub fn polygon_distances_squared<S: Scalar>(
    spec: &PolygonSpec<S>,
    p: &PlanePlacement<S>,
) -> Result<DistanceMultiset<S>> {
    let d = (1..=spec.n())
        .map(|i| polygon_distance_squared(spec, p, i))
        .collect::<Result<Vec<_>>>()?;
    DistanceMultiset::new(d)
}

/// `16·△²` of a triangle with the given squared sides:
/// `2a²b² + 2a²c² + 2b²c² − a⁴ − b⁴ − c⁴`. Negative means no such triangle.
pub fn heron_area_16sq<S: Scalar>(a_sq: &S, b_sq: &S, c_sq: &S) -> S {
    let two = S::from_int(2);
    two.clone() * a_sq.clone() * b_sq.clone()
        + two.clone() * a_sq.clone() * c_sq.clone()
        + two * b_sq.clone() * c_sq.clone()
        - a_sq.square()
        - b_sq.square()
        - c_sq.square()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolidKind {
    Tetrahedron,
    Octahedron,
    Cube,
    Icosahedron,
    Dodecahedron,
}

impl SolidKind {
    pub const ALL: [SolidKind; 5] = [
        SolidKind::Tetrahedron,
        SolidKind::Octahedron,
        SolidKind::Cube,
        SolidKind::Icosahedron,
        SolidKind::Dodecahedron,
    ];

    pub fn vertex_count(self) -> usize {
        match self {
            SolidKind::Tetrahedron => 4,
            SolidKind::Octahedron => 6,
            SolidKind::Cube => 8,
            SolidKind::Icosahedron => 12,
            SolidKind::Dodecahedron => 20,
        }
    }

    /// Largest `m` for which `Σ d^{2m}` depends on `R` and `L` only.
    pub fn max_power_index(self) -> usize {
        match self {
            SolidKind::Tetrahedron => 2,
            SolidKind::Octahedron | SolidKind::Cube => 3,
            SolidKind::Icosahedron | SolidKind::Dodecahedron => 5,
        }
    }

    pub fn needs_golden_ratio(self) -> bool {
        matches!(self, SolidKind::Icosahedron | SolidKind::Dodecahedron)
    }

    pub fn has_antipodes(self) -> bool {
        self != SolidKind::Tetrahedron
    }

    pub fn name(self) -> &'static str {
        match self {
            SolidKind::Tetrahedron => "tetrahedron",
            SolidKind::Octahedron => "octahedron",
            SolidKind::Cube => "cube",
            SolidKind::Icosahedron => "icosahedron",
            SolidKind::Dodecahedron => "dodecahedron",
        }
    }
}

impl fmt::Display for SolidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolidKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tetrahedron" | "t4" | "4" => Ok(SolidKind::Tetrahedron),
            "octahedron" | "t6" | "6" => Ok(SolidKind::Octahedron),
            "cube" | "hexahedron" | "t8" | "8" => Ok(SolidKind::Cube),
            "icosahedron" | "t12" | "12" => Ok(SolidKind::Icosahedron),
            "dodecahedron" | "t20" | "20" => Ok(SolidKind::Dodecahedron),
            other => Err(Error::InvalidSpec(format!("unknown solid '{other}'"))),
        }
    }
}

/// A Platonic solid centred at the origin with coordinate scale `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolidSpec<S> {
    kind: SolidKind,
    c: S,
    r_sq: S,
    phi: Option<S>,
}

impl<S: Scalar> SolidSpec<S> {
    pub fn new(kind: SolidKind, c: S) -> Result<Self> {
        if c <= S::zero() {
            return Err(Error::InvalidSpec("coordinate scale must be positive".into()));
        }
        let phi = Self::golden_ratio(kind)?;
        let factor = Self::radius_factor(kind, phi.as_ref());
        let r_sq = c.square() * factor;
        Ok(Self { kind, c, r_sq, phi })
    }

    /// Builds the solid from its squared circumradius; the coordinate scale
    /// must exist in the backend.
    pub fn from_circumradius_sq(kind: SolidKind, r_sq: S) -> Result<Self> {
        if r_sq <= S::zero() {
            return Err(Error::InvalidSpec("circumradius must be positive".into()));
        }
        let phi = Self::golden_ratio(kind)?;
        let factor = Self::radius_factor(kind, phi.as_ref());
        let c = (r_sq.clone() / factor)
            .sqrt()
            .ok_or(Error::NotExact("coordinate scale is irrational"))?;
        Ok(Self { kind, c, r_sq, phi })
    }

    fn golden_ratio(kind: SolidKind) -> Result<Option<S>> {
        if !kind.needs_golden_ratio() {
            return Ok(None);
        }
        let sqrt5 = S::from_int(5)
            .sqrt()
            .ok_or(Error::NotExact("backend lacks √5; use QSqrt5 or f64"))?;
        Ok(Some((S::one() + sqrt5) / S::from_int(2)))
    }

    /// `R²/c²`.
    fn radius_factor(kind: SolidKind, phi: Option<&S>) -> S {
        match kind {
            SolidKind::Octahedron => S::one(),
            SolidKind::Icosahedron => S::one() + phi.expect("phi").square(),
            _ => S::from_int(3),
        }
    }

    pub fn kind(&self) -> SolidKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.kind.vertex_count()
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    pub fn r_sq(&self) -> &S {
        &self.r_sq
    }

    pub fn phi(&self) -> Option<&S> {
        self.phi.as_ref()
    }
}

pub type Point3<S> = [S; 3];

fn cube_vertices<S: Scalar>(c: &S) -> Vec<Point3<S>> {
    let p = c.clone();
    let m = -c.clone();
    vec![
        [m.clone(), m.clone(), m.clone()],
        [p.clone(), p.clone(), p.clone()],
        [p.clone(), p.clone(), m.clone()],
        [m.clone(), m.clone(), p.clone()],
        [p.clone(), m.clone(), p.clone()],
        [m.clone(), p.clone(), m.clone()],
        [m.clone(), p.clone(), p.clone()],
        [p.clone(), m.clone(), m],
    ]
}

/// Three golden rectangles `(0, ±u, ±v)` cycled through the axes, in the
/// order `(0,u,v) (0,−u,−v) (0,−u,v) (0,u,−v)` then the cyclic shifts. The
/// icosahedron table lists the last two vertices of the `(±u, ±v, 0)` block
/// the other way round (`swap_xy_block`).
fn golden_rectangles<S: Scalar>(u: &S, v: &S, swap_xy_block: bool) -> Vec<Point3<S>> {
    let z = S::zero();
    let quad = [
        (u.clone(), v.clone()),
        (-u.clone(), -v.clone()),
        (-u.clone(), v.clone()),
        (u.clone(), -v.clone()),
    ];
    let mut out = Vec::with_capacity(12);
    for (a, b) in quad.iter().cloned() {
        out.push([z.clone(), a, b]);
    }
    let xy_order = if swap_xy_block { [0, 1, 3, 2] } else { [0, 1, 2, 3] };
    for k in xy_order {
        let (a, b) = quad[k].clone();
        out.push([a, b, z.clone()]);
    }
    for (a, b) in quad.iter().cloned() {
        out.push([b, z.clone(), a]);
    }
    out
}

/// The `n` vertices in the classical order.
pub fn solid_vertices<S: Scalar>(spec: &SolidSpec<S>) -> Vec<Point3<S>> {
    let c = spec.c();
    match spec.kind() {
        SolidKind::Tetrahedron => {
            let (p, m) = (c.clone(), -c.clone());
            vec![
                [p.clone(), p.clone(), p.clone()],
                [p.clone(), m.clone(), m.clone()],
                [m.clone(), p.clone(), m.clone()],
                [m.clone(), m, p],
            ]
        }
        SolidKind::Octahedron => {
            let z = S::zero();
            let (p, m) = (c.clone(), -c.clone());
            vec![
                [p.clone(), z.clone(), z.clone()],
                [m.clone(), z.clone(), z.clone()],
                [z.clone(), p.clone(), z.clone()],
                [z.clone(), m.clone(), z.clone()],
                [z.clone(), z.clone(), p],
                [z.clone(), z, m],
            ]
        }
        SolidKind::Cube => cube_vertices(c),
        SolidKind::Icosahedron => {
            let phi = spec.phi().expect("icosahedron has phi");
            golden_rectangles(c, &(c.clone() * phi.clone()), true)
        }
        SolidKind::Dodecahedron => {
            let phi = spec.phi().expect("dodecahedron has phi");
            let mut v = cube_vertices(c);
            v.extend(golden_rectangles(
                &(c.clone() / phi.clone()),
                &(c.clone() * phi.clone()),
                false,
            ));
            v
        }
    }
}

fn dist_sq<S: Scalar>(v: &Point3<S>, p: &SpacePlacement<S>) -> S {
    (p.x.clone() - v[0].clone()).square()
        + (p.y.clone() - v[1].clone()).square()
        + (p.z.clone() - v[2].clone()).square()
}

pub fn solid_distance_squared<S: Scalar>(
    spec: &SolidSpec<S>,
    p: &SpacePlacement<S>,
    i: usize,
) -> Result<S> {
    if i == 0 || i > spec.n() {
        return Err(Error::IndexOutOfRange { index: i, n: spec.n() });
    }
    Ok(dist_sq(&solid_vertices(spec)[i - 1], p))
}

pub fn solid_distances_squared<S: Scalar>(
    spec: &SolidSpec<S>,
    p: &SpacePlacement<S>,
) -> DistanceMultiset<S> {
    DistanceMultiset(solid_vertices(spec).iter().map(|v| dist_sq(v, p)).collect())
}
