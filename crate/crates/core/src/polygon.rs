//! Power sums of distances to the vertices of a regular polygon.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclotomic::CyclotomicField;
use crate::error::{Error, Result};
use crate::geometry::{
    polygon_distances_squared, DistanceMultiset, PlanePlacement, PolygonSpec, SolidKind,
};
use crate::relations::BranchPair;
use crate::scalar::{Rational, Scalar, Turns};

/// `C(n, k)` as an arbitrary-size integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    Polygon(usize),
    Solid(SolidKind),
}

/// `S^(2m)`: the mean of the `2m`-th powers of the vertex distances.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicAverage<S> {
    pub m: usize,
    pub value: S,
    pub source: Figure,
}

/// Level set of a power sum. Radii are reported as floats even for exact
/// inputs since the root is generally irrational.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LocusClass {
    Circle { radius: f64 },
    Sphere { radius: f64 },
    Centroid,
    Empty,
}

impl std::fmt::Display for LocusClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::scalar::format_g12;
        match self {
            LocusClass::Circle { radius } => write!(f, "circle L={}", format_g12(*radius)),
            LocusClass::Sphere { radius } => write!(f, "sphere L={}", format_g12(*radius)),
            LocusClass::Centroid => f.write_str("centroid"),
            LocusClass::Empty => f.write_str("empty"),
        }
    }
}

fn check_polygon_m(n: usize, m: usize) -> Result<()> {
    if m < 1 || m >= n {
        return Err(Error::OutOfRange { m, min: 1, max: n - 1 });
    }
    Ok(())
}

/// `Σ_k C(m,2k)·C(2k,k)·(R²L²)^k·(R²+L²)^{m−2k}`, the per-vertex mean of
/// `d^{2m}` without range checks.
pub(crate) fn polygon_mean_unchecked<S: Scalar>(m: usize, r_sq: &S, l_sq: &S) -> S {
    let a = r_sq.clone() + l_sq.clone();
    let u = r_sq.clone() * l_sq.clone();
    (0..=m / 2).fold(S::zero(), |acc, k| {
        let c = S::from_integer(&(binomial(m, 2 * k) * binomial(2 * k, k)));
        acc + c * u.powi(k as u32) * a.powi((m - 2 * k) as u32)
    })
}

/// `Σ d_i^{2m}` in closed form from `R²` and `L²`.
pub fn power_sum_closed_sq<S: Scalar>(n: usize, m: usize, r_sq: &S, l_sq: &S) -> Result<S> {
    check_polygon_m(n, m)?;
    if l_sq.is_negative() {
        return Err(Error::Negative("L²"));
    }
    Ok(S::from_int(n as i64) * polygon_mean_unchecked(m, r_sq, l_sq))
}

pub fn power_sum_closed<S: Scalar>(spec: &PolygonSpec<S>, m: usize, l: &S) -> Result<S> {
    if l.is_negative() {
        return Err(Error::Negative("L"));
    }
    power_sum_closed_sq(spec.n(), m, &spec.r_sq(), &l.square())
}

/// Direct vertex sum; defined for every `m ≥ 1`.
pub fn power_sum_brute<S: Scalar>(spec: &PolygonSpec<S>, m: usize, p: &PlanePlacement<S>) -> Result<S> {
    if m < 1 {
        return Err(Error::OutOfRange { m, min: 1, max: usize::MAX });
    }
    Ok(polygon_distances_squared(spec, p)?.power_sum(m as u32))
}

/// Exact vertex sum in ℚ(ζ_N) for rational `R`, `L` and `α = k/N` turns,
/// where `N` is a multiple of `n`. `None` if the sum is not rational.
pub fn power_sum_brute_cyclotomic(
    n: usize,
    r: &Rational,
    l: &Rational,
    m: usize,
    alpha: Turns,
) -> Option<Rational> {
    let order = num_integer::lcm(n as i64, *alpha.denom()) as usize;
    let field = CyclotomicField::new(order);
    let a = field.from_rational(&(r * r + l * l));
    let b = Rational::from_integer(2.into()) * r * l;
    let step = (order / n) as i64;
    let offset = *alpha.numer() * (order as i64 / *alpha.denom());
    let total = (0..n as i64).fold(field.zero(), |acc, i| {
        let cos = field.cos_steps(offset - i * step);
        let d_sq = field.sub(&a, &cos.scale(&b));
        field.add(&acc, &field.pow(&d_sq, m as u32))
    });
    total.as_rational()
}

pub fn cyclic_average<S: Scalar>(spec: &PolygonSpec<S>, m: usize, l: &S) -> Result<CyclicAverage<S>> {
    let total = power_sum_closed(spec, m, l)?;
    Ok(CyclicAverage {
        m,
        value: total / S::from_int(spec.n() as i64),
        source: Figure::Polygon(spec.n()),
    })
}

/// Root `x ≥ 0` of the increasing function `f(x) = target`, `f(0) < target`.
pub(crate) fn bisect_increasing(f: impl Fn(f64) -> f64, target: f64, start: f64) -> f64 {
    let mut lo = 0.0;
    let mut hi = start.max(1e-300);
    while f(hi) <= target {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if f(mid) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-13 * hi {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Compares `c` against the centroid value `base`: exact for exact backends,
/// relative tolerance `1e−12` for floats.
pub(crate) fn compare_to_centroid<S: Scalar>(c: &S, base: &S) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if !S::EXACT && c.approx_eq(base, 1e-12) {
        return Ordering::Equal;
    }
    c.partial_cmp(base).unwrap_or(Ordering::Less)
}

pub fn locus_classify<S: Scalar>(spec: &PolygonSpec<S>, m: usize, c: &S) -> Result<LocusClass> {
    use std::cmp::Ordering;
    check_polygon_m(spec.n(), m)?;
    if !(c.clone() > S::zero()) {
        return Err(Error::InvalidAverage("C must be positive"));
    }
    let n = spec.n();
    let base = S::from_int(n as i64) * spec.r_sq().powi(m as u32);
    match compare_to_centroid(c, &base) {
        Ordering::Less => Ok(LocusClass::Empty),
        Ordering::Equal => Ok(LocusClass::Centroid),
        Ordering::Greater => {
            let r_sq = spec.r_sq().to_f64();
            let nf = n as f64;
            let l_sq = bisect_increasing(
                |x| nf * polygon_mean_unchecked(m, &r_sq, &x),
                c.to_f64(),
                r_sq,
            );
            Ok(LocusClass::Circle { radius: l_sq.sqrt() })
        }
    }
}

/// `R², L² = ½(S2 ± √(3S2² − 2S4))`, larger value in `plus`.
pub fn recover_r2_l2<S: Scalar>(s2: &S, s4: &S) -> Result<BranchPair<S>> {
    if !(s2.clone() > S::zero()) {
        return Err(Error::InvalidAverage("S2 must be positive"));
    }
    let disc = (S::from_int(3) * s2.square() - S::from_int(2) * s4.clone())
        .snap_nonnegative(&s2.square());
    half_split(s2, &disc)
}

/// `½(s ± √disc)`.
pub(crate) fn half_split<S: Scalar>(s: &S, disc: &S) -> Result<BranchPair<S>> {
    if disc.is_negative() {
        return Err(Error::NegativeDiscriminant);
    }
    let root = disc.sqrt().ok_or(Error::NotExact("discriminant is not a perfect square"))?;
    let two = S::from_int(2);
    Ok(BranchPair {
        plus: (s.clone() + root.clone()) / two.clone(),
        minus: (s.clone() - root) / two,
    })
}

/// `S^(2m)` from `S^(2)` and `R`, using `L² = S2 − R²`.
pub fn s2m_from_s2<S: Scalar>(m: usize, s2: &S, r: &S) -> Result<S> {
    if m < 1 {
        return Err(Error::OutOfRange { m, min: 1, max: usize::MAX });
    }
    let r_sq = r.square();
    let l_sq = s2.clone() - r_sq.clone();
    if l_sq.is_negative() {
        return Err(Error::InvalidAverage("S2 < R²"));
    }
    Ok(polygon_mean_unchecked(m, &r_sq, &l_sq))
}

/// `S^(2m) = Σ 2^{−k} C(m,2k) C(2k,k) (S4 − S2²)^k S2^{m−2k}`.
pub fn s2m_from_s2_s4<S: Scalar>(m: usize, s2: &S, s4: &S) -> Result<S> {
    if m < 1 {
        return Err(Error::OutOfRange { m, min: 1, max: usize::MAX });
    }
    let gap = s4.clone() - s2.square();
    if gap.is_negative() {
        return Err(Error::InvalidAverage("S4 < S2²"));
    }
    let half = S::from_ratio(1, 2);
    Ok((0..=m / 2).fold(S::zero(), |acc, k| {
        let c = S::from_integer(&(binomial(m, 2 * k) * binomial(2 * k, k)));
        acc + c * (half.clone() * gap.clone()).powi(k as u32) * s2.powi((m - 2 * k) as u32)
    }))
}

/// `3(Σd²)² − 2nΣd⁴`; zero exactly on the circumcircle.
pub fn circumcircle_check<S: Scalar>(d: &DistanceMultiset<S>) -> S {
    let n = S::from_int(d.len() as i64);
    S::from_int(3) * d.power_sum(1).square() - S::from_int(2) * n * d.power_sum(2)
}

/// Residuals of the relations between averages, in order:
/// `S4 + 3R⁴ − (S2 + R²)²` (any `n ≥ 3`), then with `S6` (`n ≥ 4`)
/// `S6 − S2((S2 + 3R²)² − 15R⁴)` and `S6 − S2(3S4 − 2S2²)`.
pub fn polygon_average_residuals<S: Scalar>(s2: &S, s4: &S, s6: Option<&S>, r_sq: &S) -> Vec<S> {
    let three = S::from_int(3);
    let mut out = vec![s4.clone() + three.clone() * r_sq.square() - (s2.clone() + r_sq.clone()).square()];
    if let Some(s6) = s6 {
        let a = (s2.clone() + three.clone() * r_sq.clone()).square() - S::from_int(15) * r_sq.square();
        out.push(s6.clone() - s2.clone() * a);
        out.push(
            s6.clone() - s2.clone() * (three * s4.clone() - S::from_int(2) * s2.square()),
        );
    }
    out
}
