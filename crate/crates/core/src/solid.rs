//! Power sums of distances to the vertices of the Platonic solids.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geometry::{
    solid_distances_squared, DistanceMultiset, SolidKind, SolidSpec, SpacePlacement,
};
use crate::polygon::{bisect_increasing, compare_to_centroid, half_split, CyclicAverage, Figure, LocusClass};
use crate::relations::BranchPair;
use crate::scalar::Scalar;

/// Coefficients of `(R²L²)^k (R²+L²)^{m−2k}` in `S^(2m)`, `k = 0..=m/2`,
/// as `(numerator, denominator)`.
const SOLID_TABLE: [&[(i64, i64)]; 5] = [
    &[(1, 1)],
    &[(1, 1), (4, 3)],
    &[(1, 1), (4, 1)],
    &[(1, 1), (8, 1), (16, 5)],
    &[(1, 1), (40, 3), (16, 1)],
];

fn check_solid_m(kind: SolidKind, m: usize) -> Result<()> {
    let max = kind.max_power_index();
    if m < 1 || m > max {
        return Err(Error::OutOfRange { m, min: 1, max });
    }
    Ok(())
}

/// `S^(2m)` from `R²` and `L²`; identical for every solid whose range
/// contains `m`.
pub fn solid_mean_closed_sq<S: Scalar>(m: usize, r_sq: &S, l_sq: &S) -> Result<S> {
    let row = SOLID_TABLE
        .get(m.wrapping_sub(1))
        .ok_or(Error::OutOfRange { m, min: 1, max: 5 })?;
    let a = r_sq.clone() + l_sq.clone();
    let u = r_sq.clone() * l_sq.clone();
    Ok(row.iter().enumerate().fold(S::zero(), |acc, (k, &(p, q))| {
        acc + S::from_ratio(p, q) * u.powi(k as u32) * a.powi((m - 2 * k) as u32)
    }))
}

/// `Σ d_i^{2m}` in closed form; takes `L²` because the solids' exact
/// backends rarely contain `L` itself.
pub fn solid_power_sum_closed<S: Scalar>(spec: &SolidSpec<S>, m: usize, l_sq: &S) -> Result<S> {
    check_solid_m(spec.kind(), m)?;
    if l_sq.is_negative() {
        return Err(Error::Negative("L²"));
    }
    Ok(S::from_int(spec.n() as i64) * solid_mean_closed_sq(m, spec.r_sq(), l_sq)?)
}

pub fn solid_power_sum_brute<S: Scalar>(spec: &SolidSpec<S>, m: usize, p: &SpacePlacement<S>) -> Result<S> {
    if m < 1 {
        return Err(Error::OutOfRange { m, min: 1, max: usize::MAX });
    }
    Ok(solid_distances_squared(spec, p).power_sum(m as u32))
}

pub fn solid_cyclic_average<S: Scalar>(spec: &SolidSpec<S>, m: usize, l_sq: &S) -> Result<CyclicAverage<S>> {
    let total = solid_power_sum_closed(spec, m, l_sq)?;
    Ok(CyclicAverage {
        m,
        value: total / S::from_int(spec.n() as i64),
        source: Figure::Solid(spec.kind()),
    })
}

pub fn solid_locus_classify<S: Scalar>(spec: &SolidSpec<S>, m: usize, c: &S) -> Result<LocusClass> {
    check_solid_m(spec.kind(), m)?;
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
                |x| nf * solid_mean_closed_sq(m, &r_sq, &x).unwrap_or(f64::NAN),
                c.to_f64(),
                r_sq,
            );
            Ok(LocusClass::Sphere { radius: l_sq.sqrt() })
        }
    }
}

/// `R², L² = ½(S2 ± √(4S2² − 3S4))`.
pub fn recover_r2_l2_solid<S: Scalar>(s2: &S, s4: &S) -> Result<BranchPair<S>> {
    if !(s2.clone() > S::zero()) {
        return Err(Error::InvalidAverage("S2 must be positive"));
    }
    let disc = (S::from_int(4) * s2.square() - S::from_int(3) * s4.clone())
        .snap_nonnegative(&s2.square());
    half_split(s2, &disc)
}

/// `4(Σd²)² − 3nΣd⁴`; zero exactly on the circumsphere.
pub fn circumsphere_check<S: Scalar>(d: &DistanceMultiset<S>) -> S {
    let n = S::from_int(d.len() as i64);
    S::from_int(4) * d.power_sum(1).square() - S::from_int(3) * n * d.power_sum(2)
}

/// Averages `S^(2)…S^(2·max)` of one solid; missing entries are `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolidAverages<S> {
    pub s: Vec<S>,
}

impl<S: Scalar> SolidAverages<S> {
    /// `S^(2m)`, `m ≥ 1`.
    pub fn get(&self, m: usize) -> Option<&S> {
        self.s.get(m.checked_sub(1)?)
    }

    pub fn from_distances(kind: SolidKind, d: &DistanceMultiset<S>) -> Self {
        let n = S::from_int(d.len() as i64);
        Self {
            s: (1..=kind.max_power_index())
                .map(|m| d.power_sum(m as u32) / n.clone())
                .collect(),
        }
    }
}

/// Named residuals of the relations between averages that apply to `kind`:
/// the fourth-power relation for every solid, the two sixth-power forms from
/// the octahedron on, and the eighth and tenth power forms for the
/// icosahedron and dodecahedron.
pub fn solid_relation_residuals<S: Scalar>(
    kind: SolidKind,
    avg: &SolidAverages<S>,
    r_sq: &S,
) -> Vec<(&'static str, S)> {
    let q = S::from_ratio;
    let r2 = r_sq.clone();
    let r4 = r2.square();
    let mut out = Vec::new();
    let (Some(s2), Some(s4)) = (avg.get(1), avg.get(2)) else {
        return out;
    };
    let (s2, s4) = (s2.clone(), s4.clone());
    out.push((
        "S4 + 16/9 R^4 = (S2 + 2/3 R^2)^2",
        s4.clone() + q(16, 9) * r4.clone() - (s2.clone() + q(2, 3) * r2.clone()).square(),
    ));
    if kind.max_power_index() >= 3 {
        if let Some(s6) = avg.get(3) {
            out.push((
                "S6 = S2((S2 + 2R^2)^2 - 8R^4)",
                s6.clone()
                    - s2.clone() * ((s2.clone() + q(2, 1) * r2.clone()).square() - q(8, 1) * r4.clone()),
            ));
            out.push((
                "S6 = S2(3S4 - 2S2^2)",
                s6.clone() - s2.clone() * (q(3, 1) * s4.clone() - q(2, 1) * s2.square()),
            ));
        }
    }
    if kind.max_power_index() >= 5 {
        let l2 = s2.clone() - r2.clone();
        if let Some(s8) = avg.get(4) {
            out.push((
                "S8 - S2^4 = 8R^2 L^2 (S2^2 + 2/5 R^2 L^2)",
                s8.clone()
                    - s2.powi(4)
                    - q(8, 1) * r2.clone() * l2.clone()
                        * (s2.square() + q(2, 5) * r2.clone() * l2.clone()),
            ));
            out.push((
                "S8 = (9S4^2 + 12S4S2^2 - 16S2^4)/5",
                s8.clone()
                    - q(1, 5)
                        * (q(9, 1) * s4.square() + q(12, 1) * s4.clone() * s2.square()
                            - q(16, 1) * s2.powi(4)),
            ));
        }
        if let Some(s10) = avg.get(5) {
            out.push((
                "S10 - S2^5 = 8R^2 S2 L^2 (5/3 S2^2 + 2R^2 L^2)",
                s10.clone()
                    - s2.powi(5)
                    - q(8, 1) * r2.clone() * s2.clone() * l2.clone()
                        * (q(5, 3) * s2.square() + q(2, 1) * r2.clone() * l2.clone()),
            ));
            out.push((
                "S10 = S2 S4 (9S4 - 8S2^2)",
                s10.clone() - s2.clone() * s4.clone() * (q(9, 1) * s4.clone() - q(8, 1) * s2.square()),
            ));
        }
    }
    out
}

/// The cube's vertices `A₁, A₃, A₅, A₇` and `A₂, A₄, A₆, A₈` form two regular
/// tetrahedra. Residuals of their sums of `d²` and `d⁴` against the
/// tetrahedron's closed forms, in the order (odd, m=1), (odd, m=2),
/// (even, m=1), (even, m=2). Only the first eight entries are read, so the
/// dodecahedron's embedded cube works too.
pub fn cube_quadruple_residuals<S: Scalar>(d: &DistanceMultiset<S>, r_sq: &S, l_sq: &S) -> Result<Vec<S>> {
    if d.len() < 8 {
        return Err(Error::LengthMismatch { expected: 8, got: d.len() });
    }
    let four = S::from_int(4);
    let mut out = Vec::with_capacity(4);
    for start in [1usize, 2] {
        for m in 1..=2u32 {
            let sum = (0..4).fold(S::zero(), |acc, t| acc + d.get(start + 2 * t).powi(m));
            out.push(sum - four.clone() * solid_mean_closed_sq(m as usize, r_sq, l_sq)?);
        }
    }
    Ok(out)
}

/// Sums `d²_{2k−1} + d²_{2k}` over the antipodal pairs `(A₁,A₂), (A₃,A₄), …`.
/// Each equals `2(R² + L²)`.
pub fn antipodal_pair_sums<S: Scalar>(kind: SolidKind, d: &DistanceMultiset<S>) -> Result<Vec<S>> {
    if !kind.has_antipodes() {
        return Err(Error::TetrahedronHasNoAntipodes);
    }
    d.expect_len(kind.vertex_count())?;
    Ok((1..=d.len() / 2)
        .map(|k| d.get(2 * k - 1).clone() + d.get(2 * k).clone())
        .collect())
}

/// Relative spread `(max − min)/min` of the brute-force sum over a fixed set
/// of directions at distance `l` from the centre. Positive beyond the solid's
/// range of `m`, zero (to rounding) within it.
pub fn direction_spread(kind: SolidKind, m: usize, l: f64) -> Result<f64> {
    let spec = SolidSpec::<f64>::new(kind, 1.0)?;
    let dirs: [[f64; 3]; 8] = [
        [1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0],
        [1.0, 1.0, 1.0],
        [1.0, 1.0, 0.0],
        [0.3, -0.7, 0.2],
        [-0.9, 0.4, 0.5],
        [0.0, 1.0, 1.618_033_988_749_895],
        [0.2, 0.1, -0.95],
    ];
    let sums = dirs
        .iter()
        .map(|v| {
            let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            let p = SpacePlacement::new(l * v[0] / norm, l * v[1] / norm, l * v[2] / norm);
            solid_power_sum_brute(&spec, m, &p)
        })
        .collect::<Result<Vec<f64>>>()?;
    let max = sums.iter().cloned().fold(f64::MIN, f64::max);
    let min = sums.iter().cloned().fold(f64::MAX, f64::min);
    Ok((max - min) / min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::binomial;
    use crate::quadratic::QSqrt5;
    use crate::scalar::Rational;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn pt<S: Scalar>(x: i64, y: i64, z: i64) -> SpacePlacement<S> {
        SpacePlacement::new(S::from_int(x), S::from_int(y), S::from_int(z))
    }

    #[test]
    fn table_matches_integral_over_sphere() {
        // mean of cos^{2k} over the sphere is 1/(2k+1), so the coefficient of
        // (R²L²)^k is C(m,2k)·4^k/(2k+1)
        for m in 1..=5usize {
            for k in 0..=m / 2 {
                let c = Rational::new(binomial(m, 2 * k) * (num_bigint::BigInt::from(4).pow(k as u32)), (2 * k + 1).into());
                let (p, d) = SOLID_TABLE[m - 1][k];
                assert_eq!(Rational::new(p.into(), d.into()), c, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let tet = SolidSpec::from_circumradius_sq(SolidKind::Tetrahedron, q(3)).unwrap();
        assert_eq!(solid_power_sum_closed(&tet, 2, &q(1)).unwrap(), q(80));
        assert_eq!(solid_power_sum_brute(&tet, 2, &pt(1, 0, 0)).unwrap(), q(80));
        let oct = SolidSpec::new(SolidKind::Octahedron, q(1)).unwrap();
        assert_eq!(solid_power_sum_closed(&oct, 2, &q(1)).unwrap(), q(32));
        assert_eq!(solid_power_sum_brute(&oct, 2, &pt(0, 0, 1)).unwrap(), q(32));
        for kind in SolidKind::ALL {
            let spec = SolidSpec::new(kind, QSqrt5::from_int(2)).unwrap();
            for m in 1..=kind.max_power_index() {
                let expect = QSqrt5::from_int(kind.vertex_count() as i64) * spec.r_sq().powi(m as u32);
                assert_eq!(solid_power_sum_closed(&spec, m, &QSqrt5::zero()).unwrap(), expect);
            }
            assert!(solid_power_sum_closed(&spec, kind.max_power_index() + 1, &QSqrt5::one()).is_err());
        }
    }

    #[test]
    fn brute_examples() {
        let cube = SolidSpec::new(SolidKind::Cube, q(1)).unwrap();
        assert_eq!(solid_power_sum_brute(&cube, 3, &pt(0, 0, 0)).unwrap(), q(216));
        let ico = SolidSpec::new(SolidKind::Icosahedron, QSqrt5::one()).unwrap();
        let phi2 = QSqrt5::phi().square();
        assert_eq!(
            solid_power_sum_brute(&ico, 1, &pt(0, 0, 1)).unwrap(),
            QSqrt5::from_int(12) * (QSqrt5::from_int(2) + phi2)
        );
    }

    #[test]
    fn tetrahedron_sixth_power_depends_on_direction() {
        let tet = SolidSpec::new(SolidKind::Tetrahedron, q(1)).unwrap();
        // 2·2³ + 2·6³
        assert_eq!(solid_power_sum_brute(&tet, 3, &pt(1, 0, 0)).unwrap(), q(448));
        let a = solid_power_sum_brute(&tet, 3, &pt(3, 0, 0)).unwrap();
        let b = solid_power_sum_brute(&tet, 3, &pt(1, 2, 2)).unwrap();
        assert_eq!((a, b), (q(12096), q(11328)));
    }

    #[test]
    fn exact_oracle_equivalence() {
        let points = [(1, 0, 0), (1, 2, 2), (-3, 1, 4), (0, 0, 0), (2, -5, 1)];
        for kind in SolidKind::ALL {
            let spec = SolidSpec::new(kind, QSqrt5::from_ratios((3, 2), (0, 1))).unwrap();
            for &(x, y, z) in &points {
                let p = pt::<QSqrt5>(x, y, z);
                for m in 1..=kind.max_power_index() {
                    assert_eq!(
                        solid_power_sum_closed(&spec, m, &p.l_sq()).unwrap(),
                        solid_power_sum_brute(&spec, m, &p).unwrap(),
                        "{kind} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn locus_examples() {
        let tet = SolidSpec::from_circumradius_sq(SolidKind::Tetrahedron, 3.0).unwrap();
        match solid_locus_classify(&tet, 2, &80.0).unwrap() {
            LocusClass::Sphere { radius } => assert!((radius - 1.0).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        let oct = SolidSpec::new(SolidKind::Octahedron, q(1)).unwrap();
        assert_eq!(solid_locus_classify(&oct, 3, &q(6)).unwrap(), LocusClass::Centroid);
        let dod = SolidSpec::from_circumradius_sq(SolidKind::Dodecahedron, QSqrt5::from_int(3)).unwrap();
        assert_eq!(solid_locus_classify(&dod, 5, &QSqrt5::one()).unwrap(), LocusClass::Empty);
        assert!(solid_locus_classify(&oct, 4, &q(6)).is_err());
    }

    #[test]
    fn recovery_examples() {
        // R² = 3, L² = 1: S4 = 16 + (4/3)·3
        let b = recover_r2_l2_solid(&q(4), &q(20)).unwrap();
        assert_eq!((b.plus, b.minus), (q(3), q(1)));
        let b = recover_r2_l2_solid(&q(1), &q(1)).unwrap();
        assert_eq!((b.plus, b.minus), (q(1), q(0)));
        let b = recover_r2_l2_solid(&q(2), &Rational::new(16.into(), 3.into())).unwrap();
        assert_eq!((b.plus, b.minus), (q(1), q(1)));
        assert_eq!(recover_r2_l2_solid(&q(1), &q(2)), Err(Error::NegativeDiscriminant));
    }

    #[test]
    fn circumsphere_examples() {
        let oct = SolidSpec::new(SolidKind::Octahedron, q(1)).unwrap();
        let d = solid_distances_squared(&oct, &pt(0, 0, 1));
        assert_eq!(d.as_slice(), &[q(2), q(2), q(2), q(2), q(0), q(4)]);
        assert_eq!(circumsphere_check(&d), q(0));
        let d = DistanceMultiset::new(vec![q(1); 6]).unwrap();
        assert_eq!(circumsphere_check(&d), q(36));
    }

    #[test]
    fn relation_examples() {
        let tet = SolidSpec::from_circumradius_sq(SolidKind::Tetrahedron, q(3)).unwrap();
        let d = solid_distances_squared(&tet, &pt(1, 0, 0));
        let avg = SolidAverages::from_distances(SolidKind::Tetrahedron, &d);
        let res = solid_relation_residuals(SolidKind::Tetrahedron, &avg, tet.r_sq());
        assert_eq!(res.len(), 1);
        assert!(Zero::is_zero(&res[0].1));

        let oct = SolidSpec::new(SolidKind::Octahedron, q(1)).unwrap();
        let d = solid_distances_squared(&oct, &pt(0, 0, 1));
        let res = solid_relation_residuals(SolidKind::Octahedron, &SolidAverages::from_distances(SolidKind::Octahedron, &d), oct.r_sq());
        assert_eq!(res.len(), 3);
        assert!(res.iter().all(|(_, v)| Zero::is_zero(v)));

        let ico = SolidSpec::new(SolidKind::Icosahedron, QSqrt5::one()).unwrap();
        for p in [pt::<QSqrt5>(0, 0, 0), pt(1, -2, 3)] {
            let d = solid_distances_squared(&ico, &p);
            let avg = SolidAverages::from_distances(SolidKind::Icosahedron, &d);
            let res = solid_relation_residuals(SolidKind::Icosahedron, &avg, ico.r_sq());
            assert_eq!(res.len(), 7);
            assert!(res.iter().all(|(name, v)| v.is_zero() || panic!("{name}")));
        }
    }

    #[test]
    fn cube_quadruples() {
        let cube = SolidSpec::new(SolidKind::Cube, q(1)).unwrap();
        let p = pt::<Rational>(1, 0, 0);
        let d = solid_distances_squared(&cube, &p);
        assert_eq!(d.get(1), &q(6));
        let res = cube_quadruple_residuals(&d, cube.r_sq(), &p.l_sq()).unwrap();
        assert!(res.iter().all(Zero::is_zero));
        let d = solid_distances_squared(&cube, &pt(0, 0, 0));
        assert!(cube_quadruple_residuals(&d, cube.r_sq(), &q(0)).unwrap().iter().all(Zero::is_zero));
        let dod = SolidSpec::new(SolidKind::Dodecahedron, QSqrt5::one()).unwrap();
        let p = pt::<QSqrt5>(2, 1, -1);
        let d = solid_distances_squared(&dod, &p);
        assert!(cube_quadruple_residuals(&d, dod.r_sq(), &p.l_sq()).unwrap().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn antipodes() {
        let oct = SolidSpec::new(SolidKind::Octahedron, q(1)).unwrap();
        let d = solid_distances_squared(&oct, &pt(0, 0, 1));
        assert_eq!(antipodal_pair_sums(SolidKind::Octahedron, &d).unwrap(), vec![q(4); 3]);
        let tet = SolidSpec::new(SolidKind::Tetrahedron, q(1)).unwrap();
        let d = solid_distances_squared(&tet, &pt(0, 0, 1));
        assert_eq!(antipodal_pair_sums(SolidKind::Tetrahedron, &d), Err(Error::TetrahedronHasNoAntipodes));
        let dod = SolidSpec::new(SolidKind::Dodecahedron, QSqrt5::one()).unwrap();
        let p = pt::<QSqrt5>(1, 2, 3);
        let sums = antipodal_pair_sums(SolidKind::Dodecahedron, &solid_distances_squared(&dod, &p)).unwrap();
        let expect = QSqrt5::from_int(2) * (dod.r_sq().clone() + p.l_sq());
        assert_eq!(sums, vec![expect; 10]);
    }

    #[test]
    fn direction_dependence_beyond_range() {
        for kind in SolidKind::ALL {
            let max = kind.max_power_index();
            for m in 1..=max {
                assert!(direction_spread(kind, m, 1.3).unwrap() < 1e-12, "{kind} m={m}");
            }
            assert!(direction_spread(kind, max + 1, 1.3).unwrap() > 1e-3, "{kind}");
        }
    }
}
