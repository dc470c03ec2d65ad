use cycavg_core::polygon::{
    locus_classify, power_sum_brute, power_sum_closed, power_sum_closed_sq, recover_r2_l2, s2m_from_s2, s2m_from_s2_s4,
};
use cycavg_core::relations::{recover_spec_from_distances, solve_distances, sum_of_squares_residual};
use cycavg_core::solid::{recover_r2_l2_solid, solid_power_sum_brute, solid_power_sum_closed, SolidAverages};
use cycavg_core::trig::{cosine_power_sum, cosine_power_sum_closed, multiple_angle_cosine_sum, TrigSumSpec};
use cycavg_core::{
    polygon_distances_squared, solid_distances_squared, Angle, LocusClass, PlanePlacement, PolygonSpec, QSqrt5,
    Rational, Scalar, SolidKind, SolidSpec, SpacePlacement,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

fn ratio() -> impl Strategy<Value = Rational> {
    (1i64..500, 1i64..60).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn solid_kind() -> impl Strategy<Value = SolidKind> {
    prop::sample::select(SolidKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closed_form_matches_vertex_sum(
        (n, m) in (3usize..=20).prop_flat_map(|n| (Just(n), 1..n)),
        r in 0.05f64..8.0, l in 0.0f64..8.0, alpha in -10.0f64..10.0,
    ) {
        let spec = PolygonSpec::new(n, r).unwrap();
        let closed = power_sum_closed(&spec, m, &l).unwrap();
        let brute = power_sum_brute(&spec, m, &PlanePlacement::new(l, Angle::Radians(alpha)).unwrap()).unwrap();
        prop_assert!(rel(closed, brute) < 1e-9, "n={n} m={m}: {closed} vs {brute}");
    }

    #[test]
    fn closed_form_is_exact_on_rationals(n in 3usize..=12, r2 in ratio(), l2 in ratio()) {
        // Σd² = n(R² + L²) holds for every n ≥ 2
        let s = power_sum_closed_sq(n, 1, &r2, &l2).unwrap();
        prop_assert_eq!(s, Rational::from_integer(BigInt::from(n)) * (&r2 + &l2));
    }

    #[test]
    fn power_sums_are_symmetric_in_r_and_l(n in 3usize..=12, m in 1usize..3, r2 in ratio(), l2 in ratio()) {
        prop_assert_eq!(power_sum_closed_sq(n, m, &r2, &l2).unwrap(), power_sum_closed_sq(n, m, &l2, &r2).unwrap());
    }

    #[test]
    fn exact_recovery_round_trips(r2 in ratio(), l2 in ratio()) {
        let s2 = &r2 + &l2;
        let s4 = &s2 * &s2 + Rational::from_integer(2.into()) * &r2 * &l2;
        let b = recover_r2_l2(&s2, &s4).unwrap();
        let (hi, lo) = if r2 >= l2 { (r2, l2) } else { (l2, r2) };
        prop_assert_eq!(b.plus, hi);
        prop_assert_eq!(b.minus, lo);
    }

    #[test]
    fn higher_averages_follow_from_low_ones(
        (n, m) in (5usize..=14).prop_flat_map(|n| (Just(n), 1..n)),
        r in 0.1f64..4.0, l in 0.0f64..4.0, alpha in 0.0f64..6.3,
    ) {
        let d = polygon_distances_squared(&PolygonSpec::new(n, r).unwrap(), &PlanePlacement::new(l, Angle::Radians(alpha)).unwrap()).unwrap();
        let nf = n as f64;
        let (s2, s4) = (d.power_sum(1) / nf, d.power_sum(2) / nf);
        let target = d.power_sum(m as u32) / nf;
        prop_assert!(rel(s2m_from_s2(m, &s2, &r).unwrap(), target) < 1e-9);
        prop_assert!(rel(s2m_from_s2_s4(m, &s2, &s4).unwrap(), target) < 1e-8);
    }

    #[test]
    fn sum_of_squares_vanishes(n in 3usize..=16, r in 0.1f64..10.0, l in 0.0f64..10.0, alpha in 0.0f64..6.3) {
        let d = polygon_distances_squared(&PolygonSpec::new(n, r).unwrap(), &PlanePlacement::new(l, Angle::Radians(alpha)).unwrap()).unwrap();
        let res = sum_of_squares_residual(&d, &r, &l);
        prop_assert!(res.abs() <= 1e-12 * n as f64 * (r * r + l * l));
    }

    #[test]
    fn solve_then_recover(n in prop::sample::select(vec![3usize, 4, 6]), r in 0.2f64..6.0, l in 0.2f64..6.0, alpha in 0.0f64..6.3) {
        let d = polygon_distances_squared(&PolygonSpec::new(n, r).unwrap(), &PlanePlacement::new(l, Angle::Radians(alpha)).unwrap()).unwrap();
        let b = solve_distances(n, &r, &l, d.get(1)).unwrap();
        prop_assert!(b.plus.matches(&d, 1e-9) || b.minus.matches(&d, 1e-9));
        let c = recover_spec_from_distances(n, &d).unwrap();
        let r2 = r * r;
        prop_assert!((c.plus - r2).abs().min((c.minus - r2).abs()) <= 1e-9 * (r2 + l * l));
    }

    #[test]
    fn level_set_radius_reproduces_level(
        (n, m) in (3usize..=12).prop_flat_map(|n| (Just(n), 1..n)),
        r in 0.2f64..3.0, l in 0.05f64..3.0,
    ) {
        let spec = PolygonSpec::new(n, r).unwrap();
        let c = power_sum_closed(&spec, m, &l).unwrap();
        match locus_classify(&spec, m, &c).unwrap() {
            LocusClass::Circle { radius } => prop_assert!(rel(radius, l) < 1e-6, "{radius} vs {l}"),
            other => prop_assert!(false, "unexpected {other}"),
        }
    }

    #[test]
    fn solid_closed_form_matches_vertex_sum(
        kind in solid_kind(), c in 0.2f64..4.0,
        x in -3.0f64..3.0, y in -3.0f64..3.0, z in -3.0f64..3.0, mm in 1usize..=5,
    ) {
        let spec = SolidSpec::new(kind, c).unwrap();
        let m = 1 + (mm - 1) % kind.max_power_index();
        let p = SpacePlacement::new(x, y, z);
        let closed = solid_power_sum_closed(&spec, m, &p.l_sq()).unwrap();
        let brute = solid_power_sum_brute(&spec, m, &p).unwrap();
        prop_assert!(rel(closed, brute) < 1e-9, "{kind:?} m={m}");
    }

    #[test]
    fn solid_recovery(kind in solid_kind(), c in 0.2f64..4.0, x in -3.0f64..3.0, y in -3.0f64..3.0, z in -3.0f64..3.0) {
        let spec = SolidSpec::new(kind, c).unwrap();
        let p = SpacePlacement::new(x, y, z);
        let avg = SolidAverages::from_distances(kind, &solid_distances_squared(&spec, &p));
        let b = recover_r2_l2_solid(&avg.s[0], &avg.s[1]).unwrap();
        let (r2, l2) = (*spec.r_sq(), p.l_sq());
        prop_assert!((b.plus - r2).abs().min((b.minus - r2).abs()) <= 1e-8 * (r2 + l2));
    }

    #[test]
    fn cosine_sums_below_n(
        (n, m) in (2usize..=24).prop_flat_map(|n| (Just(n), 1..n)),
        alpha in -7.0f64..7.0,
    ) {
        let s = TrigSumSpec::new(n, m, alpha);
        prop_assert!(multiple_angle_cosine_sum(&s).abs() < 1e-9);
        let want = ToPrimitive::to_f64(&cosine_power_sum_closed(n, m)).unwrap();
        prop_assert!((cosine_power_sum(&s) - want).abs() < 1e-9);
    }

    #[test]
    fn golden_field_arithmetic(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
        let x = QSqrt5::from_ratios((a, 1), (b, 1));
        let y = QSqrt5::from_ratios((c, 1), (d, 1));
        let prod = x.clone() * y.clone();
        prop_assert_eq!(prod.norm(), x.norm() * y.norm());
        prop_assert_eq!(prod.conjugate(), x.conjugate() * y.conjugate());
        if !y.is_zero() {
            prop_assert_eq!((x.clone() / y.clone()) * y, x);
        }
    }
}
