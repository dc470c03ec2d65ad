//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test --test acceptance -- --nocapture` (the lines are
//! written straight to stdout, so they show up with or without capture).
//!
//! Criterion 3 is red by construction: at m = n the relative α-variation of
//! the power sum never exceeds 4/(C(2n,n)+2), which is below 0.1% for n ≥ 8.
//! The test asserts that the failure is exactly that one.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use cycavg_core::errata;
use cycavg_core::polygon::{
    polygon_average_residuals, power_sum_brute, power_sum_brute_cyclotomic, power_sum_closed, power_sum_closed_sq,
    recover_r2_l2,
};
use cycavg_core::rational_distance::{
    irreducibility_certificate, quartic_witness, rational_root_test, sin_pi_24_minimal_polynomial,
    unit_polygon_averages,
};
use cycavg_core::relations::{
    opposite_pair_sums, recover_spec_from_distances, solve_distances, square_sixth_factorization_residual,
    square_symmetric_residual, subset_identity_residuals, sum_of_squares_residual, triangle_symmetric_residual,
    SideLength, SubsetIdentitySpec,
};
use cycavg_core::solid::{
    antipodal_pair_sums, circumsphere_check, cube_quadruple_residuals, direction_spread, recover_r2_l2_solid,
    solid_power_sum_brute, solid_power_sum_closed, solid_relation_residuals, SolidAverages,
};
use cycavg_core::verify::{alpha_samples, max_alpha_spread, spread};
use cycavg_core::{
    polygon_distances_squared, solid_distances_squared, Angle, DistanceMultiset, PlanePlacement, PolygonSpec, QSqrt5,
    Rational, Scalar, SolidKind, SolidSpec, SpacePlacement, Turns,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn line(id: u32, title: &str, o: &Outcome, took: Duration) {
    let status = if o.pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{status} [{id:>2}] {title}: {} ({:.2} s)", o.detail, took.as_secs_f64());
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(a.abs()).max(f64::MIN_POSITIVE)
}

fn plane(n: usize, r: f64, l: f64, a: f64) -> DistanceMultiset<f64> {
    polygon_distances_squared(&PolygonSpec::new(n, r).unwrap(), &PlanePlacement::new(l, Angle::Radians(a)).unwrap())
        .unwrap()
}

fn ball(r: &mut ChaCha8Rng, radius: f64) -> SpacePlacement<f64> {
    loop {
        let v: [f64; 3] = [r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)];
        let n2: f64 = v.iter().map(|x| x * x).sum();
        if n2 <= 1.0 && n2 > 1e-6 {
            return SpacePlacement::new(radius * v[0], radius * v[1], radius * v[2]);
        }
    }
}

fn c1_master_formula() -> Outcome {
    let mut r = rng(1);
    let (mut worst, mut count) = (0.0f64, 0);
    for n in 3..=16 {
        for m in 1..n {
            for _ in 0..50 {
                let (rad, l, a) = (r.gen_range(1e-3..10.0), r.gen_range(1e-3..10.0), r.gen_range(0.0..10.0));
                let spec = PolygonSpec::new(n, rad).unwrap();
                let closed = power_sum_closed(&spec, m, &l).unwrap();
                let brute = power_sum_brute(&spec, m, &PlanePlacement::new(l, Angle::Radians(a)).unwrap()).unwrap();
                worst = worst.max((closed - brute).abs() / brute);
                count += 1;
            }
        }
    }
    Outcome { pass: worst < 1e-9, detail: format!("{count} cases, max relative error {worst:.2e}") }
}

fn c2_exact_interpolation() -> Outcome {
    let n = 24;
    let one = Rational::from_integer(1.into());
    let mut checked = 0;
    let mut bad = Vec::new();
    for m in 1..n {
        for l in 1..=(m as i64 + 1) {
            let l = Rational::from_integer(BigInt::from(l));
            let brute = power_sum_brute_cyclotomic(n, &one, &l, m, Turns::new(0, 1));
            let closed = power_sum_closed_sq(n, m, &one, &(&l * &l)).ok();
            checked += 1;
            if brute.is_none() || brute != closed {
                bad.push((m, l));
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("n=24, m=1..23, {checked} exact evaluations at L²=1,4,…,(m+1)², {} mismatches", bad.len()),
    }
}

struct AlphaScan {
    below_ok: bool,
    max_below: f64,
    passing: Vec<usize>,
    failing: Vec<(usize, f64)>,
    bound_holds: bool,
}

fn alpha_scan() -> AlphaScan {
    let mut s = AlphaScan { below_ok: true, max_below: 0.0, passing: vec![], failing: vec![], bound_holds: true };
    for n in 3..=12 {
        // any L; the variation peaks at L = R
        let mut best = 0.0f64;
        for k in 1..=40 {
            let l = k as f64 * 0.05;
            let at_n = spread(&alpha_samples(n, n, 1.0, l).unwrap());
            best = best.max(at_n);
            let below = spread(&alpha_samples(n, n - 1, 1.0, l).unwrap());
            s.max_below = s.max_below.max(below);
            s.below_ok &= below < 1e-9;
        }
        let bound = max_alpha_spread(n);
        s.bound_holds &= best <= bound * (1.0 + 1e-6) && rel(best, bound) < 1e-6;
        if best > 1e-3 {
            s.passing.push(n);
        } else {
            s.failing.push((n, best));
        }
    }
    s
}

fn c3_alpha_boundary(scan: &AlphaScan) -> Outcome {
    let failing: Vec<String> = scan.failing.iter().map(|(n, v)| format!("n={n}: {v:.2e}")).collect();
    Outcome {
        pass: scan.below_ok && scan.failing.is_empty(),
        detail: format!(
            "m=n-1 max spread {:.1e}; m=n spread > 0.1% for n={:?}; below 0.1% for {} (max over L is 4/(C(2n,n)+2))",
            scan.max_below,
            scan.passing,
            if failing.is_empty() { "none".to_string() } else { failing.join(", ") }
        ),
    }
}

fn c4_round_trips() -> Outcome {
    let mut r = rng(4);
    let mut exact_ok = 0;
    for _ in 0..100 {
        let q = |r: &mut ChaCha8Rng| Rational::new(BigInt::from(r.gen_range(1..=200)), BigInt::from(r.gen_range(1..=50)));
        let (r2, l2) = (q(&mut r), q(&mut r));
        let s2 = &r2 + &l2;
        let s4 = &s2 * &s2 + Rational::from_integer(2.into()) * &r2 * &l2;
        let b = recover_r2_l2(&s2, &s4).unwrap();
        let (hi, lo) = if r2 >= l2 { (r2, l2) } else { (l2, r2) };
        if b.plus == hi && b.minus == lo {
            exact_ok += 1;
        }
    }
    let (mut solved, mut recovered, mut worst) = (0, 0, 0.0f64);
    for n in [3usize, 4, 6] {
        for _ in 0..100 {
            let (rad, l, a) = (r.gen_range(0.1..10.0), r.gen_range(0.1..10.0), r.gen_range(0.0..6.28));
            let d = plane(n, rad, l, a);
            let b = solve_distances(n, &rad, &l, d.get(1)).unwrap();
            if b.plus.matches(&d, 1e-9) || b.minus.matches(&d, 1e-9) {
                solved += 1;
            }
            let c = recover_spec_from_distances(n, &d).unwrap();
            let e = (c.plus - rad * rad).abs().min((c.minus - rad * rad).abs()) / (rad * rad + l * l);
            worst = worst.max(e);
            if e < 1e-9 {
                recovered += 1;
            }
        }
    }
    Outcome {
        pass: exact_ok == 100 && solved == 300 && recovered == 300,
        detail: format!(
            "exact R²,L² {exact_ok}/100; solve {solved}/300; recover {recovered}/300 (max {worst:.1e})"
        ),
    }
}

fn c5_identity_suite() -> Outcome {
    let mut r = rng(5);
    let mut worst = 0.0f64;
    let mut count = 0;
    let mut note = |v: f64, scale: f64| {
        worst = worst.max(v.abs() / scale);
        count += 1;
    };
    for _ in 0..200 {
        let (rad, l, a) = (r.gen_range(0.1..10.0), r.gen_range(0.1..10.0), r.gen_range(0.0..6.28));
        let big = rad * rad + l * l;
        let n = r.gen_range(3..=12usize);
        let d = plane(n, rad, l, a);
        note(sum_of_squares_residual(&d, &rad, &l), n as f64 * big);
        let nf = n as f64;
        let (s2, s4, s6) = (d.power_sum(1) / nf, d.power_sum(2) / nf, d.power_sum(3) / nf);
        for (i, v) in polygon_average_residuals(&s2, &s4, (n >= 4).then_some(&s6), &(rad * rad)).into_iter().enumerate() {
            note(v, big.powi(if i == 0 { 2 } else { 3 }));
        }
        let t = plane(3, rad, l, a);
        let side = SideLength::of(&PolygonSpec::new(3, rad).unwrap()).unwrap();
        note(triangle_symmetric_residual(&t, &side).unwrap(), 16.0 * big * big);
        let s = plane(4, rad, l, a);
        let side = SideLength::of(&PolygonSpec::new(4, rad).unwrap()).unwrap();
        note(square_symmetric_residual(&s, &side).unwrap(), 16.0 * big * big);
        note(square_sixth_factorization_residual(&s).unwrap(), big.powi(3));
        for v in opposite_pair_sums(&s).unwrap() {
            note(v - 2.0 * big, big);
        }
        let d12 = plane(12, rad, l, a);
        for div in [2usize, 3, 4] {
            let spec = SubsetIdentitySpec::new(12, div).unwrap();
            for v in subset_identity_residuals(&spec, &d12, &rad, &l).unwrap() {
                note(v, div as f64 * big.powi(div as i32 - 1));
            }
        }
    }
    Outcome { pass: worst < 1e-7, detail: format!("{count} residuals, max relative {worst:.2e}") }
}

fn c6_solid_oracle() -> Outcome {
    let mut r = rng(6);
    let mut worst = 0.0f64;
    let mut witnesses = Vec::new();
    for kind in SolidKind::ALL {
        for _ in 0..100 {
            let spec = SolidSpec::new(kind, r.gen_range(0.2..5.0)).unwrap();
            let p = ball(&mut r, 2.0 * f64::sqrt(*spec.r_sq()));
            for m in 1..=kind.max_power_index() {
                let c = solid_power_sum_closed(&spec, m, &p.l_sq()).unwrap();
                let b = solid_power_sum_brute(&spec, m, &p).unwrap();
                worst = worst.max(rel(c, b));
            }
        }
        let w = direction_spread(kind, kind.max_power_index() + 1, 0.9).unwrap();
        witnesses.push(w > 1e-6);
    }
    Outcome {
        pass: worst < 1e-9 && witnesses.iter().all(|&w| w),
        detail: format!(
            "max relative error {worst:.2e}; direction witness at m=max+1 for {}/5 solids",
            witnesses.iter().filter(|&&w| w).count()
        ),
    }
}

fn c7_solid_relations() -> Outcome {
    let mut r = rng(7);
    let mut worst = 0.0f64;
    for kind in SolidKind::ALL {
        for _ in 0..50 {
            let spec = SolidSpec::new(kind, r.gen_range(0.2..5.0)).unwrap();
            let r2 = *spec.r_sq();
            let p = ball(&mut r, 2.0 * f64::sqrt(r2));
            let l2 = p.l_sq();
            let big = r2 + l2;
            let d = solid_distances_squared(&spec, &p);
            let avg = SolidAverages::from_distances(kind, &d);
            for (i, (_, v)) in solid_relation_residuals(kind, &avg, &r2).into_iter().enumerate() {
                worst = worst.max(v.abs() / big.powi([2, 3, 3, 4, 4, 5, 5][i]));
            }
            let b = recover_r2_l2_solid(&avg.s[0], &avg.s[1]).unwrap();
            worst = worst.max((b.plus - r2).abs().min((b.minus - r2).abs()) / big);
            let u = ball(&mut r, 1.0);
            let k = f64::sqrt(r2) / f64::sqrt(u.l_sq());
            let on = solid_distances_squared(&spec, &SpacePlacement::new(u.x * k, u.y * k, u.z * k));
            worst = worst.max(circumsphere_check(&on).abs() / (4.0 * kind.vertex_count() as f64 * r2).powi(2));
            if kind.has_antipodes() {
                for v in antipodal_pair_sums(kind, &d).unwrap() {
                    worst = worst.max((v - 2.0 * big).abs() / big);
                }
            }
            if kind == SolidKind::Cube {
                for v in cube_quadruple_residuals(&d, &r2, &l2).unwrap() {
                    worst = worst.max(v.abs() / (4.0 * big * big));
                }
            }
        }
    }
    let phi = QSqrt5::phi();
    let one = <QSqrt5 as Scalar>::one();
    let p2 = phi.square();
    let exact = p2 == phi.clone() + one.clone()
        && one.clone() + p2.square() == QSqrt5::from_int(3) * p2.clone()
        && p2 == (one + p2.clone()).square() / QSqrt5::from_int(5);
    Outcome {
        pass: worst < 1e-9 && exact,
        detail: format!("max relative residual {worst:.2e}; golden-ratio identities exact: {exact}"),
    }
}

fn c8_errata() -> Outcome {
    let checks = errata::check_all().unwrap();
    let parts: Vec<String> = checks
        .iter()
        .map(|c| format!("{} {:.1e}/{:.1e}", c.erratum.location, c.printed_residual, c.corrected_residual))
        .collect();
    Outcome {
        pass: checks.len() == 4 && checks.iter().all(|c| c.confirmed()),
        detail: format!("printed/corrected residuals: {}", parts.join("; ")),
    }
}

fn c9_rational_pipeline() -> Outcome {
    let p = sin_pi_24_minimal_polynomial();
    let at = p.eval_f64((std::f64::consts::PI / 24.0).sin()).abs();
    let roots = rational_root_test(&p);
    let cert = irreducibility_certificate(&p, 4);
    let mut quartic_worst = 0.0f64;
    let mut r = rng(9);
    for n in 3..=24usize {
        let x = (std::f64::consts::PI / n as f64).sin();
        for _ in 0..20 {
            let (s2, s4) = unit_polygon_averages(n, r.gen_range(0.0..5.0), r.gen_range(0.0..6.28)).unwrap();
            quartic_worst = quartic_worst.max(quartic_witness(&s2, &s4).unwrap().eval(&x).abs());
        }
    }
    let cert_text = match &cert {
        Ok(c) => format!("certificate at q={} (excludes degrees 1..={})", c.certifying_prime, c.excluded_up_to),
        Err(_) => "inconclusive".to_string(),
    };
    Outcome {
        pass: at < 1e-12
            && p.degree() == Some(8)
            && roots.is_empty()
            && cert.as_ref().is_ok_and(|c| c.excluded_up_to >= 4)
            && quartic_worst < 1e-8,
        detail: format!(
            "|p(sin π/24)| = {at:.1e}; rational roots: {}; {cert_text}; quartic max {quartic_worst:.1e}",
            roots.len()
        ),
    }
}

fn c10_cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_cycavg");
    let start = Instant::now();
    let run = || Command::new(bin).args(["verify", "--scope", "all", "--seed", "7"]).output().unwrap();
    let (a, b) = (run(), run());
    let took = start.elapsed();
    let ok = a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    Outcome {
        pass: ok,
        detail: format!(
            "exit {:?}/{:?}, identical: {}, {} bytes, two runs {:.2} s",
            a.status.code(),
            b.status.code(),
            a.stdout == b.stdout,
            a.stdout.len(),
            took.as_secs_f64()
        ),
    }
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    let mut run = |id: u32, title: &str, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let o = f();
        let took = t.elapsed();
        line(id, title, &o, took);
        results.push((id, o.pass, took));
    };
    let scan = alpha_scan();
    run(1, "master formula = brute force, n 3..16", &c1_master_formula);
    run(2, "exact identity by interpolation, n = 24", &c2_exact_interpolation);
    run(3, "α-dependence boundary at m = n", &|| c3_alpha_boundary(&scan));
    run(4, "round trips", &c4_round_trips);
    run(5, "polygon identity residuals", &c5_identity_suite);
    run(6, "solid oracle equivalence", &c6_solid_oracle);
    run(7, "solid relations and ℚ(√5) identities", &c7_solid_relations);
    run(8, "errata", &c8_errata);
    run(9, "24-gon pipeline", &c9_rational_pipeline);
    run(10, "CLI determinism", &c10_cli_determinism);

    let limits = [(1, 5.0), (2, 10.0), (5, 10.0), (10, 60.0)];
    let mut unexpected = Vec::new();
    for (id, pass, took) in &results {
        let slow = limits.iter().any(|(i, s)| i == id && took.as_secs_f64() > *s);
        if slow {
            unexpected.push(format!("criterion {id} too slow: {:.1} s", took.as_secs_f64()));
        }
        if *id == 3 {
            continue;
        }
        if !pass {
            unexpected.push(format!("criterion {id} failed"));
        }
    }
    // criterion 3 must fail only where the bound 4/(C(2n,n)+2) < 0.1% makes it impossible
    assert!(scan.below_ok, "m = n-1 sums vary with α");
    assert!(scan.bound_holds, "observed α-spread differs from 4/(C(2n,n)+2)");
    let impossible: Vec<usize> = (3..=12).filter(|&n| max_alpha_spread(n) <= 1e-3).collect();
    let failing: Vec<usize> = scan.failing.iter().map(|(n, _)| *n).collect();
    assert_eq!(failing, impossible);
    assert!(unexpected.is_empty(), "{unexpected:?}");
}
