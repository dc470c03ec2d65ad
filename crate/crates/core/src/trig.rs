//! Direct-summation trigonometric sums over the vertex directions of a
//! regular n-gon. These are float oracles; they never use the closed forms.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_traits::One;

use crate::polygon::binomial;
use crate::scalar::Rational;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrigSumSpec {
    pub n: usize,
    pub m: usize,
    pub alpha: f64,
}

impl TrigSumSpec {
    pub fn new(n: usize, m: usize, alpha: f64) -> Self {
        assert!(n >= 1 && m >= 1, "n and m must be positive");
        Self { n, m, alpha }
    }

    fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |k| self.alpha - k as f64 * TAU / self.n as f64)
    }
}

/// `Σ_{k=1}^{n} cos(m(α − (k−1)·2π/n))`.
pub fn multiple_angle_cosine_sum(s: &TrigSumSpec) -> f64 {
    s.angles().map(|t| (s.m as f64 * t).cos()).sum()
}

/// `Σ_{k=1}^{n} cos^m(α − (k−1)·2π/n)`.
pub fn cosine_power_sum(s: &TrigSumSpec) -> f64 {
    s.angles().map(|t| t.cos().powi(s.m as i32)).sum()
}

/// Value of [`cosine_power_sum`] predicted for `m < n`: zero for odd `m`,
/// `n·C(m, m/2)/2^m` for even `m`.
pub fn cosine_power_sum_closed(n: usize, m: usize) -> Rational {
    if m % 2 == 1 {
        return Rational::from_integer(0.into());
    }
    Rational::new(
        BigInt::from(n) * binomial(m, m / 2),
        BigInt::one() << m,
    )
}

/// Power reduction of `cos^m θ` as `(harmonic, coefficient)` pairs, highest
/// harmonic first. Harmonic `0` is the constant term (even `m` only).
pub fn power_reduction_coefficients(m: usize) -> Vec<(usize, Rational)> {
    assert!(m >= 1, "m must be positive");
    let denom = BigInt::one() << m;
    let mut out: Vec<(usize, Rational)> = (0..m.div_ceil(2))
        .map(|k| (m - 2 * k, Rational::new(BigInt::from(2) * binomial(m, k), denom.clone())))
        .collect();
    if m % 2 == 0 {
        out.push((0, Rational::new(binomial(m, m / 2), denom)));
    }
    out
}

/// Evaluates a power-reduction expansion at θ.
pub fn eval_harmonics(terms: &[(usize, Rational)], theta: f64) -> f64 {
    use num_traits::ToPrimitive;
    terms
        .iter()
        .map(|(h, c)| c.to_f64().unwrap_or(f64::NAN) * (*h as f64 * theta).cos())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn multiple_angle_examples() {
        assert!(multiple_angle_cosine_sum(&TrigSumSpec::new(5, 2, 0.7)).abs() < 1e-10);
        assert!((multiple_angle_cosine_sum(&TrigSumSpec::new(3, 3, 0.0)) - 3.0).abs() < 1e-12);
        assert!((multiple_angle_cosine_sum(&TrigSumSpec::new(1, 1, 0.0)) - 1.0).abs() < 1e-15);
        // m a multiple of n gives n·cos(mα)
        let s = TrigSumSpec::new(4, 8, 0.3);
        assert!((multiple_angle_cosine_sum(&s) - 4.0 * (8.0f64 * 0.3).cos()).abs() < 1e-12);
    }

    #[test]
    fn cosine_power_examples() {
        assert!((cosine_power_sum(&TrigSumSpec::new(4, 2, 1.1)) - 2.0).abs() < 1e-12);
        assert_eq!(cosine_power_sum_closed(4, 2), q(2, 1));
        for alpha in [0.0, 0.4, 2.9] {
            assert!(cosine_power_sum(&TrigSumSpec::new(5, 3, alpha)).abs() < 1e-12);
        }
        // cos⁴ has harmonics 4, 2, 0 and none is a multiple of 3, so n=3,
        // m=4 is still constant (sum 9/8); m=3 carries cos 3θ
        let a = cosine_power_sum(&TrigSumSpec::new(3, 4, 0.0));
        let b = cosine_power_sum(&TrigSumSpec::new(3, 4, 0.3));
        assert!((a - b).abs() < 1e-12 && (a - 9.0 / 8.0).abs() < 1e-12);
        let a = cosine_power_sum(&TrigSumSpec::new(3, 3, 0.0));
        let b = cosine_power_sum(&TrigSumSpec::new(3, 3, 0.3));
        assert!((a - b).abs() > 1e-3);
    }

    #[test]
    fn power_reduction_examples() {
        assert_eq!(power_reduction_coefficients(2), vec![(2, q(1, 2)), (0, q(1, 2))]);
        assert_eq!(power_reduction_coefficients(3), vec![(3, q(1, 4)), (1, q(3, 4))]);
        assert_eq!(power_reduction_coefficients(1), vec![(1, q(1, 1))]);
    }

    #[test]
    fn power_reduction_reproduces_cos_power() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in 1..=16 {
            let terms = power_reduction_coefficients(m);
            for _ in 0..100 {
                let theta: f64 = rng.gen_range(-10.0..10.0);
                let direct = theta.cos().powi(m as i32);
                assert!((eval_harmonics(&terms, theta) - direct).abs() < 1e-12, "m={m}");
            }
        }
    }

    #[test]
    fn lemma_sweeps() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..=24 {
            for m in 1..n {
                let closed = cosine_power_sum_closed(n, m).to_f64().unwrap();
                for _ in 0..20 {
                    let s = TrigSumSpec::new(n, m, rng.gen_range(0.0..TAU));
                    assert!(multiple_angle_cosine_sum(&s).abs() < 1e-9);
                    let v = cosine_power_sum(&s);
                    assert!((v - closed).abs() <= 1e-9 * closed.abs().max(1.0), "n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn dependence_on_alpha_at_m_equal_n() {
        for n in 1..=12 {
            let vals: Vec<f64> = (0..64)
                .map(|k| cosine_power_sum(&TrigSumSpec::new(n, n, k as f64 * TAU / 64.0 / n as f64)))
                .collect();
            let spread = vals.iter().cloned().fold(f64::MIN, f64::max)
                - vals.iter().cloned().fold(f64::MAX, f64::min);
            assert!(spread > 0.01, "n={n}");
        }
    }
}
