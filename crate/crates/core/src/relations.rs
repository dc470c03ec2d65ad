//! Identities and solvers for particular polygons: the symmetric relations of
//! the triangle and square, the distance systems for `n = 3, 4, 6`, recovery
//! of `R²` and `L²` from distances, and identities on vertex subsets.

use crate::error::{Error, Result};
use crate::geometry::{heron_area_16sq, DistanceMultiset, PolygonSpec};
use crate::polygon::polygon_mean_unchecked;
use crate::scalar::Scalar;

/// The two values of a `±` formula.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchPair<T> {
    pub plus: T,
    pub minus: T,
}

impl<T> BranchPair<T> {
    pub fn both(&self) -> [&T; 2] {
        [&self.plus, &self.minus]
    }
}

/// Polygon side, stored squared so exact backends stay rational.
#[derive(Clone, Debug, PartialEq)]
pub struct SideLength<S> {
    pub a_sq: S,
}

impl<S: Scalar> SideLength<S> {
    pub fn new(a_sq: S) -> Result<Self> {
        if !(a_sq.clone() > S::zero()) {
            return Err(Error::InvalidSpec("side length must be positive".into()));
        }
        Ok(Self { a_sq })
    }

    pub fn of(spec: &PolygonSpec<S>) -> Result<Self> {
        Self::new(spec.side_sq()?)
    }
}

/// `Σ d_i² − n(R² + L²)`.
pub fn sum_of_squares_residual<S: Scalar>(d: &DistanceMultiset<S>, r: &S, l: &S) -> S {
    d.power_sum(1) - S::from_int(d.len() as i64) * (r.square() + l.square())
}

/// `3(d₁⁴ + d₂⁴ + d₃⁴ + a⁴) − (d₁² + d₂² + d₃² + a²)²`.
pub fn triangle_symmetric_residual<S: Scalar>(d: &DistanceMultiset<S>, a: &SideLength<S>) -> Result<S> {
    d.expect_len(3)?;
    Ok(S::from_int(3) * (d.power_sum(2) + a.a_sq.square()) - (d.power_sum(1) + a.a_sq.clone()).square())
}

/// `4(Σd⁴ + 3a⁴) − (Σd² + 2a²)²`.
pub fn square_symmetric_residual<S: Scalar>(d: &DistanceMultiset<S>, a: &SideLength<S>) -> Result<S> {
    d.expect_len(4)?;
    let a2 = a.a_sq.clone();
    Ok(S::from_int(4) * (d.power_sum(2) + S::from_int(3) * a2.square())
        - (d.power_sum(1) + S::from_int(2) * a2).square())
}

fn checked_root<S: Scalar>(v: &S, scale: &S, err: Error) -> Result<S> {
    let v = v.snap_nonnegative(scale);
    if v.is_negative() {
        return Err(err);
    }
    v.sqrt().ok_or(Error::NotExact("area term is irrational"))
}

/// All `n` squared distances from `R`, `L` and `d₁²`, for `n ∈ {3, 4, 6}`.
///
/// `plus` is the branch in which `d₂²` takes the `+` sign. For a point at
/// polar angle α with `sin α > 0` the geometric branch is `minus`.
pub fn solve_distances<S: Scalar>(
    n: usize,
    r: &S,
    l: &S,
    d1_sq: &S,
) -> Result<BranchPair<DistanceMultiset<S>>> {
    if !matches!(n, 3 | 4 | 6) {
        return Err(Error::UnsupportedN(n));
    }
    let (r2, l2) = (r.square(), l.square());
    let a = r2.clone() + l2.clone();
    let h = heron_area_16sq(&r2, &l2, d1_sq);
    let scale = a.square();
    let half = S::from_ratio(1, 2);
    let two = S::from_int(2);
    let three = S::from_int(3);
    let d1 = d1_sq.clone();
    let build = |sign: i64| -> Result<DistanceMultiset<S>> {
        let v = match n {
            3 => {
                let t = S::from_int(sign) * checked_root(&(three.clone() * h.clone()), &scale, Error::Unattainable)?;
                let base = three.clone() * a.clone() - d1.clone();
                vec![
                    d1.clone(),
                    half.clone() * (base.clone() + t.clone()),
                    half.clone() * (base - t),
                ]
            }
            4 => {
                let s = S::from_int(sign) * checked_root(&h, &scale, Error::Unattainable)?;
                vec![
                    d1.clone(),
                    a.clone() + s.clone(),
                    two.clone() * a.clone() - d1.clone(),
                    a.clone() - s,
                ]
            }
            _ => {
                let t = S::from_int(sign) * checked_root(&(three.clone() * h.clone()), &scale, Error::Unattainable)?;
                let near = a.clone() + d1.clone();
                let far = three.clone() * a.clone() - d1.clone();
                vec![
                    d1.clone(),
                    half.clone() * (near.clone() + t.clone()),
                    half.clone() * (far.clone() + t.clone()),
                    two.clone() * a.clone() - d1.clone(),
                    half.clone() * (far - t.clone()),
                    half.clone() * (near - t),
                ]
            }
        };
        DistanceMultiset::new(v.into_iter().map(|x| x.snap_nonnegative(&scale)).collect())
            .map_err(|_| Error::Unattainable)
    };
    Ok(BranchPair { plus: build(1)?, minus: build(-1)? })
}

/// The two candidates for `R²` recovered from a distance multiset; the other
/// member of each pair is `L²` (`R²` and `L²` enter symmetrically).
pub fn recover_spec_from_distances<S: Scalar>(n: usize, d: &DistanceMultiset<S>) -> Result<BranchPair<S>> {
    d.expect_len(n)?;
    let g = |i: usize| d.get(i).clone();
    let three = S::from_int(3);
    let inconsistent = Error::InconsistentDistances(n);
    let scale = d.power_sum(1).square();
    match n {
        3 => {
            let h = heron_area_16sq(&g(1), &g(2), &g(3));
            let root = checked_root(&(three * h), &scale, inconsistent)?;
            Ok(sixth_split(&d.power_sum(1), &root))
        }
        4 => {
            let two = S::from_int(2);
            let window = |x: usize, y: usize, z: usize| {
                (g(x) + g(z), heron_area_16sq(&g(x), &(two.clone() * g(y)), &g(z)))
            };
            let (s1, h1) = window(1, 2, 3);
            let (s2, h2) = window(2, 3, 4);
            if !close(&s1, &s2, &scale) || !close(&h1, &h2, &scale) {
                return Err(inconsistent);
            }
            let t1 = checked_root(&h1, &scale, inconsistent)?;
            let four = S::from_int(4);
            Ok(BranchPair {
                plus: (s1.clone() + t1.clone()) / four.clone(),
                minus: (s1 - t1) / four,
            })
        }
        6 => {
            let odd = (g(1) + g(3) + g(5), heron_area_16sq(&g(1), &g(3), &g(5)));
            let even = (g(2) + g(4) + g(6), heron_area_16sq(&g(2), &g(4), &g(6)));
            if !close(&odd.0, &even.0, &scale) || !close(&odd.1, &even.1, &scale) {
                return Err(inconsistent);
            }
            // A₁A₃A₅ is an equilateral triangle with the same R and L
            let root = checked_root(&(three * odd.1), &scale, inconsistent)?;
            Ok(sixth_split(&odd.0, &root))
        }
        _ => Err(Error::UnsupportedN(n)),
    }
}

fn close<S: Scalar>(x: &S, y: &S, scale: &S) -> bool {
    if S::EXACT {
        return x == y;
    }
    (x.to_f64() - y.to_f64()).abs() <= 1e-9 * scale.to_f64().abs().max(1e-300)
}

/// `(1/6)(s ± root)`.
fn sixth_split<S: Scalar>(s: &S, root: &S) -> BranchPair<S> {
    let six = S::from_int(6);
    BranchPair {
        plus: (s.clone() + root.clone()) / six.clone(),
        minus: (s.clone() - root.clone()) / six,
    }
}

/// Sums `d_i² + d_{i+k}²` for `i = 1..k`, `n = 2k`. Each equals `2(R² + L²)`.
pub fn opposite_pair_sums<S: Scalar>(d: &DistanceMultiset<S>) -> Result<Vec<S>> {
    let n = d.len();
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    let k = n / 2;
    Ok((1..=k).map(|i| d.get(i).clone() + d.get(i + k).clone()).collect())
}

/// Splits an `n`-gon into `parameter` interleaved regular `divisor`-gons
/// `A_j, A_{j+parameter}, …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetIdentitySpec {
    pub n: usize,
    pub divisor: usize,
    pub parameter: usize,
}

impl SubsetIdentitySpec {
    pub fn new(n: usize, divisor: usize) -> Result<Self> {
        if !(2..=5).contains(&divisor) || n == 0 || n % divisor != 0 {
            return Err(Error::DivisorMismatch { n, divisor });
        }
        Ok(Self { n, divisor, parameter: n / divisor })
    }

    /// Power indices `m` whose subset sums are checked.
    pub fn powers(&self) -> std::ops::Range<usize> {
        1..self.divisor
    }

    /// 1-based vertex indices of subset `j ∈ 1..=parameter`.
    pub fn subset(&self, j: usize) -> Vec<usize> {
        (0..self.divisor).map(|t| j + t * self.parameter).collect()
    }
}

/// For every subset and every `m` in [`SubsetIdentitySpec::powers`], the
/// residual `Σ_subset d^{2m} − divisor·S^(2m)(R, L)`. With `divisor = 4` the
/// opposite-pair residuals `d_j² + d_{j+2p}² − 2(R² + L²)` follow.
pub fn subset_identity_residuals<S: Scalar>(
    spec: &SubsetIdentitySpec,
    d: &DistanceMultiset<S>,
    r: &S,
    l: &S,
) -> Result<Vec<S>> {
    d.expect_len(spec.n)?;
    let (r2, l2) = (r.square(), l.square());
    let k = S::from_int(spec.divisor as i64);
    let mut out = Vec::new();
    for j in 1..=spec.parameter {
        let idx = spec.subset(j);
        for m in spec.powers() {
            let sum = idx.iter().fold(S::zero(), |acc, &i| acc + d.get(i).powi(m as u32));
            out.push(sum - k.clone() * polygon_mean_unchecked(m, &r2, &l2));
        }
    }
    if spec.divisor == 4 {
        let two_a = S::from_int(2) * (r2 + l2);
        for j in 1..=2 * spec.parameter {
            let pair = d.get(j).clone() + d.get(j + 2 * spec.parameter).clone();
            out.push(pair - two_a.clone());
        }
    }
    Ok(out)
}

/// `3(d₁²+d₂²−d₃²−d₄²)(d₁²+d₃²−d₂²−d₄²)(d₁²+d₄²−d₂²−d₃²)`.
pub fn square_sixth_factorization_residual<S: Scalar>(d: &DistanceMultiset<S>) -> Result<S> {
    d.expect_len(4)?;
    let g = |i: usize| d.get(i).clone();
    Ok(S::from_int(3)
        * (g(1) + g(2) - g(3) - g(4))
        * (g(1) + g(3) - g(2) - g(4))
        * (g(1) + g(4) - g(2) - g(3)))
}
