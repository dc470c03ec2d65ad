//! Exact arithmetic in the real quadratic field ℚ(√5).
//!
//! The golden ratio φ = (1+√5)/2 lives here, so the icosahedron and
//! dodecahedron coordinates, their circumradii and every power sum over them
//! are computed without rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

/// `a + b√5` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt5 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_ratios(a: (i64, i64), b: (i64, i64)) -> Self {
        let r = |(n, d): (i64, i64)| BigRational::new(BigInt::from(n), BigInt::from(d));
        Self::new(r(a), r(b))
    }

    pub fn sqrt5() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio (1+√5)/2.
    pub fn phi() -> Self {
        Self::from_ratios((1, 2), (1, 2))
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(5.into()) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: the larger of a² and 5b² wins
        let a2 = &self.a * &self.a;
        let b2 = Rational::from_integer(5.into()) * &self.b * &self.b;
        if a2 > b2 {
            sa
        } else {
            sb
        }
    }
}

impl From<Rational> for QSqrt5 {
    fn from(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }
}

impl Add for QSqrt5 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QSqrt5 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for QSqrt5 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let five = Rational::from_integer(5.into());
        Self::new(
            &self.a * &rhs.a + five * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Div for QSqrt5 {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt5)");
        let num = self * rhs.conjugate();
        Self::new(num.a / &n, num.b / n)
    }
}

impl Neg for QSqrt5 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl PartialOrd for QSqrt5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt5 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let b_abs = self.b.abs();
        let b_part = if b_abs.is_one() { "√5".to_string() } else { format!("{b_abs}√5") };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{b_part}")
        } else {
            let sign = if self.b.is_negative() { "-" } else { "+" };
            write!(f, "{}{sign}{b_part}", self.a)
        }
    }
}

mod backend {
    use std::cmp::Ordering;

    use num_bigint::BigInt;

    use super::QSqrt5;
    use crate::scalar::{rational_cos_turns, rational_sqrt, reduce_turns, Rational, Scalar, Turns};

    impl Scalar for QSqrt5 {
        const EXACT: bool = true;

        fn zero() -> Self {
            Self::new(Rational::zero(), Rational::zero())
        }
        fn one() -> Self {
            Self::new(Rational::one(), Rational::zero())
        }
        fn from_int(v: i64) -> Self {
            Self::from(Rational::from_integer(v.into()))
        }
        fn from_integer(v: &BigInt) -> Self {
            Self::from(Rational::from_integer(v.clone()))
        }
        fn from_rational(v: &Rational) -> Self {
            Self::from(v.clone())
        }
        fn from_f64(_: f64) -> Option<Self> {
            None
        }
        fn to_f64(&self) -> f64 {
            use num_traits::ToPrimitive;
            ToPrimitive::to_f64(&self.a).unwrap_or(f64::NAN)
                + ToPrimitive::to_f64(&self.b).unwrap_or(f64::NAN) * 5f64.sqrt()
        }

        fn sqrt(&self) -> Option<Self> {
            match self.signum() {
                Ordering::Less => return None,
                Ordering::Equal => return Some(Self::zero()),
                Ordering::Greater => {}
            }
            let two = Rational::from_integer(2.into());
            if self.b.is_zero() {
                if let Some(r) = rational_sqrt(&self.a) {
                    return Some(Self::from(r));
                }
                return rational_sqrt(&(&self.a / Rational::from_integer(5.into())))
                    .map(|r| Self::new(Rational::zero(), r));
            }
            // (x + y√5)² = x² + 5y² + 2xy√5, so x² solves t² − a·t + 5b²/4 = 0
            let s = rational_sqrt(&self.norm())?;
            for x2 in [(&self.a + &s) / &two, (&self.a - &s) / &two] {
                if x2.is_zero() {
                    continue;
                }
                if let Some(x) = rational_sqrt(&x2) {
                    let y = &self.b / (&two * &x);
                    let mut root = Self::new(x, y);
                    if root.signum() == Ordering::Less {
                        root = -root;
                    }
                    if root.clone() * root.clone() == *self {
                        return Some(root);
                    }
                }
            }
            None
        }

        fn cos_turns(t: Turns) -> Option<Self> {
            if let Some(r) = rational_cos_turns(t) {
                return Some(Self::from(r));
            }
            let t = reduce_turns(t);
            let (k, d) = (*t.numer(), *t.denom());
            // cos 72° = (√5−1)/4, cos 144° = −(√5+1)/4, cos 36° = (√5+1)/4, cos 108° = (1−√5)/4
            match (d, k) {
                (5, 1) | (5, 4) => Some(Self::from_ratios((-1, 4), (1, 4))),
                (5, 2) | (5, 3) => Some(Self::from_ratios((-1, 4), (-1, 4))),
                (10, 1) | (10, 9) => Some(Self::from_ratios((1, 4), (1, 4))),
                (10, 3) | (10, 7) => Some(Self::from_ratios((1, 4), (-1, 4))),
                _ => None,
            }
        }

        fn approx_eq(&self, other: &Self, _rel_tol: f64) -> bool {
            self == other
        }
        fn snap_nonnegative(&self, _scale: &Self) -> Self {
            self.clone()
        }
        fn render(&self) -> String {
            self.to_string()
        }
        fn is_zero(&self) -> bool {
            self.a.is_zero() && self.b.is_zero()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::QSqrt5;
    use crate::scalar::{Scalar, Turns};

    fn r(n: i64) -> QSqrt5 {
        QSqrt5::from_int(n)
    }

    #[test]
    fn golden_ratio_identities_hold_exactly() {
        let phi = QSqrt5::phi();
        let phi2 = phi.square();
        assert_eq!(phi2, phi.clone() + r(1));
        assert_eq!(r(1) + phi.powi(4), r(3) * phi2.clone());
        assert_eq!(phi2.clone(), (r(1) + phi2.clone()).square() / r(5));
        assert_eq!(r(1) / phi2.clone() + phi2, r(3));
    }

    #[test]
    fn ordering_agrees_with_floats() {
        let samples = [
            QSqrt5::from_ratios((1, 1), (-1, 2)),
            QSqrt5::from_ratios((-3, 1), (1, 1)),
            QSqrt5::from_ratios((9, 4), (-1, 1)),
            QSqrt5::from_ratios((0, 1), (2, 3)),
            QSqrt5::from_ratios((-1, 7), (0, 1)),
        ];
        for x in &samples {
            for y in &samples {
                let exact = x.cmp(y);
                let float = x.to_f64().partial_cmp(&y.to_f64()).unwrap();
                assert_eq!(exact, float, "{x} vs {y}");
            }
        }
    }

    #[test]
    fn sqrt_of_squares() {
        let phi = QSqrt5::phi();
        assert_eq!(phi.square().sqrt(), Some(phi.clone()));
        assert_eq!(r(5).sqrt(), Some(QSqrt5::sqrt5()));
        assert_eq!(r(9).sqrt(), Some(r(3)));
        let x = QSqrt5::from_ratios((3, 2), (-1, 3));
        assert_eq!(x.square().sqrt(), Some(x));
        assert_eq!(r(2).sqrt(), None);
        assert_eq!(r(-4).sqrt(), None);
    }

    #[test]
    fn fifth_turn_cosines() {
        for d in [5i64, 10] {
            for k in 0..d {
                let t = Turns::new(k, d);
                let exact = QSqrt5::cos_turns(t).unwrap();
                let float = <f64 as Scalar>::cos_turns(t).unwrap();
                assert!((exact.to_f64() - float).abs() < 1e-14, "{k}/{d}");
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(QSqrt5::phi().to_string(), "1/2+1/2√5");
        assert_eq!(QSqrt5::from_ratios((1, 1), (-1, 1)).to_string(), "1-√5");
        assert_eq!(QSqrt5::sqrt5().to_string(), "√5");
        assert_eq!(r(4).to_string(), "4");
    }
}
