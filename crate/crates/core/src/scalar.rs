//! Scalar backends.
//!
//! Every quantity in the library (circumradius, distances, averages) is a
//! [`Scalar`]: an ordered field element. Three backends are provided:
//!
//! - `f64`, the high-precision float backend (15+ significant digits);
//! - [`Rational`], exact arbitrary-precision rationals;
//! - [`QSqrt5`](crate::quadratic::QSqrt5), exact numbers `p + q√5`, needed by
//!   the icosahedron and dodecahedron whose coordinates involve the golden ratio.
//!
//! Cosines are the only transcendental input. Exact backends accept angles given
//! as rational fractions of a full turn and return a cosine only when it lies in
//! the field (Niven's list for `Rational`, plus the fifth and tenth turns for
//! `QSqrt5`).

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational backend.
pub type Rational = BigRational;

/// An angle expressed as a rational fraction of a full turn.
pub type Turns = Ratio<i64>;

/// Relative tolerance below which a tiny negative float is treated as zero
/// (for example a Heron product of a degenerate triangle).
pub const SNAP_TOLERANCE: f64 = 1e-9;

/// Default relative tolerance for float comparisons.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whether arithmetic in this backend is exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_integer(v: &BigInt) -> Self;
    fn from_rational(v: &Rational) -> Self;

    /// Converts a float. Exact backends refuse, so no rounding error can leak
    /// into an exact computation.
    fn from_f64(v: f64) -> Option<Self>;
    fn to_f64(&self) -> f64;

    /// Square root when it exists in the backend: floats need a nonnegative
    /// argument, exact backends need a perfect square.
    fn sqrt(&self) -> Option<Self>;

    /// `cos(2π·t)` when representable.
    fn cos_turns(t: Turns) -> Option<Self>;

    /// Equality up to a relative tolerance. Exact backends ignore the tolerance.
    fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool;

    /// Maps a float that is negative only by rounding (relative to `scale`) to
    /// zero. Identity in exact backends.
    fn snap_nonnegative(&self, scale: &Self) -> Self;

    /// Output form: 12 significant digits for floats, reduced fractions for
    /// exact values.
    fn render(&self) -> String;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn powi(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        result
    }
}

/// Reduces a turn count into `[0, 1)`.
pub fn reduce_turns(t: Turns) -> Turns {
    let r = t - t.floor();
    if r < Turns::zero() {
        r + Turns::one()
    } else {
        r
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(v: &Rational) -> Option<Rational> {
    if Signed::is_negative(v) {
        return None;
    }
    let (n, d) = (v.numer(), v.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

/// Parses `p`, `p/q` or a finite decimal such as `-1.25` or `3e-2` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| Error::NonRationalInput)?;
        let d: BigInt = d.trim().parse().map_err(|_| Error::NonRationalInput)?;
        if Zero::is_zero(&d) {
            return Err(Error::NonRationalInput);
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| Error::NonRationalInput)?),
        None => (s, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if !frac.chars().all(|c| c.is_ascii_digit()) || (int.is_empty() && frac.is_empty()) {
        return Err(Error::NonRationalInput);
    }
    let int = if matches!(int, "" | "-" | "+") { format!("{int}0") } else { int.to_string() };
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| Error::NonRationalInput)?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, (-scale) as usize))
    })
}

/// Rational cosines of rational turns (Niven): only multiples of 1/4 and 1/6.
pub(crate) fn rational_cos_turns(t: Turns) -> Option<Rational> {
    let t = reduce_turns(t);
    let (k, d) = (*t.numer(), *t.denom());
    let q = |n: i64, m: i64| Rational::new(BigInt::from(n), BigInt::from(m));
    match d {
        1 => Some(q(1, 1)),
        2 => Some(q(-1, 1)),
        3 => Some(q(-1, 2)),
        4 => Some(q(0, 1)),
        6 => {
            debug_assert!(k == 1 || k == 5);
            Some(q(1, 2))
        }
        _ => None,
    }
}

/// `%.12g`-style rendering of a float.
pub fn format_g12(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_fraction(&format!("{v:.decimals$}"))
    } else {
        let s = format!("{v:.11e}");
        match s.split_once('e') {
            Some((mantissa, e)) => format!("{}e{}", trim_fraction(mantissa), e),
            None => s,
        }
    }
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn from_integer(v: &BigInt) -> Self {
        ToPrimitive::to_f64(v).unwrap_or(f64::NAN)
    }
    fn from_rational(v: &Rational) -> Self {
        ToPrimitive::to_f64(v).unwrap_or(f64::NAN)
    }
    fn from_f64(v: f64) -> Option<Self> {
        Some(v)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| f64::sqrt(*self))
    }
    fn cos_turns(t: Turns) -> Option<Self> {
        let r = reduce_turns(t);
        Some((TAU * (*r.numer() as f64) / (*r.denom() as f64)).cos())
    }
    fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        let diff = (self - other).abs();
        diff == 0.0 || diff <= rel_tol * f64::abs(*self).max(f64::abs(*other))
    }
    fn snap_nonnegative(&self, scale: &Self) -> Self {
        if *self < 0.0 && -*self <= SNAP_TOLERANCE * f64::abs(*scale) {
            0.0
        } else {
            *self
        }
    }
    fn render(&self) -> String {
        format_g12(*self)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_integer(v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }
    fn from_rational(v: &Rational) -> Self {
        v.clone()
    }
    fn from_f64(_: f64) -> Option<Self> {
        None
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }
    fn cos_turns(t: Turns) -> Option<Self> {
        rational_cos_turns(t)
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
        Zero::is_zero(self)
    }
}

/// Evaluation angle. Exact backends need [`Angle::Turns`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Angle {
    Radians(f64),
    Turns(Turns),
}

impl Angle {
    pub fn zero() -> Self {
        Angle::Turns(Turns::zero())
    }

    pub fn from_degrees(deg: f64) -> Self {
        Angle::Radians(deg.to_radians())
    }

    pub fn radians(&self) -> f64 {
        match self {
            Angle::Radians(r) => *r,
            Angle::Turns(t) => TAU * (*t.numer() as f64) / (*t.denom() as f64),
        }
    }

    /// The angle minus `t` turns.
    pub fn minus_turns(&self, t: Turns) -> Angle {
        match self {
            Angle::Radians(r) => Angle::Radians(r - TAU * (*t.numer() as f64) / (*t.denom() as f64)),
            Angle::Turns(u) => Angle::Turns(*u - t),
        }
    }

    pub fn cos<S: Scalar>(&self) -> Result<S> {
        match self {
            Angle::Turns(t) => {
                S::cos_turns(*t).ok_or(Error::NotExact("cosine of this angle is irrational"))
            }
            Angle::Radians(r) => {
                S::from_f64(r.cos()).ok_or(Error::NotExact("angle given in radians"))
            }
        }
    }

    pub fn sin_f64(&self) -> f64 {
        self.radians().sin()
    }
}
