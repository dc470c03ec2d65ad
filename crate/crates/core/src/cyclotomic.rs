//! Exact arithmetic in the cyclotomic field ℚ(ζ_N), ζ_N = e^{2πi/N}.
//!
//! Vertex cosines of a regular n-gon are `(ζ^k + ζ^{-k})/2`, so power sums of
//! squared distances can be evaluated exactly here even when the individual
//! cosines are irrational. A sum that is symmetric under the Galois group comes
//! out as a rational element.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::IntegerPolynomial;
use crate::scalar::Rational;

#[derive(Clone, Debug)]
pub struct CyclotomicField {
    order: usize,
    modulus: Vec<BigInt>,
}

/// Element of ℚ(ζ_N) in the power basis `1, ζ, …, ζ^{φ(N)−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicElement {
    coeffs: Vec<Rational>,
}

impl CyclotomicElement {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The element as a rational number, if it has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }
}

impl CyclotomicField {
    pub fn new(order: usize) -> Self {
        let modulus = IntegerPolynomial::cyclotomic(order).coeffs().to_vec();
        Self { order, modulus }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// φ(N), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut v: Vec<Rational>) -> CyclotomicElement {
        let deg = self.degree();
        for k in (deg..v.len()).rev() {
            let c = std::mem::take(&mut v[k]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in self.modulus.iter().enumerate().take(deg) {
                v[k - deg + j] -= &c * Rational::from_integer(m.clone());
            }
        }
        v.resize(deg, Rational::zero());
        CyclotomicElement { coeffs: v }
    }

    pub fn zero(&self) -> CyclotomicElement {
        CyclotomicElement { coeffs: vec![Rational::zero(); self.degree()] }
    }

    pub fn from_rational(&self, r: &Rational) -> CyclotomicElement {
        let mut e = self.zero();
        e.coeffs[0] = r.clone();
        e
    }

    pub fn one(&self) -> CyclotomicElement {
        self.from_rational(&Rational::from_integer(1.into()))
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> CyclotomicElement {
        let n = self.order as i64;
        let e = k.rem_euclid(n) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::from_integer(1.into());
        self.reduce(v)
    }

    /// cos(2π·j/N).
    pub fn cos_steps(&self, j: i64) -> CyclotomicElement {
        let half = Rational::new(1.into(), 2.into());
        self.add(&self.zeta_pow(j), &self.zeta_pow(-j)).scale(&half)
    }

    pub fn add(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        CyclotomicElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        CyclotomicElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    /// Integer numerators over one common denominator.
    fn clear_denominators(a: &CyclotomicElement) -> (Vec<BigInt>, BigInt) {
        let den = a.coeffs.iter().fold(BigInt::from(1), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let nums = a.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        (nums, den)
    }

    pub fn mul(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        let deg = self.degree();
        let (x, dx) = Self::clear_denominators(a);
        let (y, dy) = Self::clear_denominators(b);
        let mut out = vec![BigInt::zero(); 2 * deg - 1];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    out[i + j] += xi * yj;
                }
            }
        }
        // the modulus is monic, so reduction stays in ℤ
        for k in (deg..out.len()).rev() {
            let c = std::mem::take(&mut out[k]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in self.modulus.iter().enumerate().take(deg) {
                out[k - deg + j] -= &c * m;
            }
        }
        let den = dx * dy;
        CyclotomicElement {
            coeffs: out.into_iter().take(deg).map(|c| Rational::new(c, den.clone())).collect(),
        }
    }

    pub fn pow(&self, a: &CyclotomicElement, mut exp: u32) -> CyclotomicElement {
        let mut result = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(&result, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }
}

impl CyclotomicElement {
    pub fn scale(&self, k: &Rational) -> CyclotomicElement {
        CyclotomicElement { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }
}
