//! Certificates that an integer polynomial has no rational factor of small
//! degree.
//!
//! Three tests are tried in order, all over primes `q < 200` that do not
//! divide the leading coefficient and keep the reduction squarefree:
//!
//! 1. `p mod q` is irreducible;
//! 2. the factor degrees mod `q`, over up to ten primes, leave no common
//!    achievable degree in `1..=k` (a factor over ℚ reduces to a product of
//!    factors mod every `q`, so its degree is a subset sum at every prime);
//! 3. at a prime where `p` splits into distinct linear factors, the roots are
//!    lifted to `q^e` beyond the coefficient bound and every product of at
//!    most `k` of them is tested for exact division over ℤ.
//!
//! The second test can never succeed when every Frobenius element has small
//! order, which is what happens for `sin(π/24)`; the third test settles it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntegerPolynomial;

pub const PRIME_BOUND: u64 = 200;
const MAX_PATTERN_PRIMES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateMethod {
    IrreducibleModPrime,
    DegreePatterns { primes: Vec<(u64, Vec<usize>)> },
    HenselRecombination { precision_exponent: u32, subsets_tried: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub degree: usize,
    /// Every rational factor of positive degree has degree outside `1..=excluded_up_to`.
    pub excluded_up_to: usize,
    pub certifying_prime: u64,
    /// Degrees of the irreducible factors modulo the certifying prime.
    pub factor_degrees: Vec<usize>,
    pub method: CertificateMethod,
    pub log: Vec<String>,
}

impl Certificate {
    /// Whether the certificate shows irreducibility over ℚ.
    pub fn proves_irreducible(&self) -> bool {
        2 * self.excluded_up_to >= self.degree
    }
}

pub fn primes_below(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&q| (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)).collect()
}

/// Dense polynomial over 𝔽_q, ascending, normalised.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ModPoly {
    c: Vec<u64>,
}

struct Fq {
    q: u64,
}

impl Fq {
    fn norm(&self, mut c: Vec<u64>) -> ModPoly {
        for x in c.iter_mut() {
            *x %= self.q;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { c }
    }

    fn reduce(&self, p: &IntegerPolynomial) -> ModPoly {
        let qb = BigInt::from(self.q);
        self.norm(
            p.coeffs()
                .iter()
                .map(|c| c.mod_floor(&qb).to_u64().expect("reduced"))
                .collect(),
        )
    }

    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.q - 2)
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        b %= self.q;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.q;
            }
            b = b * b % self.q;
            e >>= 1;
        }
        r
    }

    fn deg(p: &ModPoly) -> Option<usize> {
        p.c.len().checked_sub(1)
    }

    fn sub(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.c.len().max(b.c.len());
        self.norm(
            (0..n)
                .map(|k| {
                    let x = a.c.get(k).copied().unwrap_or(0);
                    let y = b.c.get(k).copied().unwrap_or(0);
                    (x + self.q - y) % self.q
                })
                .collect(),
        )
    }

    fn mul(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        if a.c.is_empty() || b.c.is_empty() {
            return ModPoly { c: vec![] };
        }
        let mut out = vec![0u64; a.c.len() + b.c.len() - 1];
        for (i, x) in a.c.iter().enumerate() {
            for (j, y) in b.c.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.q;
            }
        }
        self.norm(out)
    }

    fn div_rem(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
        let db = Self::deg(b).expect("nonzero divisor");
        let inv = self.inv(b.c[db]);
        let mut rem = a.c.clone();
        if rem.len() <= db {
            return (ModPoly { c: vec![] }, a.clone());
        }
        let mut quot = vec![0u64; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = rem[k] * inv % self.q;
            if c == 0 {
                continue;
            }
            for (j, d) in b.c.iter().enumerate() {
                rem[k - db + j] = (rem[k - db + j] + self.q - c * d % self.q) % self.q;
            }
            quot[k - db] = c;
        }
        (self.norm(quot), self.norm(rem))
    }

    fn monic(&self, a: &ModPoly) -> ModPoly {
        match a.c.last() {
            Some(&l) => {
                let inv = self.inv(l);
                self.norm(a.c.iter().map(|x| x * inv).collect())
            }
            None => a.clone(),
        }
    }

    fn gcd(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.c.is_empty() {
            let r = self.div_rem(&a, &b).1;
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    fn derivative(&self, a: &ModPoly) -> ModPoly {
        self.norm(a.c.iter().enumerate().skip(1).map(|(k, c)| c * (k as u64 % self.q)).collect())
    }

    fn pow_mod(&self, base: &ModPoly, mut e: u64, m: &ModPoly) -> ModPoly {
        let mut result = ModPoly { c: vec![1] };
        let mut b = self.div_rem(base, m).1;
        while e > 0 {
            if e & 1 == 1 {
                result = self.div_rem(&self.mul(&result, &b), m).1;
            }
            b = self.div_rem(&self.mul(&b, &b), m).1;
            e >>= 1;
        }
        result
    }

    /// Degrees of the irreducible factors of a squarefree polynomial.
    fn factor_degrees(&self, f: &ModPoly) -> Vec<usize> {
        let x = ModPoly { c: vec![0, 1] };
        let mut f = self.monic(f);
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut i = 1;
        while Self::deg(&f).unwrap_or(0) >= 2 * i {
            h = self.pow_mod(&h, self.q, &f);
            let g = self.gcd(&f, &self.sub(&h, &x));
            let dg = Self::deg(&g).unwrap_or(0);
            if dg > 0 {
                out.extend(std::iter::repeat_n(i, dg / i));
                f = self.div_rem(&f, &g).0;
                h = self.div_rem(&h, &f).1;
            }
            i += 1;
        }
        if let Some(d) = Self::deg(&f).filter(|&d| d > 0) {
            out.push(d);
        }
        out.sort_unstable();
        out
    }

    fn roots(&self, f: &ModPoly) -> Vec<u64> {
        (0..self.q)
            .filter(|&r| f.c.iter().rev().fold(0, |acc, c| (acc * r + c) % self.q) == 0)
            .collect()
    }
}

/// Achievable sums of sub-multisets of `degrees`, as a bit set over `0..=n`.
fn subset_sums(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut can = vec![false; n + 1];
    can[0] = true;
    for &d in degrees {
        for s in (d..=n).rev() {
            if can[s - d] {
                can[s] = true;
            }
        }
    }
    can
}

fn modulus_bits_needed(p: &IntegerPolynomial) -> BigInt {
    // any factor g of p over ℤ has ‖g‖∞ ≤ 2^deg ‖p‖₂; the scaled factor
    // lc(p)/lc(g)·g is bounded by lc(p) times that
    let norm_sq: BigInt = p.coeffs().iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    let deg = p.degree().unwrap_or(0);
    BigInt::from(2) * p.leading().abs() * (BigInt::one() << deg) * norm
}

fn symmetric(v: &BigInt, m: &BigInt) -> BigInt {
    let r = v.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Newton lift of a simple root of `p mod q` to a root mod `q^e`.
fn lift_root(p: &IntegerPolynomial, r: u64, q: u64, e: u32) -> BigInt {
    let dp = p.derivative();
    let mut root = BigInt::from(r);
    let mut modulus = BigInt::from(q);
    let target = BigInt::from(q).pow(e);
    while modulus < target {
        modulus = (&modulus * &modulus).min(target.clone());
        let fv = eval_mod(p, &root, &modulus);
        let dv = eval_mod(&dp, &root, &modulus);
        let inv = mod_inverse(&dv, &modulus).expect("simple root");
        root = (root - fv * inv).mod_floor(&modulus);
    }
    root
}

fn eval_mod(p: &IntegerPolynomial, x: &BigInt, m: &BigInt) -> BigInt {
    p.coeffs().iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Certifies that `p` has no rational factor of degree `1..=max_factor_degree`.
pub fn irreducibility_certificate(p: &IntegerPolynomial, max_factor_degree: usize) -> Result<Certificate> {
    let n = p.degree().ok_or(Error::InvalidSpec("zero polynomial".into()))?;
    if n == 0 {
        return Err(Error::InvalidSpec("constant polynomial".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::InvalidSpec("polynomial is not squarefree".into()));
    }
    let p = p.primitive_part();
    let k = max_factor_degree.min(n - 1).max(if n == 1 { 0 } else { 1 });
    let mut log = Vec::new();
    let lead = p.leading();
    let mut possible = vec![true; n + 1];
    let mut used: Vec<(u64, Vec<usize>)> = Vec::new();
    let mut split_prime = None;

    for q in primes_below(PRIME_BOUND) {
        if (&lead % BigInt::from(q)).is_zero() {
            log.push(format!("q={q}: divides leading coefficient, skipped"));
            continue;
        }
        let f = Fq { q };
        let pq = f.reduce(&p);
        if Fq::deg(&f.gcd(&pq, &f.derivative(&pq))) != Some(0) {
            log.push(format!("q={q}: reduction not squarefree, skipped"));
            continue;
        }
        let degrees = f.factor_degrees(&pq);
        log.push(format!("q={q}: factor degrees {degrees:?}"));
        if degrees.len() == 1 {
            return Ok(Certificate {
                degree: n,
                excluded_up_to: n - 1,
                certifying_prime: q,
                factor_degrees: degrees,
                method: CertificateMethod::IrreducibleModPrime,
                log,
            });
        }
        if split_prime.is_none() && degrees.iter().all(|&d| d == 1) {
            split_prime = Some(q);
        }
        if used.len() < MAX_PATTERN_PRIMES {
            let sums = subset_sums(&degrees, n);
            for (s, ok) in possible.iter_mut().enumerate() {
                *ok &= sums[s];
            }
            used.push((q, degrees.clone()));
            if (1..=k).all(|d| !possible[d]) {
                return Ok(Certificate {
                    degree: n,
                    excluded_up_to: k,
                    certifying_prime: q,
                    factor_degrees: degrees,
                    method: CertificateMethod::DegreePatterns { primes: used },
                    log,
                });
            }
        }
    }
    let possible_list: Vec<usize> = (1..=k).filter(|&d| possible[d]).collect();
    log.push(format!("degree patterns leave possible factor degrees {possible_list:?}"));

    let Some(q) = split_prime else {
        log.push("no prime below the bound splits the polynomial into linear factors".into());
        return Err(Error::NoCertificateFound { bound: PRIME_BOUND, log });
    };
    let bound = modulus_bits_needed(&p);
    let mut e = 1u32;
    while BigInt::from(q).pow(e) <= bound {
        e += 1;
    }
    let modulus = BigInt::from(q).pow(e);
    let f = Fq { q };
    let roots: Vec<BigInt> = f.roots(&f.reduce(&p)).into_iter().map(|r| lift_root(&p, r, q, e)).collect();
    log.push(format!("q={q}: {} roots lifted to modulus {q}^{e}", roots.len()));
    let mut tried = 0usize;
    let mut found = None;
    for size in possible_list.iter().copied() {
        let hit = combinations(roots.len(), size, |subset| {
            tried += 1;
            let g = subset.iter().fold(IntegerPolynomial::new(vec![lead.clone()]), |acc, &i| {
                acc.mul(&IntegerPolynomial::new(vec![-roots[i].clone(), BigInt::one()]))
            });
            let g = IntegerPolynomial::new(g.coeffs().iter().map(|c| symmetric(c, &modulus)).collect())
                .primitive_part();
            if p.div_exact(&g).is_some() {
                found = Some(g);
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    match found {
        Some(g) => {
            log.push(format!("rational factor found: {g}"));
            Err(Error::NoCertificateFound { bound: PRIME_BOUND, log })
        }
        None => {
            log.push(format!("{tried} root subsets tried, none gives a factor over ℤ"));
            Ok(Certificate {
                degree: n,
                excluded_up_to: k,
                certifying_prime: q,
                factor_degrees: vec![1; n],
                method: CertificateMethod::HenselRecombination { precision_exponent: e, subsets_tried: tried },
                log,
            })
        }
    }
}
