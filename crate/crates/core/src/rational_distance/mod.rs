//! Rational distances to the vertices of a unit regular polygon.
//!
//! From the averages `S2 = mean d²` and `S4 = mean d⁴` of a point's squared
//! distances to the vertices of the unit `n`-gon, `x = sin(π/n)` satisfies
//! `8(S4 − S2²)x⁴ − 4S2·x² + 1 = 0`. Rational distances make this quartic
//! rational, so `sin(π/n)` would have degree at most 4. For `n = 24` it has
//! degree 8, which rules such points out.

pub mod certificate;

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{heron_area_16sq, polygon_distances_squared, DistanceMultiset, PlanePlacement, PolygonSpec};
use crate::poly::{IntegerPolynomial, RationalPolynomial};
use crate::relations::BranchPair;
use crate::scalar::{format_g12, rational_sqrt, Angle, Rational, Scalar, Turns};

pub use certificate::{irreducibility_certificate, Certificate, CertificateMethod};

/// `a_n² = (1 − cos(2π/n))·(S2 ± √(3S2² − 2S4))`, with `S2`, `S4` the means of
/// `d²` and `d⁴`.
pub fn side_from_averages<S: Scalar>(n: usize, s2: &S, s4: &S) -> Result<BranchPair<S>> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!("a polygon needs n ≥ 3, got {n}")));
    }
    let disc = S::from_int(3) * s2.square() - S::from_int(2) * s4.clone();
    let disc = disc.snap_nonnegative(&s2.square());
    if disc.is_negative() {
        return Err(Error::NegativeDiscriminant);
    }
    let root = disc.sqrt().ok_or(Error::NotExact("√(3S2² − 2S4)"))?;
    let factor = S::one() - S::cos_turns(Turns::new(1, n as i64)).ok_or(Error::NotExact("cos(2π/n)"))?;
    Ok(BranchPair {
        plus: factor.clone() * (s2.clone() + root.clone()),
        minus: factor * (s2.clone() - root),
    })
}

/// `c4·x⁴ + c2·x² + c0`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticWitness<S> {
    pub c4: S,
    pub c2: S,
    pub c0: S,
}

impl<S: Scalar> QuarticWitness<S> {
    pub fn eval(&self, x: &S) -> S {
        let x2 = x.square();
        self.c4.clone() * x2.square() + self.c2.clone() * x2 + self.c0.clone()
    }
}

impl QuarticWitness<Rational> {
    pub fn to_polynomial(&self) -> RationalPolynomial {
        let z = <Rational as Zero>::zero();
        RationalPolynomial::new(vec![self.c0.clone(), z.clone(), self.c2.clone(), z, self.c4.clone()])
    }
}

/// The quartic in `x = sin(π/n)` built from the averages of a unit-side polygon.
pub fn quartic_witness<S: Scalar>(s2: &S, s4: &S) -> Result<QuarticWitness<S>> {
    let c4 = S::from_int(8) * (s4.clone() - s2.square());
    if c4.is_zero() {
        return Err(Error::DegenerateQuartic);
    }
    Ok(QuarticWitness { c4, c2: S::from_int(-4) * s2.clone(), c0: S::one() })
}

/// `x = scale·y₀` with `y_j² = b_j + s_j·y_{j+1}` and `y_k² = c`.
#[derive(Clone, Debug, PartialEq)]
pub struct NestedRadical {
    pub scale: Rational,
    pub steps: Vec<(Rational, Rational)>,
    pub innermost: Rational,
}

impl NestedRadical {
    /// `sin(π/24) = ½√(2 − √(2 + √3))`.
    pub fn sin_pi_24() -> Self {
        let q = |v: i64| Rational::from_integer(v.into());
        Self {
            scale: Rational::new(1.into(), 2.into()),
            steps: vec![(q(2), q(-1)), (q(2), q(1))],
            innermost: q(3),
        }
    }

    pub fn eval_f64(&self) -> f64 {
        let f = Scalar::to_f64;
        let y = self
            .steps
            .iter()
            .rev()
            .fold(f(&self.innermost).sqrt(), |y, (b, s)| (f(b) + f(s) * y).sqrt());
        f(&self.scale) * y
    }

    /// Squares the radicals away from the inside out: with `P(y) = y² − c` for
    /// the innermost one, each step replaces `y_{j+1}` by `(y_j² − b_j)/s_j`.
    pub fn eliminate(&self) -> IntegerPolynomial {
        let y_sq = |shift: &Rational, div: &Rational| {
            RationalPolynomial::new(vec![-shift.clone() / div, <Rational as Zero>::zero(), <Rational as One>::one() / div])
        };
        let mut p = y_sq(&self.innermost, &<Rational as One>::one());
        for (b, s) in self.steps.iter().rev() {
            p = p.compose(&y_sq(b, s));
        }
        let x = RationalPolynomial::new(vec![<Rational as Zero>::zero(), <Rational as One>::one() / &self.scale]);
        p.compose(&x).to_primitive_integer()
    }
}

/// Integer polynomial annihilating `sin(π/24)`, obtained by eliminating the radicals.
pub fn sin_pi_24_minimal_polynomial() -> IntegerPolynomial {
    NestedRadical::sin_pi_24().eliminate()
}

fn positive_divisors(v: &BigInt) -> Vec<BigInt> {
    let v = v.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= v {
        if (&v % &d).is_zero() {
            let other = &v / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All rational roots, by testing `±p/q` with `p | a₀` and `q | lc`.
pub fn rational_root_test(poly: &IntegerPolynomial) -> Vec<Rational> {
    let mut roots = Vec::new();
    let mut coeffs = poly.coeffs().to_vec();
    if coeffs.is_empty() {
        return roots;
    }
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(<Rational as Zero>::zero());
        coeffs.drain(..zeros);
    }
    let p = IntegerPolynomial::new(coeffs);
    if p.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let (num, den) = (positive_divisors(&p.coeff(0)), positive_divisors(&p.leading()));
    let mut candidates: Vec<Rational> = Vec::new();
    for a in &num {
        for b in &den {
            if a.gcd(b).is_one() {
                let r = Rational::new(a.clone(), b.clone());
                candidates.push(-r.clone());
                candidates.push(r);
            }
        }
    }
    candidates.sort();
    roots.extend(candidates.into_iter().filter(|r| Zero::is_zero(&p.eval_rational(r))));
    roots
}

/// One of the equal-area conditions: `value` is the exact squared area term
/// (16△², times 3 for the hexagon) of one vertex window.
#[derive(Clone, Debug, PartialEq)]
pub struct AreaCondition {
    pub vertices: [usize; 3],
    pub value: Rational,
    /// Whether `value` is the square of a rational, i.e. the area is rational.
    pub rational: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AreaConditions {
    pub n: usize,
    pub windows: [AreaCondition; 2],
    pub equal: bool,
}

impl AreaConditions {
    pub fn holds(&self) -> bool {
        self.equal && self.windows.iter().all(|w| w.rational)
    }
}

/// Checks the equal-rational-area conditions that any rational-distance point
/// of the unit square (`n = 4`) or hexagon (`n = 6`) must satisfy. Takes the
/// squared distances.
pub fn necessary_condition_areas(n: usize, d: &DistanceMultiset<Rational>) -> Result<AreaConditions> {
    d.expect_len(n)?;
    let two = Rational::from_integer(2.into());
    let three = Rational::from_integer(3.into());
    let window = |vertices: [usize; 3]| {
        let [i, j, k] = vertices.map(|v| d.get(v).clone());
        let value = match n {
            4 => heron_area_16sq(&i, &(&two * &j), &k),
            _ => &three * heron_area_16sq(&i, &j, &k),
        };
        let rational = rational_sqrt(&value).is_some();
        AreaCondition { vertices, value, rational }
    };
    let windows = match n {
        4 => [window([1, 2, 3]), window([2, 3, 4])],
        6 => [window([1, 3, 5]), window([2, 4, 6])],
        _ => return Err(Error::UnsupportedN(n)),
    };
    let equal = windows[0].value == windows[1].value;
    Ok(AreaConditions { n, windows, equal })
}

/// Machine-readable part of the report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportBlock {
    pub degree: usize,
    pub certifying_prime: Option<u64>,
    pub factor_degrees: Vec<usize>,
    pub conclusion: String,
}

impl ReportBlock {
    pub fn render(&self) -> String {
        let prime = self.certifying_prime.map_or("none".to_string(), |q| q.to_string());
        let degrees: Vec<String> = self.factor_degrees.iter().map(usize::to_string).collect();
        format!(
            "```\ndegree: {}\ncertifying_prime: {}\nfactor_degrees: {}\nconclusion: {}\n```\n",
            self.degree,
            prime,
            degrees.join(","),
            self.conclusion
        )
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub block: ReportBlock,
    pub polynomial: IntegerPolynomial,
    pub sin_pi_24: f64,
    pub polynomial_at_sin: f64,
    pub rational_roots: Vec<Rational>,
    pub certificate: Option<Certificate>,
    pub search_log: Vec<String>,
    /// Quartic from a sample placement, evaluated at `sin(π/24)`.
    pub spot_check_residual: f64,
    pub text: String,
}

pub const CONCLUSION_PROVED: &str = "no rational-distance point exists";
pub const CONCLUSION_INCONCLUSIVE: &str = "inconclusive";

const SPOT_CHECK_SEED: u64 = 24;

/// Averages of a placement on the unit-side `n`-gon.
pub fn unit_polygon_averages(n: usize, l: f64, alpha: f64) -> Result<(f64, f64)> {
    let r = 0.5 / (PI / n as f64).sin();
    let spec = PolygonSpec::new(n, r)?;
    let p = PlanePlacement::new(l, Angle::Radians(alpha))?;
    let d = polygon_distances_squared(&spec, &p)?;
    Ok((d.power_sum(1) / n as f64, d.power_sum(2) / n as f64))
}

fn spot_check() -> Result<(f64, f64, f64, QuarticWitness<f64>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SPOT_CHECK_SEED);
    let l: f64 = rng.gen_range(0.1..5.0);
    let alpha: f64 = rng.gen_range(0.0..TAU);
    let (s2, s4) = unit_polygon_averages(24, l, alpha)?;
    let w = quartic_witness(&s2, &s4)?;
    Ok((l, alpha, w.eval(&(PI / 24.0).sin()), w))
}

/// The impossibility argument for the unit 24-gon, with every number recomputed.
pub fn icositetragon_report() -> Result<Report> {
    let radical = NestedRadical::sin_pi_24();
    let polynomial = radical.eliminate();
    let sin = radical.eval_f64();
    let at_sin = polynomial.eval_f64(sin);
    let roots = rational_root_test(&polynomial);
    let degree = polynomial.degree().unwrap_or(0);
    let (certificate, search_log) = match irreducibility_certificate(&polynomial, 4) {
        Ok(c) => {
            let log = c.log.clone();
            (Some(c), log)
        }
        Err(Error::NoCertificateFound { log, .. }) => (None, log),
        Err(e) => return Err(e),
    };
    let (l, alpha, residual, w) = spot_check()?;

    let proved = roots.is_empty() && certificate.as_ref().is_some_and(|c| c.excluded_up_to >= 4);
    let conclusion = if proved { CONCLUSION_PROVED } else { CONCLUSION_INCONCLUSIVE };
    let block = ReportBlock {
        degree,
        certifying_prime: certificate.as_ref().map(|c| c.certifying_prime),
        factor_degrees: certificate.as_ref().map(|c| c.factor_degrees.clone()).unwrap_or_default(),
        conclusion: conclusion.to_string(),
    };

    let mut t = String::new();
    let _ = writeln!(t, "Rational distances to the vertices of the unit regular 24-gon");
    let _ = writeln!(t);
    let _ = writeln!(t, "1. Quartic family");
    let _ = writeln!(t, "   For a point with squared distances d_i² to the vertices of the unit n-gon,");
    let _ = writeln!(t, "   S2 = mean d², S4 = mean d⁴, the number x = sin(π/n) satisfies");
    let _ = writeln!(t, "   8(S4 − S2²)x⁴ − 4·S2·x² + 1 = 0.");
    let _ = writeln!(t, "   Rational distances give rational S2, S4, so deg sin(π/n) ≤ 4.");
    let _ = writeln!(t, "   Sample placement L = {}, α = {}:", format_g12(l), format_g12(alpha));
    let _ = writeln!(
        t,
        "   quartic ({})x⁴ + ({})x² + 1, value at sin(π/24): {:.3e}",
        format_g12(w.c4),
        format_g12(w.c2),
        residual
    );
    let _ = writeln!(t);
    let _ = writeln!(t, "2. sin(π/24) = ½√(2 − √(2 + √3)) ≈ {sin:.8}");
    let _ = writeln!(t, "   eliminating the radicals gives p(x) = {polynomial}");
    let _ = writeln!(t, "   degree {degree}, |p(sin(π/24))| = {at_sin:.3e}");
    let _ = writeln!(t);
    let _ = writeln!(t, "3. Rational roots of p");
    if roots.is_empty() {
        let _ = writeln!(t, "   none (all ±a/b with a | p(0), b | lc(p) tested)");
    } else {
        let r: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        let _ = writeln!(t, "   found: {}", r.join(", "));
    }
    let _ = writeln!(t);
    let _ = writeln!(t, "4. Factor degrees");
    match &certificate {
        Some(c) => {
            let how = match &c.method {
                CertificateMethod::IrreducibleModPrime => format!("p is irreducible mod {}", c.certifying_prime),
                CertificateMethod::DegreePatterns { primes } => {
                    let qs: Vec<String> = primes.iter().map(|(q, _)| q.to_string()).collect();
                    format!("factor degree patterns mod {} admit no factor of degree ≤ {}", qs.join(", "), c.excluded_up_to)
                }
                CertificateMethod::HenselRecombination { precision_exponent, subsets_tried } => format!(
                    "p splits into linear factors mod {q}; its roots lifted to {q}^{precision_exponent} \
                     combine into no integer factor of degree ≤ {k} ({subsets_tried} subsets)",
                    q = c.certifying_prime,
                    k = c.excluded_up_to
                ),
            };
            let _ = writeln!(t, "   {how}");
            if c.proves_irreducible() {
                let _ = writeln!(t, "   p is irreducible over ℚ, hence the minimal polynomial of sin(π/24)");
            }
            let _ = writeln!(t, "   so sin(π/24) has degree {degree} > 4");
        }
        None => {
            let _ = writeln!(t, "   no certificate among primes below {}", certificate::PRIME_BOUND);
            for line in &search_log {
                let _ = writeln!(t, "   {line}");
            }
        }
    }
    let _ = writeln!(t);
    t.push_str(&block.render());
    let _ = writeln!(t);
    if proved {
        let _ = writeln!(t, "A rational-distance point would force degree ≤ 4, so {CONCLUSION_PROVED}");
    } else {
        let _ = writeln!(t, "The degree bound could not be certified; the result is {CONCLUSION_INCONCLUSIVE}");
    }

    Ok(Report {
        block,
        polynomial,
        sin_pi_24: sin,
        polynomial_at_sin: at_sin,
        rational_roots: roots,
        certificate,
        search_log,
        spot_check_residual: residual,
        text: t,
    })
}
