use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error: the inputs
/// were well-typed but describe something the identities do not cover.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid figure: {0}")]
    InvalidSpec(String),

    #[error("vertex index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("power index m={m} outside the valid range {min}..={max}")]
    OutOfRange { m: usize, min: usize, max: usize },

    #[error("expected {expected} distances, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("negative input where a nonnegative value is required: {0}")]
    Negative(&'static str),

    #[error("negative discriminant: the averages are inconsistent")]
    NegativeDiscriminant,

    #[error("invalid average: {0}")]
    InvalidAverage(&'static str),

    #[error("squared distance is not attainable for the given R and L")]
    Unattainable,

    #[error("distance multiset is inconsistent with a regular {0}-gon")]
    InconsistentDistances(usize),

    #[error("n={0} is odd; opposite vertices need an even vertex count")]
    OddN(usize),

    #[error("divisor {divisor} does not divide n={n} or is unsupported")]
    DivisorMismatch { n: usize, divisor: usize },

    #[error("the tetrahedron has no antipodal vertex pairs")]
    TetrahedronHasNoAntipodes,

    #[error("no distance solver for n={0}; supported: 3, 4, 6")]
    UnsupportedN(usize),

    #[error("degenerate quartic: S4 equals S2 squared")]
    DegenerateQuartic,

    #[error("input is not rational")]
    NonRationalInput,

    #[error("value is not representable exactly in this backend: {0}")]
    NotExact(&'static str),

    #[error("no irreducibility certificate found among primes below {bound}")]
    NoCertificateFound { bound: u64, log: Vec<String> },
}

pub type Result<T> = std::result::Result<T, Error>;
