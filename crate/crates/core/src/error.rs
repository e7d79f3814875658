use thiserror::Error;

/// Errors raised by the library. Incomplete factorizations and failed
/// verifications are reported as values, never as errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero is infinite")]
    OrdOfZero,
    #[error("not a prime: {0}")]
    NotPrime(String),
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("numerator and denominator share a common factor; the map is degenerate")]
    DegenerateMap,
    #[error("map must fix 0 (numerator constant term is nonzero)")]
    GammaNotFixed,
    #[error("target point is not periodic within the search bound")]
    GammaNotPeriodic,
    #[error("map is of polynomial type at the target point")]
    PolynomialType,
    #[error("starting point is preperiodic")]
    AlphaPreperiodic,
    #[error("map degree must be at least 2")]
    DegreeTooSmall,
    #[error("orbit hits the target point at index {0}")]
    OrbitHitsGamma(usize),
    #[error("term {0} is zero")]
    ZeroTerm(usize),
    #[error("target point is fixed; nothing to check for period one")]
    PeriodOne,
    #[error("map has bad reduction at {0}")]
    BadReduction(u64),
    #[error("could not decide preperiodicity within the given bounds")]
    Undecided,
    #[error("operation requires a strict-mode system")]
    RequiresStrict,
    #[error("index {index} outside computed range 0..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
