//! Rational maps φ ∈ ℚ(z) in exact integer arithmetic.

mod analysis;
mod map;
mod parse;
mod point;
mod poly;
mod resultant;

pub use analysis::{
    bad_primes_s, detect_period, has_good_reduction, is_polynomial_type, vanishing_order, BadPrimes,
    DEFAULT_PERIOD_BOUND,
};
pub use map::RationalMap;
pub use parse::{parse_map, parse_point};
pub use point::ProjectivePoint;
pub use poly::IntPolynomial;
pub use resultant::{resultant, univariate_resultant};
