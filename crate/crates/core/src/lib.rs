//! Primitive prime divisors in orbits of rational maps over ℚ.
//!
//! For a rational map φ, a starting point α and a target point γ, write
//! φⁿ(α) − γ = Aₙ/Bₙ in lowest terms. This crate computes the sequence
//! (Aₙ) exactly, decides which terms carry a primitive prime divisor,
//! computes Zsigmondy sets, ranks of apparition and p-adic growth, and
//! checks the supporting height and reduction-mod-p statements numerically.
//!
//! Module map:
//! - [`arith`]: primality, bounded factorization, valuations, gcd stripping
//! - [`ratmap`]: rational maps, projective points, resultants, conjugation
//! - [`dynseq`]: the numerator sequence, Zsigmondy sets, growth verifiers
//! - [`heights`]: Weil and canonical heights, norm growth
//! - [`modp`]: orbits over finite fields and the doubly indexed sequence

pub mod arith;
pub mod dynseq;
mod error;
pub mod heights;
pub mod modp;
pub mod ratmap;
mod serde_big;

pub use error::{Error, Result};

/// Library version echoed into every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
