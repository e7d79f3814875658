//! Big-integer utilities: primality, bounded factorization, p-adic
//! valuations and coprime-part extraction.
//!
//! Primitive-divisor existence only needs [`coprime_part`]; factoring is
//! used for witness primes and is allowed to stop early.

mod factor;
mod prime;
mod valuation;

pub use factor::{factor, Factorization, FactorBudget};
pub use prime::{is_prime, is_prime_u64, primes_up_to};
pub use valuation::{big_gcd, coprime_part, ln_biguint, ord_p, ord_p_u64};
