use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use super::map::RationalMap;
use super::point::ProjectivePoint;
use crate::arith::{factor, FactorBudget};
use crate::heights::{height_constant, weil_height};
use crate::{Error, Result};

/// Default search bound for [`detect_period`].
pub const DEFAULT_PERIOD_BOUND: usize = 64;

/// Order of vanishing of φ at z = 0: the index of the lowest nonzero
/// numerator coefficient, or 0 when φ(0) ≠ 0.
pub fn vanishing_order(phi: &RationalMap) -> usize {
    let num = phi.numerator();
    if !num.coeff(0).is_zero() {
        return 0;
    }
    num.lowest_index().unwrap_or(0)
}

/// The primes dividing a_e·b_0. A part that could not be factored within
/// the default budget is kept in `unfactored` and treated as bad.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadPrimes {
    #[serde(serialize_with = "crate::serde_big::dec_vec")]
    pub primes: Vec<BigUint>,
    #[serde(serialize_with = "crate::serde_big::dec")]
    pub unfactored: BigUint,
}

impl BadPrimes {
    pub fn from_integer(n: &BigInt) -> Self {
        let f = factor(n.magnitude(), &FactorBudget::default());
        BadPrimes { primes: f.primes().cloned().collect(), unfactored: f.cofactor }
    }

    pub fn empty() -> Self {
        BadPrimes { primes: Vec::new(), unfactored: BigUint::one() }
    }

    pub fn contains(&self, p: &BigUint) -> bool {
        self.primes.contains(p) || (!self.unfactored.is_one() && (&self.unfactored % p).is_zero())
    }

    pub fn contains_u64(&self, p: u64) -> bool {
        self.contains(&BigUint::from(p))
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty() && self.unfactored.is_one()
    }

    /// Product of everything considered bad.
    pub fn radical(&self) -> BigUint {
        self.primes.iter().fold(self.unfactored.clone(), |acc, p| acc * p)
    }
}

/// The set S of primes dividing a_e·b_0 for a map fixing 0.
pub fn bad_primes_s(phi: &RationalMap) -> Result<BadPrimes> {
    let num = phi.numerator();
    if !num.coeff(0).is_zero() {
        return Err(Error::GammaNotFixed);
    }
    let e = vanishing_order(phi);
    let a_e = num.coeff(e);
    let b_0 = phi.denominator().coeff(0);
    Ok(BadPrimes::from_integer(&(a_e * b_0)))
}

/// Good reduction at p: p does not divide the resultant.
pub fn has_good_reduction(phi: &RationalMap, p: &BigUint) -> bool {
    !(phi.resultant().magnitude() % p).is_zero()
}

/// Smallest k ≤ k_max with φᵏ(γ) = γ.
///
/// Points on a cycle have canonical height 0, hence Weil height at most
/// C/(d−1); the search stops as soon as the orbit leaves that range.
pub fn detect_period(phi: &RationalMap, gamma: &ProjectivePoint, k_max: usize) -> Option<usize> {
    let ceiling = (phi.degree() >= 2).then(|| height_constant(phi) / (phi.degree() as f64 - 1.0) + 1e-9);
    let mut q = gamma.clone();
    for k in 1..=k_max {
        if ceiling.is_some_and(|c| weil_height(&q) > c) {
            return None;
        }
        q = phi.eval(&q);
        if &q == gamma {
            return Some(k);
        }
    }
    None
}

/// Whether φᵏ is totally ramified at the period-k point γ: after moving γ
/// to 0, the numerator of φᵏ vanishes to order dᵏ there.
pub fn is_polynomial_type(phi: &RationalMap, gamma: &ProjectivePoint, k: usize) -> Result<bool> {
    if k == 0 || phi.iterate_point(gamma, k) != *gamma {
        return Err(Error::GammaNotPeriodic);
    }
    let local = phi.nth_iterate(k).conjugate_to_zero(gamma);
    Ok(vanishing_order(&local) == local.degree())
}
