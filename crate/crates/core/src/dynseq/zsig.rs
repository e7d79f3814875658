use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{orbit_terms, DynSystem, OrbitTerm};
use crate::arith::{coprime_part, factor, FactorBudget};
use crate::{Error, Result};

/// The part of A_n built from primes dividing no earlier nonzero term.
/// Stripping goes term by term; the product of earlier terms is never formed.
pub fn primitive_part(n: usize, terms: &[OrbitTerm]) -> Result<BigUint> {
    let term = terms.get(n).ok_or(Error::IndexOutOfRange { index: n, len: terms.len() })?;
    if term.a.is_zero() {
        return Err(Error::ZeroTerm(n));
    }
    let mut rest = term.a.clone();
    for earlier in &terms[..n] {
        if rest.is_one() {
            break;
        }
        if !earlier.a.is_zero() {
            rest = coprime_part(&rest, &earlier.a);
        }
    }
    Ok(rest)
}

/// Whether A_n has a prime divisor that divides no A_i with i < n.
pub fn has_primitive_divisor(_sys: &DynSystem, n: usize, terms: &[OrbitTerm]) -> Result<bool> {
    Ok(primitive_part(n, terms)? > BigUint::one())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZsigmondyRecord {
    pub n: usize,
    pub digits: usize,
    pub has_primitive: bool,
    /// Primitive primes found within the factoring budget.
    #[serde(serialize_with = "crate::serde_big::dec_vec")]
    pub witness_primes: Vec<BigUint>,
    /// Unfactored remainder of the primitive part, all of whose primes are
    /// primitive.
    #[serde(serialize_with = "crate::serde_big::dec_opt", skip_serializing_if = "Option::is_none")]
    pub residual_composite: Option<BigUint>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub zero_term: bool,
    #[serde(serialize_with = "crate::serde_big::dec_opt", skip_serializing_if = "Option::is_none")]
    pub a: Option<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZsigmondyReport {
    pub horizon: usize,
    pub records: Vec<ZsigmondyRecord>,
    /// Indices 1 ≤ n ≤ N whose term has no primitive divisor.
    pub zsigmondy_set: Vec<usize>,
}

impl ZsigmondyReport {
    /// Build a report from precomputed terms. Index 0 is recorded but
    /// never enters the set, and a zero A_0 is allowed.
    pub fn from_terms(terms: &[OrbitTerm], budget: &FactorBudget, full_integers: bool) -> Result<Self> {
        let mut records = Vec::with_capacity(terms.len());
        for term in terms {
            let n = term.n;
            let zero = term.a.is_zero();
            if zero && n > 0 {
                return Err(Error::ZeroTerm(n));
            }
            let part = if zero { BigUint::zero() } else { primitive_part(n, terms)? };
            let has_primitive = part > BigUint::one();
            let (witness_primes, residual_composite) = if has_primitive {
                let f = factor(&part, budget);
                let residual = (!f.complete).then(|| f.cofactor.clone());
                (f.primes().cloned().collect(), residual)
            } else {
                (Vec::new(), None)
            };
            records.push(ZsigmondyRecord {
                n,
                digits: term.digits(),
                has_primitive,
                witness_primes,
                residual_composite,
                zero_term: zero,
                a: full_integers.then(|| term.a.clone()),
            });
        }
        let zsigmondy_set = records.iter().filter(|r| r.n >= 1 && !r.has_primitive).map(|r| r.n).collect();
        Ok(ZsigmondyReport { horizon: terms.len().saturating_sub(1), records, zsigmondy_set })
    }
}

/// Primitive-divisor verdicts for n = 0..=N.
pub fn zsigmondy_set(sys: &DynSystem, horizon: usize, budget: &FactorBudget, full_integers: bool) -> Result<ZsigmondyReport> {
    let terms = orbit_terms(sys, horizon)?;
    ZsigmondyReport::from_terms(&terms, budget, full_integers)
}
