use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{orbit_terms, DynSystem};
use crate::arith::{big_gcd, coprime_part, ord_p_u64, primes_up_to};
use crate::ratmap::BadPrimes;
use crate::{Error, Result};

/// One comparison ord_p A_n against e·ord_p A_{n−k}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthCheck {
    pub p: u64,
    /// Residue class of n modulo the period.
    pub residue: usize,
    pub n: usize,
    pub observed: u64,
    pub expected: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub horizon: usize,
    pub p_bound: u64,
    pub period_k: usize,
    pub vanishing_e: usize,
    pub bad_set: BadPrimes,
    /// Primes outside S dividing at least one term.
    pub primes_seen: usize,
    pub checks: Vec<GrowthCheck>,
    pub failures: usize,
    pub passed: bool,
}

/// Check that once p ∉ S divides a term of a subsequence n ≡ i (mod k),
/// each later term of that subsequence has e times the previous valuation.
pub fn verify_growth_law(sys: &DynSystem, horizon: usize, p_bound: u64) -> Result<GrowthReport> {
    if !sys.is_strict() {
        return Err(Error::RequiresStrict);
    }
    let (k, e, bad) = match (sys.period_k, sys.vanishing_e, &sys.bad_set) {
        (Some(k), Some(e), Some(s)) => (k, e as u64, s.clone()),
        _ => return Err(Error::RequiresStrict),
    };
    let terms = orbit_terms(sys, horizon)?;
    let primes: Vec<u64> = primes_up_to(p_bound).into_iter().filter(|&p| !bad.contains_u64(p)).collect();

    let per_prime: Vec<Vec<GrowthCheck>> = primes
        .par_iter()
        .map(|&p| {
            let mut out = Vec::new();
            for residue in 0..k.min(terms.len()) {
                let vals: Vec<(usize, u64)> = terms[residue..]
                    .iter()
                    .step_by(k)
                    .map(|t| (t.n, ord_p_u64(&t.a, p).expect("strict terms are nonzero")))
                    .collect();
                let Some(r) = vals.iter().position(|&(_, v)| v > 0) else { continue };
                for w in vals[r..].windows(2) {
                    let expected = e * w[0].1;
                    out.push(GrowthCheck { p, residue, n: w[1].0, observed: w[1].1, expected, pass: w[1].1 == expected });
                }
                if r + 1 == vals.len() {
                    // divides only the last term: nothing to compare, but record it
                    out.push(GrowthCheck { p, residue, n: vals[r].0, observed: vals[r].1, expected: vals[r].1, pass: true });
                }
            }
            out
        })
        .collect();

    let primes_seen = per_prime.iter().filter(|c| !c.is_empty()).count();
    let checks: Vec<GrowthCheck> = per_prime.into_iter().flatten().collect();
    let failures = checks.iter().filter(|c| !c.pass).count();
    Ok(GrowthReport {
        horizon,
        p_bound,
        period_k: k,
        vanishing_e: e as usize,
        bad_set: bad,
        primes_seen,
        checks,
        failures,
        passed: failures == 0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointnessFailure {
    pub n1: usize,
    pub n2: usize,
    /// Common factor of A_{n1} and A_{n2} made of good primes.
    #[serde(serialize_with = "crate::serde_big::dec")]
    pub common: BigUint,
}

/// A small good prime with the residue classes of the terms it divides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeClasses {
    pub p: u64,
    pub residues: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointnessReport {
    pub horizon: usize,
    pub period_k: usize,
    /// Condition (B) is imposed for φⁱ(γ) with 1 ≤ i < k; at i = 0 it
    /// could never hold.
    pub condition_b_range: String,
    /// Every bad prime divides this: the resultant times the cross
    /// determinants of (φⁱ(γ), γ), 1 ≤ i < k.
    #[serde(serialize_with = "crate::serde_big::dec")]
    pub bad_modulus: BigUint,
    pub pairs_checked: usize,
    pub small_primes: Vec<PrimeClasses>,
    pub failures: Vec<DisjointnessFailure>,
    pub passed: bool,
}

const SMALL_PRIME_BOUND: u64 = 10_000;

/// Check that no good prime divides terms from two different residue
/// classes mod k. Works on pairwise gcds, so no term is ever factored.
pub fn subsequence_disjointness(sys: &DynSystem, horizon: usize) -> Result<DisjointnessReport> {
    if !sys.is_strict() {
        return Err(Error::RequiresStrict);
    }
    let k = sys.period_k.ok_or(Error::RequiresStrict)?;
    if k == 1 {
        return Err(Error::PeriodOne);
    }
    let mut bad_modulus = sys.phi.resultant().magnitude().clone();
    let mut q = sys.gamma.clone();
    for _ in 1..k {
        q = sys.phi.eval(&q);
        bad_modulus *= q.cross(&sys.gamma).magnitude();
    }
    debug_assert!(!bad_modulus.is_zero());

    let terms = orbit_terms(sys, horizon)?;
    let pairs: Vec<(usize, usize)> =
        (0..terms.len()).flat_map(|i| (i + 1..terms.len()).map(move |j| (i, j))).filter(|(i, j)| (j - i) % k != 0).collect();
    let failures: Vec<DisjointnessFailure> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let g = big_gcd(&terms[i].a, &terms[j].a);
            if g.is_one() {
                return None;
            }
            let common = coprime_part(&g, &bad_modulus);
            (!common.is_one()).then_some(DisjointnessFailure { n1: i, n2: j, common })
        })
        .collect();

    let small_primes = primes_up_to(SMALL_PRIME_BOUND)
        .into_iter()
        .filter(|&p| !(&bad_modulus % p).is_zero())
        .filter_map(|p| {
            let mut residues: Vec<usize> =
                terms.iter().filter(|t| (&t.a % p).is_zero()).map(|t| t.n % k).collect();
            residues.dedup();
            residues.sort_unstable();
            residues.dedup();
            (!residues.is_empty()).then_some(PrimeClasses { p, residues })
        })
        .collect();

    Ok(DisjointnessReport {
        horizon,
        period_k: k,
        condition_b_range: "1 <= i < k".into(),
        bad_modulus,
        pairs_checked: pairs.len(),
        small_primes,
        passed: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn growth_examples() {
        let sys = strict(&[0, 1, 1], &[1], pt(1, 1), pt(0, 1));
        let report = verify_growth_law(&sys, 6, 10_000).unwrap();
        assert!(report.passed);
        let twos: Vec<_> = report.checks.iter().filter(|c| c.p == 2).map(|c| c.observed).collect();
        assert_eq!(twos, vec![1; 5]);

        let cubic = strict(&[0, 0, 2, 1], &[5, 1], pt(1, 1), pt(0, 1));
        let report = verify_growth_law(&cubic, 6, 10_000).unwrap();
        assert!(report.passed && report.primes_seen > 0);
        assert!(report.checks.iter().all(|c| c.p != 2 && c.p != 5));
        let c31: Vec<_> = report.checks.iter().filter(|c| c.p == 31).map(|c| c.observed).collect();
        assert_eq!(c31, vec![2, 4, 8]);
    }

    #[test]
    fn growth_on_period_two() {
        let sys = strict(&[-1, 0, 1], &[1], pt(1, 3), pt(0, 1));
        let report = verify_growth_law(&sys, 8, 1000).unwrap();
        assert!(report.passed);
        assert_eq!((report.period_k, report.vanishing_e), (2, 2));
        assert!(report.checks.iter().any(|c| c.residue == 1));
    }

    #[test]
    fn growth_requires_strict() {
        let sys = relaxed(&[0, 0, 1], &[1, 1], pt(2, 3), pt(0, 1));
        assert_eq!(verify_growth_law(&sys, 4, 100), Err(Error::RequiresStrict));
    }

    #[test]
    fn disjointness_examples() {
        let sys = strict(&[-1, 0, 1], &[1], pt(1, 3), pt(0, 1));
        let report = subsequence_disjointness(&sys, 8).unwrap();
        assert!(report.passed);
        assert_eq!(report.bad_modulus, BigUint::one());
        let two = report.small_primes.iter().find(|c| c.p == 2).unwrap();
        assert_eq!(two.residues, vec![1]);
        let fixed = strict(&[0, 1, 1], &[1], pt(1, 1), pt(0, 1));
        assert_eq!(subsequence_disjointness(&fixed, 4), Err(Error::PeriodOne));
    }
}
