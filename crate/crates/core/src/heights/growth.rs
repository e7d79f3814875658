use num_bigint::BigUint;
use serde::Serialize;

use super::canonical::{canonical_height, height_constant, weil_height, HeightBounds, HeightEstimate};
use crate::arith::{coprime_part, ln_biguint};
use crate::dynseq::{orbit_terms, DynSystem};
use crate::ratmap::{BadPrimes, ProjectivePoint};
use crate::{Error, Result};

/// The part of n supported outside S.
pub fn prime_to_s_norm(n: &BigUint, s: &BadPrimes) -> BigUint {
    if s.is_empty() {
        return n.clone();
    }
    coprime_part(n, &s.radical())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormGrowthRow {
    pub n: usize,
    pub digits_a: usize,
    pub log_a: f64,
    /// log of the prime-to-S part of A_n.
    pub log_ns_a: f64,
    pub log_a_over_dn: f64,
    pub hhat: f64,
    pub err: f64,
    /// (log A_n / dⁿ) / ĥ, absent when ĥ is 0.
    pub ratio: Option<f64>,
    /// dⁿ(ĥ + err) + bound_constant.
    pub upper_bound: f64,
    pub upper_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormGrowthReport {
    pub horizon: usize,
    pub degree: usize,
    /// C with |h(φ(Q)) − d·h(Q)| ≤ C.
    pub height_constant: f64,
    /// C/(d−1), plus h(γ) + log 2 for a finite nonzero target.
    pub bound_constant: f64,
    pub hhat: HeightEstimate,
    pub rows: Vec<NormGrowthRow>,
    pub upper_bound_holds: bool,
}

/// Compare log A_n with dⁿ·ĥ(α) along the orbit.
///
/// The upper bound log A_n ≤ dⁿ·ĥ(α) + C/(d−1) (+ h(γ) + log 2) follows
/// from log A_n ≤ h(φⁿ(α) − γ) and |h − ĥ| ≤ C/(d−1).
pub fn norm_growth_report(sys: &DynSystem, horizon: usize, tol: f64, bounds: &HeightBounds) -> Result<NormGrowthReport> {
    if !sys.is_strict() {
        return Err(Error::RequiresStrict);
    }
    let d = sys.phi.degree();
    let c = height_constant(&sys.phi);
    let hhat = canonical_height(&sys.phi, &sys.alpha, tol, bounds)?;
    let offset = match &sys.gamma {
        ProjectivePoint::Finite { .. } if !sys.gamma.is_zero() => weil_height(&sys.gamma) + std::f64::consts::LN_2,
        _ => 0.0,
    };
    let bound_constant = c / (d as f64 - 1.0) + offset;
    let empty = BadPrimes::empty();
    let s = sys.bad_set.as_ref().unwrap_or(&empty);

    let rows: Vec<NormGrowthRow> = orbit_terms(sys, horizon)?
        .iter()
        .map(|t| {
            let scale = (d as f64).powi(t.n as i32);
            let log_a = ln_biguint(&t.a);
            let upper_bound = scale * (hhat.value + hhat.error_bound) + bound_constant;
            NormGrowthRow {
                n: t.n,
                digits_a: t.digits(),
                log_a,
                log_ns_a: ln_biguint(&prime_to_s_norm(&t.a, s)),
                log_a_over_dn: log_a / scale,
                hhat: hhat.value,
                err: hhat.error_bound,
                ratio: (hhat.value > 0.0).then(|| log_a / scale / hhat.value),
                upper_bound,
                upper_ok: log_a <= upper_bound * (1.0 + 1e-12) + 1e-12,
            }
        })
        .collect();
    let upper_bound_holds = rows.iter().all(|r| r.upper_ok);
    Ok(NormGrowthReport { horizon, degree: d, height_constant: c, bound_constant, hhat, rows, upper_bound_holds })
}

/// log⁺(1/|t_n|)/dⁿ for n = 0..=N, where t_n is the coordinate of φⁿ(α)
/// centred at γ.
pub fn archimedean_proximity(sys: &DynSystem, horizon: usize) -> Result<Vec<f64>> {
    if !sys.is_strict() {
        return Err(Error::RequiresStrict);
    }
    let d = sys.phi.degree() as f64;
    Ok(orbit_terms(sys, horizon)?
        .iter()
        .map(|t| {
            if t.b.bits() == 0 {
                return 0.0;
            }
            (ln_biguint(&t.b) - ln_biguint(&t.a)).max(0.0) / d.powi(t.n as i32)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynseq::{build_system, Mode, SystemBounds};
    use crate::ratmap::RationalMap;

    fn sys(n: &[i64], d: &[i64], a: i64, b: i64) -> DynSystem {
        let phi = RationalMap::from_i64s(n, d).unwrap();
        build_system(&phi, &ProjectivePoint::fraction(a, b), &ProjectivePoint::integer(0), Mode::Strict, &SystemBounds::default())
            .unwrap()
    }

    #[test]
    fn prime_to_s_example() {
        let s = BadPrimes { primes: vec![2u32.into(), 5u32.into()], unfactored: 1u32.into() };
        assert_eq!(prime_to_s_norm(&1806u32.into(), &s), BigUint::from(903u32));
        assert_eq!(prime_to_s_norm(&1806u32.into(), &BadPrimes::empty()), BigUint::from(1806u32));
    }

    #[test]
    fn growth_towards_hhat() {
        for (a, b) in [(1, 1), (1, 2)] {
            let report = norm_growth_report(&sys(&[0, 1, 1], &[1], a, b), 12, 1e-6, &HeightBounds::default()).unwrap();
            assert!(report.upper_bound_holds);
            let last = report.rows.last().unwrap();
            assert!((last.ratio.unwrap() - 1.0).abs() < 0.05);
            if b == 1 {
                // B_n = 1: log A_n/2ⁿ → ĥ from below
                assert!(report.rows.windows(2).skip(1).all(|w| w[0].log_a_over_dn <= w[1].log_a_over_dn));
                assert!((last.log_a_over_dn - last.hhat).abs() <= last.err + 1e-3);
            }
        }
    }

    #[test]
    fn proximity_examples() {
        let prox = archimedean_proximity(&sys(&[0, 1, 1], &[1], 1, 1), 8).unwrap();
        assert!(prox.iter().all(|&x| x == 0.0));
        let prox = archimedean_proximity(&sys(&[-1, 0, 1], &[1], 1, 3), 8).unwrap();
        assert!((prox[0] - 3f64.ln()).abs() < 1e-12);
        assert!(prox[8] < prox[0]);
    }
}
