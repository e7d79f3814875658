//! Numerator sequences A_n of φⁿ(α) − γ and their primitive divisors.

mod apparition;
mod verify;
mod zsig;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::heights::{is_preperiodic, HeightBounds, Preperiodicity};
use crate::ratmap::{bad_primes_s, detect_period, is_polynomial_type, vanishing_order, BadPrimes, ProjectivePoint, RationalMap};
use crate::{Error, Result};

pub use apparition::{rank_of_apparition, ApparitionRecord, Rank};
pub use verify::{
    subsequence_disjointness, verify_growth_law, DisjointnessFailure, DisjointnessReport, GrowthCheck, GrowthReport,
};
pub use zsig::{has_primitive_divisor, primitive_part, zsigmondy_set, ZsigmondyRecord, ZsigmondyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Enforce the hypotheses of the finiteness theorem.
    Strict,
    /// Any target γ, including points on the orbit of α.
    Relaxed,
}

/// Limits used while validating a system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SystemBounds {
    pub period_bound: usize,
    pub height: HeightBounds,
}

impl Default for SystemBounds {
    fn default() -> Self {
        Self { period_bound: crate::ratmap::DEFAULT_PERIOD_BOUND, height: HeightBounds::default() }
    }
}

/// A validated triple (φ, α, γ).
///
/// In strict mode γ has exact period `period_k`, and `vanishing_e`,
/// `bad_set` describe φᵏ after moving γ to 0.
#[derive(Debug, Clone, Serialize)]
pub struct DynSystem {
    #[serde(serialize_with = "display")]
    pub phi: RationalMap,
    pub alpha: ProjectivePoint,
    pub gamma: ProjectivePoint,
    pub mode: Mode,
    pub period_k: Option<usize>,
    pub vanishing_e: Option<usize>,
    pub bad_set: Option<BadPrimes>,
    /// How α was shown to be wandering (strict mode only).
    pub wandering: Option<Preperiodicity>,
}

fn display<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Validate (φ, α, γ) and cache k, e and S.
pub fn build_system(
    phi: &RationalMap,
    alpha: &ProjectivePoint,
    gamma: &ProjectivePoint,
    mode: Mode,
    bounds: &SystemBounds,
) -> Result<DynSystem> {
    if phi.degree() < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let mut sys = DynSystem {
        phi: phi.clone(),
        alpha: alpha.clone(),
        gamma: gamma.clone(),
        mode,
        period_k: None,
        vanishing_e: None,
        bad_set: None,
        wandering: None,
    };
    if mode == Mode::Relaxed {
        if let Some(k) = detect_period(phi, gamma, bounds.period_bound) {
            sys.period_k = Some(k);
            let local = phi.nth_iterate(k).conjugate_to_zero(gamma);
            sys.vanishing_e = Some(vanishing_order(&local));
            sys.bad_set = bad_primes_s(&local).ok();
        }
        return Ok(sys);
    }

    let k = detect_period(phi, gamma, bounds.period_bound).ok_or(Error::GammaNotPeriodic)?;
    if is_polynomial_type(phi, gamma, k)? {
        return Err(Error::PolynomialType);
    }
    let cert = is_preperiodic(phi, alpha, &bounds.height)?;
    if cert.is_preperiodic() {
        return Err(Error::AlphaPreperiodic);
    }
    let local = phi.nth_iterate(k).conjugate_to_zero(gamma);
    sys.period_k = Some(k);
    sys.vanishing_e = Some(vanishing_order(&local));
    sys.bad_set = Some(bad_primes_s(&local)?);
    sys.wandering = Some(cert);
    Ok(sys)
}

impl DynSystem {
    pub fn is_strict(&self) -> bool {
        self.mode == Mode::Strict
    }

    /// φᵏ conjugated so that γ sits at 0 (strict systems only).
    pub fn local_map(&self) -> Option<RationalMap> {
        self.period_k.map(|k| self.phi.nth_iterate(k).conjugate_to_zero(&self.gamma))
    }

    /// The subsequence system (φᵏ, φⁱ(α), γ) for residue class i mod k.
    pub fn subsequence(&self, i: usize) -> Result<DynSystem> {
        let k = self.period_k.ok_or(Error::RequiresStrict)?;
        let phi_k = self.phi.nth_iterate(k);
        let start = self.phi.iterate_point(&self.alpha, i);
        Ok(DynSystem {
            phi: phi_k,
            alpha: start,
            gamma: self.gamma.clone(),
            mode: self.mode,
            period_k: Some(1),
            vanishing_e: self.vanishing_e,
            bad_set: self.bad_set.clone(),
            wandering: None,
        })
    }
}

/// One term of the sequence: φⁿ(α) and the reduced pair (A_n, B_n) with
/// φⁿ(α) − γ = ±A_n/B_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTerm {
    pub n: usize,
    pub value: ProjectivePoint,
    pub a: BigUint,
    pub b: BigUint,
}

impl OrbitTerm {
    /// Whether the orbit hit γ exactly (A_n = 0).
    pub fn hits_gamma(&self) -> bool {
        self.a.is_zero()
    }

    pub fn digits(&self) -> usize {
        if self.a.is_zero() {
            1
        } else {
            self.a.to_str_radix(10).len()
        }
    }
}

/// Terms n = 0..=N.
pub fn orbit_terms(sys: &DynSystem, horizon: usize) -> Result<Vec<OrbitTerm>> {
    let mut out = Vec::with_capacity(horizon + 1);
    let mut value = sys.alpha.clone();
    for n in 0..=horizon {
        if n > 0 {
            value = sys.phi.eval(&value);
        }
        let (a, b) = value.local_coordinate(&sys.gamma).magnitudes();
        let term = OrbitTerm { n, value: value.clone(), a, b };
        if term.hits_gamma() && sys.is_strict() {
            return Err(Error::OrbitHitsGamma(n));
        }
        out.push(term);
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn map(n: &[i64], d: &[i64]) -> RationalMap {
        RationalMap::from_i64s(n, d).unwrap()
    }

    pub fn pt(a: i64, b: i64) -> ProjectivePoint {
        ProjectivePoint::fraction(a, b)
    }

    pub fn strict(n: &[i64], d: &[i64], alpha: ProjectivePoint, gamma: ProjectivePoint) -> DynSystem {
        build_system(&map(n, d), &alpha, &gamma, Mode::Strict, &SystemBounds::default()).unwrap()
    }

    pub fn relaxed(n: &[i64], d: &[i64], alpha: ProjectivePoint, gamma: ProjectivePoint) -> DynSystem {
        build_system(&map(n, d), &alpha, &gamma, Mode::Relaxed, &SystemBounds::default()).unwrap()
    }

    pub fn a_values(sys: &DynSystem, n: usize) -> Vec<u128> {
        orbit_terms(sys, n).unwrap().iter().map(|t| u128::try_from(&t.a).unwrap()).collect()
    }
}
