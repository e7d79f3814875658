use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::{orbit_mod_p, reduce_point};
use crate::arith::primes_up_to;
use crate::ratmap::{has_good_reduction, ProjectivePoint, RationalMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityRow {
    pub p: u64,
    pub rho: usize,
    pub sigma: usize,
    pub divides_some_term: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensitySurvey {
    pub p_max: u64,
    pub target: ProjectivePoint,
    /// Smallest index n taken into account (1 when the target is α).
    pub first_index: usize,
    pub primes_considered: usize,
    pub count: usize,
    pub fraction: f64,
    pub bad_primes_skipped: Vec<u64>,
    pub rows: Vec<DensityRow>,
}

/// For each prime p ≤ p_max of good reduction, whether p divides some
/// A_n, i.e. whether the orbit of α mod p meets γ mod p.
pub fn prime_divisor_density(phi: &RationalMap, alpha: &ProjectivePoint, target: &ProjectivePoint, p_max: u64) -> DensitySurvey {
    let first_index = usize::from(alpha == target);
    let (good, bad): (Vec<u64>, Vec<u64>) =
        primes_up_to(p_max).into_iter().partition(|&p| has_good_reduction(phi, &BigUint::from(p)));
    let rows: Vec<DensityRow> = good
        .par_iter()
        .map(|&p| {
            let orbit = orbit_mod_p(phi, alpha, p).expect("good reduction checked");
            let goal = reduce_point(target, p);
            // indices ≥ first_index reach every trajectory entry from
            // first_index on, plus the start again when it lies on the cycle
            let hit = orbit.trajectory[first_index.min(orbit.trajectory.len())..].contains(&goal)
                || (orbit.tail == 0 && orbit.trajectory[0] == goal);
            DensityRow { p, rho: orbit.tail, sigma: orbit.cycle, divides_some_term: hit }
        })
        .collect();
    let count = rows.iter().filter(|r| r.divides_some_term).count();
    let fraction = if rows.is_empty() { 0.0 } else { count as f64 / rows.len() as f64 };
    DensitySurvey {
        p_max,
        target: target.clone(),
        first_index,
        primes_considered: rows.len(),
        count,
        fraction,
        bad_primes_skipped: bad,
        rows,
    }
}
