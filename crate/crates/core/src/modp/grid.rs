use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use super::{orbit_mod_p, OrbitModP};
use crate::ratmap::{ProjectivePoint, RationalMap};
use crate::Result;

/// A_{m,n}: numerator of φ^{m+n}(α) − φ^m(α) in lowest terms. A difference
/// involving ∞ once is ∞, so A = 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleIndexTerm {
    pub m: usize,
    pub n: usize,
    #[serde(serialize_with = "crate::serde_big::dec")]
    pub a: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleIndexGrid {
    pub m_max: usize,
    pub n_max: usize,
    /// Row-major in m, then n = 1..=n_max.
    pub terms: Vec<DoubleIndexTerm>,
}

impl DoubleIndexGrid {
    pub fn get(&self, m: usize, n: usize) -> Option<&DoubleIndexTerm> {
        if m > self.m_max || n == 0 || n > self.n_max {
            return None;
        }
        self.terms.get(m * self.n_max + n - 1)
    }

    /// Compare exact divisibility with m ≥ ρ and σ | n for every cell.
    pub fn check_tail_cycle(&self, orbit: &OrbitModP) -> TailCycleReport {
        let p = orbit.p;
        let mismatches: Vec<TailCycleMismatch> = self
            .terms
            .iter()
            .filter_map(|t| {
                let divides = t.a.is_zero() || (&t.a % p).is_zero();
                let predicted = t.m >= orbit.tail && t.n % orbit.cycle == 0;
                (divides != predicted).then_some(TailCycleMismatch { m: t.m, n: t.n, divides, predicted })
            })
            .collect();
        TailCycleReport {
            p,
            tail: orbit.tail,
            cycle: orbit.cycle,
            m_max: self.m_max,
            n_max: self.n_max,
            cells_checked: self.terms.len(),
            passed: mismatches.is_empty(),
            mismatches,
        }
    }
}

fn difference_numerator(x: &ProjectivePoint, y: &ProjectivePoint) -> BigUint {
    match (x.to_rational(), y.to_rational()) {
        (Some(a), Some(b)) => (a - b).numer().magnitude().clone(),
        (None, None) => BigUint::zero(),
        _ => 1u32.into(),
    }
}

/// Exact A_{m,n} for 0 ≤ m ≤ M and 1 ≤ n ≤ N.
pub fn double_index_terms(phi: &RationalMap, alpha: &ProjectivePoint, m_max: usize, n_max: usize) -> DoubleIndexGrid {
    let orbit = phi.iterate(alpha, m_max + n_max);
    let terms = (0..=m_max)
        .flat_map(|m| (1..=n_max).map(move |n| (m, n)))
        .map(|(m, n)| DoubleIndexTerm { m, n, a: difference_numerator(&orbit[m + n], &orbit[m]) })
        .collect();
    DoubleIndexGrid { m_max, n_max, terms }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailCycleMismatch {
    pub m: usize,
    pub n: usize,
    pub divides: bool,
    pub predicted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailCycleReport {
    pub p: u64,
    pub tail: usize,
    pub cycle: usize,
    pub m_max: usize,
    pub n_max: usize,
    pub cells_checked: usize,
    pub mismatches: Vec<TailCycleMismatch>,
    pub passed: bool,
}

/// p | A_{m,n} ⟺ m ≥ ρ_p and σ_p | n over the grid m ≤ M, 1 ≤ n ≤ N.
pub fn verify_tail_cycle_criterion(
    phi: &RationalMap,
    alpha: &ProjectivePoint,
    p: u64,
    m_max: usize,
    n_max: usize,
) -> Result<TailCycleReport> {
    let orbit = orbit_mod_p(phi, alpha, p)?;
    Ok(double_index_terms(phi, alpha, m_max, n_max).check_tail_cycle(&orbit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_up_to;
    use crate::Error;

    fn map(n: &[i64], d: &[i64]) -> RationalMap {
        RationalMap::from_i64s(n, d).unwrap()
    }

    fn a(grid: &DoubleIndexGrid, m: usize, n: usize) -> u64 {
        (&grid.get(m, n).unwrap().a).try_into().unwrap()
    }

    #[test]
    fn grid_examples() {
        let zero = ProjectivePoint::integer(0);
        let grid = double_index_terms(&map(&[1, 0, 1], &[1]), &zero, 2, 3);
        assert_eq!(a(&grid, 0, 3), 5);
        assert_eq!(a(&grid, 1, 1), 1);
        assert_eq!(a(&grid, 2, 1), 3);
        assert!(grid.get(0, 0).is_none() && grid.get(3, 1).is_none());
        // p − z + p^e z² with p = 3, e = 1: 0 → 3 → 27
        let grid = double_index_terms(&map(&[3, -1, 3], &[1]), &zero, 0, 2);
        assert_eq!((a(&grid, 0, 1), a(&grid, 0, 2)), (3, 27));
    }

    #[test]
    fn criterion_examples() {
        let phi = map(&[1, 0, 1], &[1]);
        let zero = ProjectivePoint::integer(0);
        for p in [5, 2] {
            let report = verify_tail_cycle_criterion(&phi, &zero, p, 6, 6).unwrap();
            assert!(report.passed, "{report:?}");
        }
        let r5 = verify_tail_cycle_criterion(&phi, &zero, 5, 6, 6).unwrap();
        assert_eq!((r5.tail, r5.cycle, r5.cells_checked), (0, 3, 42));
        let bad = verify_tail_cycle_criterion(&map(&[0, 0, 1], &[3, 2]), &zero, 3, 2, 2);
        assert_eq!(bad, Err(Error::BadReduction(3)));
    }

    #[test]
    fn criterion_all_small_primes() {
        let phi = map(&[1, 0, 1], &[1]);
        let zero = ProjectivePoint::integer(0);
        let grid = double_index_terms(&phi, &zero, 6, 6);
        for p in primes_up_to(100) {
            let orbit = orbit_mod_p(&phi, &zero, p).unwrap();
            assert!(grid.check_tail_cycle(&orbit).passed, "p = {p}");
        }
    }
}
