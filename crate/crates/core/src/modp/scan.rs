use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::grid::double_index_terms;
use crate::arith::{coprime_part, factor, FactorBudget};
use crate::dynseq::{build_system, orbit_terms, Mode, SystemBounds, ZsigmondyReport};
use crate::heights::is_preperiodic;
use crate::ratmap::{ProjectivePoint, RationalMap};
use crate::{Error, Result};

fn require_wandering(phi: &RationalMap, alpha: &ProjectivePoint, bounds: &SystemBounds) -> Result<()> {
    if is_preperiodic(phi, alpha, &bounds.height)?.is_preperiodic() {
        return Err(Error::AlphaPreperiodic);
    }
    Ok(())
}

/// Primitive divisors of the numerators of φⁿ(α) − α, n ≥ 1.
pub fn weak_conjecture_scan(
    phi: &RationalMap,
    alpha: &ProjectivePoint,
    horizon: usize,
    budget: &FactorBudget,
    full_integers: bool,
) -> Result<ZsigmondyReport> {
    let bounds = SystemBounds::default();
    require_wandering(phi, alpha, &bounds)?;
    let sys = build_system(phi, alpha, alpha, Mode::Relaxed, &bounds)?;
    ZsigmondyReport::from_terms(&orbit_terms(&sys, horizon)?, budget, full_integers)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongCell {
    pub m: usize,
    pub n: usize,
    pub digits: usize,
    pub has_primitive: bool,
    #[serde(serialize_with = "crate::serde_big::dec_vec")]
    pub witness_primes: Vec<BigUint>,
    #[serde(serialize_with = "crate::serde_big::dec_opt", skip_serializing_if = "Option::is_none")]
    pub residual_composite: Option<BigUint>,
    /// Some cells that the definition compares against lie outside the
    /// grid (i < m with j > N, or j < n with i > M).
    pub boundary_limited: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongScanReport {
    pub m_max: usize,
    pub n_max: usize,
    pub cells: Vec<StrongCell>,
    /// Cells (m, n) without a primitive divisor.
    pub zsigmondy_set: Vec<(usize, usize)>,
    pub boundary_note: String,
}

const BOUNDARY_NOTE: &str = "primitivity is tested against the cells (i, j) of this grid with i < m or j < n; \
    cells outside the grid are not compared, so boundary_limited verdicts may change on a larger grid";

/// Doubly indexed scan: (m, n) is primitive when some prime divides A_{m,n}
/// and no A_{i,j} with i < m or j < n inside the grid.
pub fn strong_conjecture_scan(
    phi: &RationalMap,
    alpha: &ProjectivePoint,
    m_max: usize,
    n_max: usize,
    budget: &FactorBudget,
) -> Result<StrongScanReport> {
    require_wandering(phi, alpha, &SystemBounds::default())?;
    let grid = double_index_terms(phi, alpha, m_max, n_max);
    let cells: Vec<StrongCell> = grid
        .terms
        .par_iter()
        .map(|t| {
            let mut rest = t.a.clone();
            for other in &grid.terms {
                if rest.is_one() || rest.is_zero() {
                    break;
                }
                if (other.m < t.m || other.n < t.n) && !other.a.is_zero() {
                    rest = coprime_part(&rest, &other.a);
                }
            }
            let has_primitive = rest > BigUint::one();
            let (witness_primes, residual_composite) = if has_primitive {
                let f = factor(&rest, budget);
                let residual = (!f.complete).then(|| f.cofactor.clone());
                (f.primes().cloned().collect(), residual)
            } else {
                (Vec::new(), None)
            };
            StrongCell {
                m: t.m,
                n: t.n,
                digits: t.a.to_str_radix(10).len(),
                has_primitive,
                witness_primes,
                residual_composite,
                boundary_limited: t.m >= 1 || t.n >= 2,
            }
        })
        .collect();
    let zsigmondy_set = cells.iter().filter(|c| !c.has_primitive).map(|c| (c.m, c.n)).collect();
    Ok(StrongScanReport { m_max, n_max, cells, zsigmondy_set, boundary_note: BOUNDARY_NOTE.into() })
}
