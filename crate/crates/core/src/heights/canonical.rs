use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::ln_biguint;
use crate::ratmap::{ProjectivePoint, RationalMap};
use crate::{Error, Result};

/// h(a/b) = log max(|a|, |b|); h(∞) = 0.
pub fn weil_height(p: &ProjectivePoint) -> f64 {
    let (a, b) = p.magnitudes();
    ln_biguint(&a.max(b))
}

fn ln_rational(r: &BigRational) -> f64 {
    ln_biguint(r.numer().magnitude()) - ln_biguint(r.denom().magnitude())
}

fn l1(coeffs: &[BigInt]) -> BigInt {
    coeffs.iter().map(|c| c.abs()).sum()
}

/// Solve the square system `m · x = rhs` over ℚ.
fn solve(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Vec<BigRational> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("system is nonsingular");
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[col][col];
            let pivot_row = m[col].clone();
            for (dst, src) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= src * &factor;
            }
            let v = &rhs[col] * &factor;
            rhs[r] -= v;
        }
    }
    (0..n).map(|i| &rhs[i] / &m[i][i]).collect()
}

/// A constant C with |h(φ(Q)) − d·h(Q)| ≤ C for every Q ∈ ℙ¹(ℚ).
///
/// Upper side: max(|F(x,y)|, |G(x,y)|) ≤ L·max(|x|,|y|)ᵈ with L the larger
/// coefficient 1-norm. Lower side: forms u, v of degree d−1 with
/// uF + vG = Res·X^(2d−1) (and likewise for Y) give
/// max(|F|, |G|) ≥ |Res|/M · max(|x|,|y|)ᵈ, and the common factor of
/// F(x,y), G(x,y) divides Res.
pub fn height_constant(phi: &RationalMap) -> f64 {
    let d = phi.degree();
    let f = phi.numerator().padded(d + 1);
    let g = phi.denominator().padded(d + 1);
    let upper = ln_biguint(l1(&f).max(l1(&g)).magnitude());

    // unknowns: u_0..u_{d-1}, v_0..v_{d-1}; equations: coefficients of X^k, k < 2d
    let size = 2 * d;
    let mut m = vec![vec![BigRational::zero(); size]; size];
    for j in 0..d {
        for i in 0..=d {
            m[i + j][j] = BigRational::from_integer(f[i].clone());
            m[i + j][d + j] = BigRational::from_integer(g[i].clone());
        }
    }
    let mut worst = BigRational::zero();
    for target in [size - 1, 0] {
        let mut rhs = vec![BigRational::zero(); size];
        rhs[target] = BigRational::from_integer(1.into());
        let sol = solve(m.clone(), rhs);
        let norm: BigRational = sol.iter().map(|c| c.abs()).sum();
        if norm > worst {
            worst = norm;
        }
    }
    // M = |Res| · (‖u‖₁ + ‖v‖₁) for the integral solutions
    let lower = ln_biguint(phi.resultant().magnitude()) + ln_rational(&worst);
    upper.max(lower).max(0.0)
}

/// Iteration limits for canonical-height computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HeightBounds {
    pub max_iterations: usize,
    /// Stop once an orbit point needs more bits than this.
    pub max_bits: u64,
}

impl Default for HeightBounds {
    fn default() -> Self {
        Self { max_iterations: 64, max_bits: 1 << 24 }
    }
}

/// An interval [value − error_bound, value + error_bound] containing ĥ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeightEstimate {
    pub value: f64,
    pub error_bound: f64,
    pub iterations_used: usize,
    /// Set when the bounds ran out before the tolerance was met.
    pub max_iterations: bool,
}

impl HeightEstimate {
    pub fn lower(&self) -> f64 {
        self.value - self.error_bound
    }

    pub fn upper(&self) -> f64 {
        self.value + self.error_bound
    }
}

fn point_bits(p: &ProjectivePoint) -> u64 {
    let (a, b) = p.magnitudes();
    a.bits().max(b.bits())
}

struct OrbitHeights<'a> {
    phi: &'a RationalMap,
    constant: f64,
    d: f64,
    point: ProjectivePoint,
    n: usize,
    seen: HashMap<ProjectivePoint, usize>,
}

enum Step {
    Estimate(HeightEstimate),
    Repeat { first: usize, again: usize },
}

impl<'a> OrbitHeights<'a> {
    fn new(phi: &'a RationalMap, start: &ProjectivePoint) -> Self {
        OrbitHeights {
            phi,
            constant: height_constant(phi),
            d: phi.degree() as f64,
            point: start.clone(),
            n: 0,
            seen: HashMap::new(),
        }
    }

    fn current(&mut self) -> Step {
        if let Some(&first) = self.seen.get(&self.point) {
            return Step::Repeat { first, again: self.n };
        }
        self.seen.insert(self.point.clone(), self.n);
        let scale = self.d.powi(self.n as i32);
        let h = weil_height(&self.point);
        let tail = self.constant / (scale * (self.d - 1.0));
        let rounding = 4.0 * f64::EPSILON * h / scale;
        Step::Estimate(HeightEstimate {
            value: h / scale,
            error_bound: tail + rounding,
            iterations_used: self.n,
            max_iterations: false,
        })
    }

    fn exhausted(&self, bounds: &HeightBounds) -> bool {
        self.n >= bounds.max_iterations || point_bits(&self.point) > bounds.max_bits
    }

    fn advance(&mut self) {
        self.point = self.phi.eval(&self.point);
        self.n += 1;
    }
}

/// ĥ_φ(P) = lim h(φⁿ(P))/dⁿ, iterated until the certified tail bound
/// C/(dⁿ(d−1)) drops below `tol`.
pub fn canonical_height(phi: &RationalMap, p: &ProjectivePoint, tol: f64, bounds: &HeightBounds) -> Result<HeightEstimate> {
    if phi.degree() < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let mut orbit = OrbitHeights::new(phi, p);
    loop {
        match orbit.current() {
            Step::Repeat { again, .. } => {
                return Ok(HeightEstimate { value: 0.0, error_bound: 0.0, iterations_used: again, max_iterations: false })
            }
            Step::Estimate(est) => {
                if est.error_bound <= tol {
                    return Ok(est);
                }
                if orbit.exhausted(bounds) {
                    return Ok(HeightEstimate { max_iterations: true, ..est });
                }
            }
        }
        orbit.advance();
    }
}

/// Outcome of [`is_preperiodic`], with its certificate.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Preperiodicity {
    /// φ^first(P) = φ^again(P) with first < again.
    Preperiodic { first: usize, again: usize },
    /// A canonical-height interval bounded away from 0.
    Wandering { estimate: HeightEstimate },
}

impl Preperiodicity {
    pub fn is_preperiodic(&self) -> bool {
        matches!(self, Preperiodicity::Preperiodic { .. })
    }
}

/// Decide whether P has finite φ-orbit: either find a repetition or
/// certify ĥ_φ(P) > 0.
pub fn is_preperiodic(phi: &RationalMap, p: &ProjectivePoint, bounds: &HeightBounds) -> Result<Preperiodicity> {
    if phi.degree() < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let mut orbit = OrbitHeights::new(phi, p);
    loop {
        match orbit.current() {
            Step::Repeat { first, again } => return Ok(Preperiodicity::Preperiodic { first, again }),
            Step::Estimate(est) if est.lower() > 0.0 => return Ok(Preperiodicity::Wandering { estimate: est }),
            Step::Estimate(_) => {
                if orbit.exhausted(bounds) {
                    return Err(Error::Undecided);
                }
            }
        }
        orbit.advance();
    }
}
