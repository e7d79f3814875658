//! Orbits modulo primes and the doubly indexed sequences A_{m,n}.

mod density;
mod grid;
mod scan;

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::arith::is_prime_u64;
use crate::ratmap::{has_good_reduction, ProjectivePoint, RationalMap};
use crate::{Error, Result};

pub use density::{prime_divisor_density, DensityRow, DensitySurvey};
pub use grid::{
    double_index_terms, verify_tail_cycle_criterion, DoubleIndexGrid, DoubleIndexTerm, TailCycleMismatch, TailCycleReport,
};
pub use scan::{strong_conjecture_scan, weak_conjecture_scan, StrongCell, StrongScanReport};

/// A point of ℙ¹(𝔽_p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Residue {
    Finite(u64),
    Infinity,
}

impl Serialize for Residue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Residue::Finite(r) => s.serialize_u64(*r),
            Residue::Infinity => s.serialize_str("inf"),
        }
    }
}

fn mod_p(n: &BigInt, p: u64) -> u64 {
    let r = (n.magnitude() % p).to_u64().expect("residue fits");
    if n.sign() == num_bigint::Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn from_homogeneous(x: u64, y: u64, p: u64) -> Residue {
    if y == 0 {
        Residue::Infinity
    } else {
        Residue::Finite(mul_mod(x, inv_mod(y, p), p))
    }
}

/// Reduce a point modulo p.
pub fn reduce_point(point: &ProjectivePoint, p: u64) -> Residue {
    let (x, y) = point.homogeneous();
    from_homogeneous(mod_p(&x, p), mod_p(&y, p), p)
}

/// φ reduced modulo a prime of good reduction.
#[derive(Debug, Clone)]
pub struct ReducedMap {
    p: u64,
    num: Vec<u64>,
    den: Vec<u64>,
}

impl ReducedMap {
    pub fn new(phi: &RationalMap, p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if !has_good_reduction(phi, &BigUint::from(p)) {
            return Err(Error::BadReduction(p));
        }
        let len = phi.degree() + 1;
        let red = |c: Vec<BigInt>| c.iter().map(|a| mod_p(a, p)).collect();
        Ok(ReducedMap { p, num: red(phi.numerator().padded(len)), den: red(phi.denominator().padded(len)) })
    }

    fn form(&self, coeffs: &[u64], x: u64, y: u64) -> u64 {
        // Σ c_i xⁱ y^{d−i}: Horner in x, the k-th coefficient from the top
        // picks up y^k
        let p = self.p;
        let mut acc = 0u64;
        let mut ypow = 1u64;
        for &c in coeffs.iter().rev() {
            acc = (mul_mod(acc, x, p) + mul_mod(c, ypow, p)) % p;
            ypow = mul_mod(ypow, y, p);
        }
        acc
    }

    pub fn eval(&self, r: Residue) -> Residue {
        let (x, y) = match r {
            Residue::Finite(a) => (a, 1),
            Residue::Infinity => (1, 0),
        };
        let u = self.form(&self.num, x, y);
        let v = self.form(&self.den, x, y);
        debug_assert!(u != 0 || v != 0, "good reduction keeps forms coprime");
        from_homogeneous(u, v, self.p)
    }
}

/// Tail ρ and cycle σ of α under φ modulo p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitModP {
    pub p: u64,
    pub tail: usize,
    pub cycle: usize,
    /// Residues of φⁱ(α) for i < ρ + σ.
    pub trajectory: Vec<Residue>,
}

impl OrbitModP {
    /// φⁿ(α) mod p for any n.
    pub fn residue(&self, n: usize) -> Residue {
        if n < self.tail {
            self.trajectory[n]
        } else {
            self.trajectory[self.tail + (n - self.tail) % self.cycle]
        }
    }
}

/// Tabulate the orbit of α in ℙ¹(𝔽_p) until it repeats.
pub fn orbit_mod_p(phi: &RationalMap, alpha: &ProjectivePoint, p: u64) -> Result<OrbitModP> {
    let map = ReducedMap::new(phi, p)?;
    let mut index: HashMap<Residue, usize> = HashMap::new();
    let mut trajectory = Vec::new();
    let mut r = reduce_point(alpha, p);
    loop {
        if let Some(&tail) = index.get(&r) {
            let cycle = trajectory.len() - tail;
            return Ok(OrbitModP { p, tail, cycle, trajectory });
        }
        index.insert(r, trajectory.len());
        trajectory.push(r);
        r = map.eval(r);
    }
}
