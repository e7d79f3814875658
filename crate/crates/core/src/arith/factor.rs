use std::sync::OnceLock;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::prime::{is_prime, primes_up_to};
use super::valuation::big_gcd;

pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

/// Effort limits for [`factor`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FactorBudget {
    /// Primes up to this bound are removed by trial division.
    pub trial_bound: u64,
    /// Iteration cap for each Pollard rho attempt.
    pub rho_iterations: u64,
    /// Seed for the rho polynomial and starting values.
    pub seed: u64,
    /// Cofactors above this many bits are neither tested for primality
    /// nor attacked with rho; they are returned as the cofactor.
    pub max_bits: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        Self { trial_bound: DEFAULT_TRIAL_BOUND, rho_iterations: 1 << 16, seed: 0, max_bits: 2048 }
    }
}

/// A possibly partial prime factorization of a positive integer.
///
/// `factors` is sorted by prime and the product of all prime powers times
/// `cofactor` equals the input. `complete` holds exactly when the cofactor
/// is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(BigUint, u32)>,
    pub cofactor: BigUint,
    pub complete: bool,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn recompose(&self) -> BigUint {
        self.factors.iter().fold(self.cofactor.clone(), |acc, (p, e)| acc * p.pow(*e))
    }
}

fn trial_primes(bound: u64) -> std::borrow::Cow<'static, [u64]> {
    static DEFAULT: OnceLock<Vec<u64>> = OnceLock::new();
    if bound == DEFAULT_TRIAL_BOUND {
        std::borrow::Cow::Borrowed(DEFAULT.get_or_init(|| primes_up_to(DEFAULT_TRIAL_BOUND)))
    } else {
        std::borrow::Cow::Owned(primes_up_to(bound))
    }
}

/// Factor `n` within `budget`. Never fails: whatever cannot be split is
/// left in the cofactor.
pub fn factor(n: &BigUint, budget: &FactorBudget) -> Factorization {
    if n.is_zero() {
        return Factorization { factors: Vec::new(), cofactor: BigUint::zero(), complete: false };
    }
    let mut found: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    let primes = trial_primes(budget.trial_bound);

    // Remainders are taken against products of several primes at once.
    let mut i = 0;
    'trial: while i < primes.len() && !rest.is_one() {
        let start = i;
        let mut modulus: u64 = 1;
        while i < primes.len() {
            match modulus.checked_mul(primes[i]) {
                Some(m) => {
                    modulus = m;
                    i += 1;
                }
                None => break,
            }
        }
        let r = (&rest % modulus).to_u64().unwrap_or(0);
        for &p in &primes[start..i] {
            if r.is_multiple_of(p) {
                let mut e = 0;
                while (&rest % p).is_zero() {
                    rest /= p;
                    e += 1;
                }
                found.push((BigUint::from(p), e));
            }
            if rest.to_u64().is_some_and(|r| p * p > r) {
                break 'trial;
            }
        }
    }

    let mut cofactor = BigUint::one();
    if !rest.is_one() {
        let last_trial = primes.last().copied().unwrap_or(1);
        if rest <= BigUint::from(last_trial) * last_trial {
            // no prime factor below the trial bound remains, so rest is prime
            found.push((rest, 1));
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
            let mut stack = vec![rest];
            while let Some(c) = stack.pop() {
                if c.bits() > budget.max_bits {
                    cofactor *= c;
                    continue;
                }
                if is_prime(&c) {
                    found.push((c, 1));
                    continue;
                }
                match split(&c, budget.rho_iterations, &mut rng) {
                    Some(d) => {
                        let q = &c / &d;
                        stack.push(d);
                        stack.push(q);
                    }
                    None => cofactor *= c,
                }
            }
        }
    }

    found.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::with_capacity(found.len());
    for (p, e) in found {
        match factors.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => factors.push((p, e)),
        }
    }
    let complete = cofactor.is_one();
    Factorization { factors, cofactor, complete }
}

/// Find a nontrivial divisor of the composite `n`, or give up.
fn split(n: &BigUint, iterations: u64, rng: &mut ChaCha8Rng) -> Option<BigUint> {
    if let Some(root) = perfect_square_root(n) {
        return Some(root);
    }
    // retries only help when a run collapses onto n itself
    for _ in 0..3 {
        let outcome = if let Some(small) = n.to_u64() {
            let c = rng.gen_range(1..small);
            let x0 = rng.gen_range(0..small);
            rho_u64(small, c, x0, iterations).map(BigUint::from)
        } else {
            let c = rng.gen_biguint_range(&BigUint::one(), n);
            let x0 = rng.gen_biguint_below(n);
            rho_big(n, &c, &x0, iterations)
        };
        match outcome {
            Rho::Found(d) => return Some(d),
            Rho::Collapsed => continue,
            Rho::Exhausted => return None,
        }
    }
    None
}

fn perfect_square_root(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

enum Rho<T> {
    Found(T),
    Collapsed,
    Exhausted,
}

impl<T> Rho<T> {
    fn map<U>(self, f: impl FnOnce(T) -> U) -> Rho<U> {
        match self {
            Rho::Found(t) => Rho::Found(f(t)),
            Rho::Collapsed => Rho::Collapsed,
            Rho::Exhausted => Rho::Exhausted,
        }
    }
}

const BATCH: u64 = 128;

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Brent's cycle finding with products of differences batched between gcds.
fn rho_u64(n: u64, c: u64, x0: u64, iterations: u64) -> Rho<u64> {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let f = |y: u64| ((mul(y, y) as u128 + c as u128) % n as u128) as u64;
    let (mut y, mut r, mut q, mut g) = (x0, 1u64, 1u64, 1u64);
    let (mut x, mut ys) = (x0, x0);
    let mut spent = 0u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        spent += r;
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul(q, x.abs_diff(y));
            }
            g = gcd_u64(q, n);
            k += BATCH;
        }
        spent += r;
        r *= 2;
        if g == 1 && spent > iterations {
            return Rho::Exhausted;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    if g == n {
        Rho::Collapsed
    } else {
        Rho::Found(g)
    }
}

fn rho_big(n: &BigUint, c: &BigUint, x0: &BigUint, iterations: u64) -> Rho<BigUint> {
    let f = |y: &BigUint| (y * y + c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a >= b { a - b } else { b - a };
    let (mut y, mut r, mut q, mut g) = (x0.clone(), 1u64, BigUint::one(), BigUint::one());
    let (mut x, mut ys) = (x0.clone(), x0.clone());
    let mut spent = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        spent += r;
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                q = (q * diff(&x, &y)) % n;
            }
            g = big_gcd(&q, n);
            k += BATCH;
        }
        spent += r;
        r *= 2;
        if g.is_one() && spent > iterations {
            return Rho::Exhausted;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = big_gcd(&diff(&x, &ys), n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n || g.is_zero() {
        Rho::Collapsed
    } else {
        Rho::Found(g)
    }
}
