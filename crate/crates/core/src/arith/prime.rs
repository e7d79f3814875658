use std::sync::OnceLock;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Witnesses that make Miller–Rabin deterministic for every n < 2⁶⁴.
const WITNESSES_64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Random rounds used above 2⁶⁴; error probability below 4⁻⁴⁰.
const RANDOM_ROUNDS: usize = 40;

const PRIMALITY_SEED: u64 = 0x005e_ed0f_7072_696d;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in WITNESSES_64 {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES_64 {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(n: &BigUint, n_minus_1: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if &x == n_minus_1 {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

/// Primality test: deterministic below 2⁶⁴, Miller–Rabin with base 2 plus
/// 40 pseudorandom bases (fixed seed) above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in small_primes() {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    if !strong_probable_prime(n, &n_minus_1, &d, s, &BigUint::from(2u32)) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(PRIMALITY_SEED);
    let low = BigUint::from(3u32);
    for _ in 0..RANDOM_ROUNDS {
        let a = rng.gen_biguint_range(&low, &n_minus_1);
        if !strong_probable_prime(n, &n_minus_1, &d, s, &a) {
            return false;
        }
    }
    true
}

fn small_primes() -> &'static [u64] {
    static SMALL: OnceLock<Vec<u64>> = OnceLock::new();
    SMALL.get_or_init(|| primes_up_to(1000))
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1807));
        assert!(is_prime_u64(3263443));
        // 2047 = 23 * 89 is a strong base-2 pseudoprime
        assert!(!is_prime_u64(2047));
        assert!(is_prime_u64(18446744073709551557));
    }

    #[test]
    fn agrees_with_sieve() {
        let sieve = primes_up_to(20_000);
        let mut it = sieve.iter().peekable();
        for n in 0..=20_000u64 {
            let expected = it.peek() == Some(&&n);
            if expected {
                it.next();
            }
            assert_eq!(is_prime_u64(n), expected, "n = {n}");
            assert_eq!(is_prime(&BigUint::from(n)), expected);
        }
    }

    #[test]
    fn big_values() {
        // 2^127 - 1 is a Mersenne prime, 2^128 + 1 is not
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert!(is_prime(&m127));
        let f7 = (BigUint::one() << 128u32) + 1u32;
        assert!(!is_prime(&f7));
        // product of two 64-bit primes
        let p = BigUint::from(18446744073709551557u64);
        let q = BigUint::from(18446744073709551533u64);
        assert!(!is_prime(&(&p * &q)));
        assert!(is_prime(&BigUint::from(3692285647568513u64)));
    }
}
