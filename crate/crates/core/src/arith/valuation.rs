use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// gcd that reduces the larger operand modulo the smaller one first.
///
/// The binary gcd in `num-bigint` is quadratic in the size gap between its
/// operands; orbit numerators are routinely compared against much smaller
/// moduli.
pub fn big_gcd(a: &BigUint, b: &BigUint) -> BigUint {
    let (big, small) = if a >= b { (a, b) } else { (b, a) };
    if small.is_zero() {
        return big.clone();
    }
    let r = big % small;
    if r.is_zero() {
        return small.clone();
    }
    small.gcd(&r)
}

/// Largest v with pᵛ | n.
pub fn ord_p(n: &BigInt, p: &BigUint) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::OrdOfZero);
    }
    if p <= &BigUint::one() {
        return Err(Error::NotPrime(p.to_string()));
    }
    let mut m = n.magnitude().clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Ok(v);
        }
        m = q;
        v += 1;
    }
}

/// [`ord_p`] for a machine-word prime and a nonnegative magnitude.
pub fn ord_p_u64(n: &BigUint, p: u64) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::OrdOfZero);
    }
    if p < 2 {
        return Err(Error::NotPrime(p.to_string()));
    }
    if !(n % p).is_zero() {
        return Ok(0);
    }
    let mut m = n / p;
    let mut v = 1;
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    Ok(v)
}

/// The largest divisor of `n` coprime to `m`, by repeated gcd stripping.
pub fn coprime_part(n: &BigUint, m: &BigUint) -> BigUint {
    let mut r = n.clone();
    let mut g = big_gcd(&r, m);
    while !g.is_one() && !r.is_zero() {
        r /= &g;
        g = big_gcd(&r, &g);
    }
    r
}

/// Natural logarithm of a positive big integer, accurate to f64 precision.
pub fn ln_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().map_or(f64::INFINITY, f64::ln);
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().unwrap_or(u64::MAX);
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn ord_examples() {
        assert_eq!(ord_p(&BigInt::from(6272), &b(2)), Ok(7));
        assert_eq!(ord_p(&BigInt::from(9), &b(3)), Ok(2));
        assert_eq!(ord_p(&BigInt::from(7), &b(2)), Ok(0));
        assert_eq!(ord_p(&BigInt::from(-12), &b(2)), Ok(2));
        assert_eq!(ord_p(&BigInt::zero(), &b(5)), Err(Error::OrdOfZero));
        assert_eq!(ord_p_u64(&b(6272), 7), Ok(2));
        assert_eq!(ord_p_u64(&BigUint::zero(), 7), Err(Error::OrdOfZero));
    }

    #[test]
    fn coprime_part_examples() {
        assert_eq!(coprime_part(&b(1806), &b(42)), b(43));
        assert_eq!(coprime_part(&b(8), &b(1)), b(8));
        assert_eq!(coprime_part(&b(16), &b(2)), b(1));
        assert_eq!(coprime_part(&b(2u64.pow(20) * 9 * 11), &b(6)), b(11));
    }

    #[test]
    fn gcd_with_lopsided_operands() {
        let huge = (BigUint::one() << 200_000u32) * b(3 * 5 * 7);
        assert_eq!(big_gcd(&huge, &b(35 * 11)), b(35));
        assert_eq!(big_gcd(&b(0), &b(12)), b(12));
    }

    #[test]
    fn ln_of_huge_values() {
        let n = BigUint::from(10u32).pow(5000);
        let expected = 5000.0 * std::f64::consts::LN_10;
        assert!((ln_biguint(&n) - expected).abs() < 1e-9 * expected);
        assert!((ln_biguint(&b(21)) - 21f64.ln()).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn coprime_part_properties(n in 1u64..1_000_000_000_000, m in 1u64..1_000_000_000_000) {
            let (nb, mb) = (b(n), b(m));
            let r = coprime_part(&nb, &mb);
            prop_assert!((&nb % &r).is_zero());
            prop_assert!(r.gcd(&mb).is_one());
            // every prime of n / r divides m: n / r divides a power of m
            let mut rest = &nb / &r;
            let mut g = rest.gcd(&mb);
            while !g.is_one() {
                rest /= &g;
                g = rest.gcd(&mb);
            }
            prop_assert!(rest.is_one());
        }

        #[test]
        fn ord_is_additive(a in 1i64..10_000_000, c in -10_000_000i64..10_000_000, p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 101])) {
            prop_assume!(c != 0);
            let pa = ord_p(&BigInt::from(a), &b(p)).unwrap();
            let pc = ord_p(&BigInt::from(c), &b(p)).unwrap();
            let pac = ord_p(&(BigInt::from(a) * BigInt::from(c)), &b(p)).unwrap();
            prop_assert_eq!(pac, pa + pc);
        }
    }
}
