use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;

/// Pseudo-remainder lc(b)^(deg a − deg b + 1) · a mod b.
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("divisor is nonzero");
    let lb = b.leading().expect("divisor is nonzero").clone();
    let da = a.degree().expect("dividend is nonzero");
    let mut r = a.clone();
    let mut steps = 0;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading().expect("nonzero").clone();
        r = r.scale(&lb).sub(&b.shift(dr - db).scale(&lr));
        steps += 1;
    }
    let missing = (da - db + 1) - steps;
    if missing > 0 {
        r = r.scale(&lb.pow(missing as u32));
    }
    r
}

/// Resultant of two univariate integer polynomials by the subresultant
/// pseudo-remainder sequence; every division is exact.
pub fn univariate_resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return BigInt::zero();
    };
    let (mut a, mut b, mut s) = if da < db {
        let sign = if (da * db) % 2 == 1 { -1 } else { 1 };
        (b.clone(), a.clone(), BigInt::from(sign))
    } else {
        (a.clone(), b.clone(), BigInt::one())
    };
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        return s * b.coeff(0).pow(da as u32);
    }
    let (ca, pa) = a.primitive_part();
    let (cb, pb) = b.primitive_part();
    let t = ca.pow(db as u32) * cb.pow(da as u32);
    a = pa;
    b = pb;
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = &g * h.pow(delta as u32);
        b = r.scale_div(&divisor);
        g = a.leading().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta as u32) / h.pow(delta as u32 - 1),
        };
        match b.degree() {
            None => return BigInt::zero(),
            Some(0) => {
                let da = a.degree().unwrap() as u32;
                let lb = b.coeff(0);
                let h = if da == 0 { h } else { lb.pow(da) / h.pow(da - 1) };
                return s * t * h;
            }
            Some(_) => {}
        }
    }
}

/// Resultant of the degree-`d` homogenizations of `f` and `g`, i.e. the
/// Sylvester determinant with both polynomials padded to formal degree d.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial, d: usize) -> BigInt {
    let (df, dg) = match (f.degree(), g.degree()) {
        (Some(df), Some(dg)) => (df, dg),
        _ => return BigInt::zero(),
    };
    assert!(df <= d && dg <= d, "polynomials exceed the formal degree");
    if df < d && dg < d {
        // common root at infinity
        return BigInt::zero();
    }
    if df == d {
        // Res_d,d(F, G) = lc(f)^(d − deg g) · Res(f, g)
        f.leading().unwrap().pow((d - dg) as u32) * univariate_resultant(f, g)
    } else {
        // Res(F, G) = (−1)^(d·d) Res(G, F)
        let sign = if d % 2 == 1 { -1 } else { 1 };
        BigInt::from(sign) * g.leading().unwrap().pow((d - df) as u32) * univariate_resultant(g, f)
    }
}


#[cfg(test)]
mod tests {
    use super::oracle::{determinant, sylvester};
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn sylvester_resultant(f: &IntPolynomial, g: &IntPolynomial, d: usize) -> BigInt {
        determinant(sylvester(&f.padded(d + 1), d, &g.padded(d + 1), d))
    }

    #[test]
    fn examples() {
        // X^2 + XY and Y^2
        assert_eq!(resultant(&poly(&[0, 1, 1]), &poly(&[1]), 2).magnitude(), &1u32.into());
        // X^2 and Y(2X + 3Y)
        assert_eq!(resultant(&poly(&[0, 0, 1]), &poly(&[3, 2]), 2).magnitude(), &9u32.into());
        let f = poly(&[1, -4, 7]);
        assert!(resultant(&f, &f, 2).is_zero());
        // no leading term in either: common root at infinity
        assert!(resultant(&poly(&[1, 1]), &poly(&[2]), 2).is_zero());
    }

    #[test]
    fn matches_sylvester_on_fixtures() {
        let cases = [
            (poly(&[0, 1, 1]), poly(&[1]), 2),
            (poly(&[0, 0, 1]), poly(&[3, 2]), 2),
            (poly(&[0, 0, 2, 1]), poly(&[5, 1]), 3),
            (poly(&[0, 6]), poly(&[1, 0, 1]), 2),
            (poly(&[0, 0, 1]), poly(&[1, 1]), 2),
            (poly(&[-1, 0, 1]), poly(&[1]), 2),
        ];
        for (f, g, d) in cases {
            assert_eq!(resultant(&f, &g, d), sylvester_resultant(&f, &g, d), "{f} / {g}");
        }
    }

    proptest! {
        #[test]
        fn subresultant_agrees_with_sylvester(
            f in prop::collection::vec(-20i64..20, 1..7),
            g in prop::collection::vec(-20i64..20, 1..7),
        ) {
            let (f, g) = (poly(&f), poly(&g));
            let d = f.degree().unwrap_or(0).max(g.degree().unwrap_or(0)).max(1);
            prop_assert_eq!(resultant(&f, &g, d), sylvester_resultant(&f, &g, d));
            if let (Some(p), Some(q)) = (f.degree(), g.degree()) {
                let direct = determinant(sylvester(f.coeffs(), p, g.coeffs(), q));
                prop_assert_eq!(univariate_resultant(&f, &g), direct);
            }
        }
    }
}
