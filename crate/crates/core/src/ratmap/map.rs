use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::point::ProjectivePoint;
use super::poly::{Form, IntPolynomial};
use super::resultant::resultant;
use crate::arith::big_gcd;
use crate::{Error, Result};

/// A rational map φ = num/den of degree d ≥ 1 with integer coefficients.
///
/// Invariants: the joint content of all coefficients is 1, the leading
/// coefficient of the denominator is positive, and the resultant of the
/// degree-d homogenizations is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMap {
    num: IntPolynomial,
    den: IntPolynomial,
    degree: usize,
    resultant: BigInt,
}

impl RationalMap {
    /// Build a map from numerator and denominator coefficient lists
    /// (indexed from degree 0), dividing out content and fixing the sign.
    pub fn normalize(num: &[BigInt], den: &[BigInt]) -> Result<Self> {
        let num = IntPolynomial::new(num.to_vec());
        let den = IntPolynomial::new(den.to_vec());
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let degree = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
        if degree == 0 {
            // constant map
            return Err(Error::DegenerateMap);
        }
        let mut content = num.content().gcd(&den.content());
        if den.leading().is_some_and(Signed::is_negative) {
            content = -content;
        }
        let num = num.scale_div(&content);
        let den = den.scale_div(&content);
        let resultant = resultant(&num, &den, degree);
        if resultant.is_zero() {
            return Err(Error::DegenerateMap);
        }
        Ok(Self { num, den, degree, resultant })
    }

    pub fn from_i64s(num: &[i64], den: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        Self::normalize(&conv(num), &conv(den))
    }

    pub(crate) fn from_forms(f: Form, g: Form) -> Result<Self> {
        Self::normalize(&f.coeffs, &g.coeffs)
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Resultant of the homogenized numerator and denominator (nonzero).
    pub fn resultant(&self) -> &BigInt {
        &self.resultant
    }

    pub(crate) fn forms(&self) -> (Form, Form) {
        let len = self.degree + 1;
        (Form { coeffs: self.num.padded(len) }, Form { coeffs: self.den.padded(len) })
    }

    /// φ(P) in lowest terms, evaluated on homogeneous coordinates.
    pub fn eval(&self, p: &ProjectivePoint) -> ProjectivePoint {
        let (x, y) = p.homogeneous();
        let (f, g) = self.forms();
        let fx = f.eval(&x, &y);
        let gx = g.eval(&x, &y);
        // for coprime (x, y) the common factor of F(x, y), G(x, y) divides
        // the resultant, so the gcd never needs the full-size operands
        let res = self.resultant.magnitude();
        let common = if res.is_one() {
            BigUint::one()
        } else {
            let r1 = big_gcd(res, &(fx.magnitude() % res));
            big_gcd(&r1, &(gx.magnitude() % &r1))
        };
        let common = BigInt::from(common);
        let (x, y) = if common.is_one() { (fx, gx) } else { (fx / &common, gx / &common) };
        match y.sign() {
            num_bigint::Sign::NoSign => ProjectivePoint::Infinity,
            num_bigint::Sign::Minus => ProjectivePoint::Finite { num: -x, den: -y },
            num_bigint::Sign::Plus => ProjectivePoint::Finite { num: x, den: y },
        }
    }

    /// [P, φ(P), …, φⁿ(P)].
    pub fn iterate(&self, p: &ProjectivePoint, n: usize) -> Vec<ProjectivePoint> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(p.clone());
        for i in 0..n {
            let next = self.eval(&out[i]);
            out.push(next);
        }
        out
    }

    /// φⁿ(P) without keeping the intermediate points.
    pub fn iterate_point(&self, p: &ProjectivePoint, n: usize) -> ProjectivePoint {
        (0..n).fold(p.clone(), |q, _| self.eval(&q))
    }

    /// self ∘ other.
    pub fn compose(&self, other: &RationalMap) -> RationalMap {
        let (f, g) = self.forms();
        let (p, q) = other.forms();
        Self::from_forms(f.compose(&p, &q), g.compose(&p, &q)).expect("composition of morphisms is a morphism")
    }

    /// φᵏ for k ≥ 1.
    pub fn nth_iterate(&self, k: usize) -> RationalMap {
        assert!(k >= 1, "iterate index must be positive");
        (1..k).fold(self.clone(), |acc, _| self.compose(&acc))
    }

    /// f⁻¹ ∘ φ ∘ f with f(z) = z + γ.
    pub fn conjugate_translation(&self, gamma: &BigRational) -> RationalMap {
        if gamma.is_zero() {
            return self.clone();
        }
        let c = gamma.numer();
        let e = gamma.denom();
        let (f, g) = self.forms();
        // f[X : Y] = [eX + cY : eY]
        let shifted_x = Form { coeffs: vec![c.clone(), e.clone()] };
        let scaled_y = Form { coeffs: vec![e.clone(), BigInt::zero()] };
        let u = f.compose(&shifted_x, &scaled_y);
        let v = g.compose(&shifted_x, &scaled_y);
        // f⁻¹[U : V] = [eU − cV : eV]
        let mut top = Form { coeffs: u.coeffs.iter().map(|a| a * e).collect() };
        top.add_scaled(&v, &-c);
        let bottom = Form { coeffs: v.coeffs.iter().map(|a| a * e).collect() };
        Self::from_forms(top, bottom).expect("conjugation preserves degree")
    }

    /// ι ∘ φ ∘ ι with ι(z) = 1/z, moving ∞ to 0.
    pub fn conjugate_inversion(&self) -> RationalMap {
        let (f, g) = self.forms();
        let rev = |form: Form| Form { coeffs: form.coeffs.into_iter().rev().collect() };
        // [X : Y] ↦ [G(Y, X) : F(Y, X)]
        Self::from_forms(rev(g), rev(f)).expect("conjugation preserves degree")
    }

    /// Conjugate so that `center` moves to 0.
    pub fn conjugate_to_zero(&self, center: &ProjectivePoint) -> RationalMap {
        match center.to_rational() {
            Some(gamma) => self.conjugate_translation(&gamma),
            None => self.conjugate_inversion(),
        }
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::from_i64s(&[1]) {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
