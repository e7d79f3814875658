use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, coefficients indexed from degree 0. The highest
/// stored coefficient is nonzero unless the polynomial is zero (empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of zⁱ (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn lowest_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Coefficients padded with zeros to length `len`; the coefficient list
    /// of the homogenization X^i Y^(len-1-i).
    pub fn padded(&self, len: usize) -> Vec<BigInt> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), BigInt::zero());
        v
    }

    pub fn scale_div(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x / c).collect())
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub(crate) fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub(crate) fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    /// Primitive part with positive leading coefficient, and the content.
    pub(crate) fn primitive_part(&self) -> (BigInt, Self) {
        let c = self.content();
        if c.is_zero() {
            return (c, Self::zero());
        }
        (c.clone(), self.scale_div(&c))
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * z + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{sign}")?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A binary form Σ cᵢ XⁱY^(deg−i), stored as its coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Form {
    pub coeffs: Vec<BigInt>,
}

impl Form {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &Form) -> Form {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Form { coeffs: out }
    }

    pub fn one() -> Form {
        Form { coeffs: vec![BigInt::one()] }
    }

    pub fn add_scaled(&mut self, other: &Form, c: &BigInt) {
        debug_assert_eq!(self.coeffs.len(), other.coeffs.len());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
    }

    /// Substitute forms P, Q of a common degree m for X, Y: result has
    /// degree deg·m.
    pub fn compose(&self, p: &Form, q: &Form) -> Form {
        let d = self.degree();
        let m = p.degree();
        let mut p_pows = vec![Form::one()];
        let mut q_pows = vec![Form::one()];
        for i in 1..=d {
            p_pows.push(p_pows[i - 1].mul(p));
            q_pows.push(q_pows[i - 1].mul(q));
        }
        let mut out = Form { coeffs: vec![BigInt::zero(); d * m + 1] };
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.add_scaled(&p_pows[i].mul(&q_pows[d - i]), c);
        }
        out
    }

    /// F(x, y) by Horner's rule in homogeneous form.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let d = self.degree();
        let mut acc = self.coeffs[d].clone();
        let mut y_pow = BigInt::one();
        for i in (0..d).rev() {
            y_pow *= y;
            acc *= x;
            if !self.coeffs[i].is_zero() {
                acc += &self.coeffs[i] * &y_pow;
            }
        }
        acc
    }
}
