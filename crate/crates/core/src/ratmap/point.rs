use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// A point of ℙ¹(ℚ): a fraction in lowest terms with positive
/// denominator, or ∞.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjectivePoint {
    Finite { num: BigInt, den: BigInt },
    Infinity,
}

impl ProjectivePoint {
    pub fn integer(n: impl Into<BigInt>) -> Self {
        ProjectivePoint::Finite { num: n.into(), den: BigInt::one() }
    }

    /// The point a/b; `None` when b = 0 and a = 0. b = 0 with a ≠ 0 is ∞.
    pub fn fraction(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self::from_homogeneous(a.into(), b.into()).expect("0/0 is not a point")
    }

    /// Normalize homogeneous coordinates [x : y].
    pub fn from_homogeneous(x: BigInt, y: BigInt) -> Option<Self> {
        if y.is_zero() {
            return (!x.is_zero()).then_some(ProjectivePoint::Infinity);
        }
        let g = x.gcd(&y);
        let (mut num, mut den) = (x / &g, y / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Some(ProjectivePoint::Finite { num, den })
    }

    pub fn from_rational(r: &BigRational) -> Self {
        ProjectivePoint::Finite { num: r.numer().clone(), den: r.denom().clone() }
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            ProjectivePoint::Finite { num, den } => Some(BigRational::new_raw(num.clone(), den.clone())),
            ProjectivePoint::Infinity => None,
        }
    }

    /// Coordinates (x, y) with ∞ = (1, 0).
    pub fn homogeneous(&self) -> (BigInt, BigInt) {
        match self {
            ProjectivePoint::Finite { num, den } => (num.clone(), den.clone()),
            ProjectivePoint::Infinity => (BigInt::one(), BigInt::zero()),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjectivePoint::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ProjectivePoint::Finite { num, .. } if num.is_zero())
    }

    /// |numerator| and denominator; ∞ gives (1, 0).
    pub fn magnitudes(&self) -> (BigUint, BigUint) {
        match self {
            ProjectivePoint::Finite { num, den } => (num.magnitude().clone(), den.magnitude().clone()),
            ProjectivePoint::Infinity => (BigUint::one(), BigUint::zero()),
        }
    }

    /// The coordinate of `self` in a chart centred at `center`: the
    /// difference `self − center` for finite centres and `1/self` for ∞.
    /// It vanishes exactly when `self = center`.
    pub fn local_coordinate(&self, center: &ProjectivePoint) -> ProjectivePoint {
        match center {
            ProjectivePoint::Finite { num: c, den: e } => match self {
                ProjectivePoint::Finite { num: a, den: b } => {
                    Self::from_homogeneous(a * e - c * b, b * e).expect("denominator is nonzero")
                }
                ProjectivePoint::Infinity => ProjectivePoint::Infinity,
            },
            ProjectivePoint::Infinity => match self {
                ProjectivePoint::Finite { num, den } => {
                    Self::from_homogeneous(den.clone(), num.clone()).expect("denominator is nonzero")
                }
                ProjectivePoint::Infinity => ProjectivePoint::integer(0),
            },
        }
    }

    /// The 2×2 determinant x₁y₂ − x₂y₁ of normalized coordinates; a prime
    /// divides it exactly when the two points agree modulo that prime.
    pub fn cross(&self, other: &ProjectivePoint) -> BigInt {
        let (x1, y1) = self.homogeneous();
        let (x2, y2) = other.homogeneous();
        x1 * y2 - x2 * y1
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite { num, den } if den.is_one() => write!(f, "{num}"),
            ProjectivePoint::Finite { num, den } => write!(f, "{num}/{den}"),
            ProjectivePoint::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ProjectivePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        super::parse::parse_point(s)
    }
}

impl serde::Serialize for ProjectivePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
