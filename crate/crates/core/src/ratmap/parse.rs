//! Map-expression grammar: rational-coefficient expressions in `z` built
//! from `+ - * / ^` and parentheses, e.g. `(z^2+z)`, `(z^3)/(1+2*z)`,
//! `1/2*z^2 - 3`. Nothing is cancelled, so a shared factor between the
//! numerator and denominator is reported as a degenerate map.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::map::RationalMap;
use super::point::ProjectivePoint;
use crate::{Error, Result};

type QPoly = Vec<BigRational>;

fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn q_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn q_add(a: &QPoly, b: &QPoly, sign: i32) -> QPoly {
    let n = a.len().max(b.len());
    let get = |p: &QPoly, i: usize| p.get(i).cloned().unwrap_or_else(BigRational::zero);
    trim((0..n).map(|i| if sign > 0 { get(a, i) + get(b, i) } else { get(a, i) - get(b, i) }).collect())
}

/// An unreduced quotient of polynomials.
#[derive(Clone)]
struct Frac {
    num: QPoly,
    den: QPoly,
}

impl Frac {
    fn constant(c: BigRational) -> Self {
        Frac { num: trim(vec![c]), den: vec![BigRational::one()] }
    }

    fn z() -> Self {
        Frac { num: vec![BigRational::zero(), BigRational::one()], den: vec![BigRational::one()] }
    }

    fn is_const_den(&self) -> bool {
        self.den.len() == 1
    }

    fn add(&self, other: &Frac, sign: i32) -> Frac {
        if self.den == other.den {
            return Frac { num: q_add(&self.num, &other.num, sign), den: self.den.clone() };
        }
        Frac {
            num: q_add(&q_mul(&self.num, &other.den), &q_mul(&other.num, &self.den), sign),
            den: q_mul(&self.den, &other.den),
        }
    }

    fn mul(&self, other: &Frac) -> Frac {
        Frac { num: q_mul(&self.num, &other.num), den: q_mul(&self.den, &other.den) }
    }

    fn div(&self, other: &Frac) -> Result<Frac> {
        if other.num.is_empty() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Frac { num: q_mul(&self.num, &other.den), den: q_mul(&self.den, &other.num) })
    }

    fn pow(&self, e: u32) -> Frac {
        let mut out = Frac::constant(BigRational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { src: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at position {}", self.pos)))
    }

    fn expr(&mut self) -> Result<Frac> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Frac::constant(BigRational::zero()).add(&self.term()?, -1)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(&rhs, if c == b'+' { 1 } else { -1 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Frac> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.div(&self.power()?)?;
                }
                // implicit product such as `2z` or `3(z+1)`
                Some(b'z' | b'(') => acc = acc.mul(&self.power()?),
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Frac> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
            let Ok(e) = digits.parse::<u32>() else {
                return self.err("expected a nonnegative integer exponent");
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Frac> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(Frac::z())
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(Frac::constant(BigRational::from_integer(n)))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn clear_denominators(num: &QPoly, den: &QPoly) -> (Vec<BigInt>, Vec<BigInt>) {
    let lcm = num.iter().chain(den).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scale = |p: &QPoly| p.iter().map(|c| (c * &lcm).to_integer()).collect::<Vec<_>>();
    (scale(num), scale(den))
}

/// Parse a map expression into a normalized [`RationalMap`].
pub fn parse_map(expr: &str) -> Result<RationalMap> {
    let mut parser = Parser::new(expr);
    let frac = parser.expr()?;
    if parser.peek().is_some() {
        return parser.err("trailing input");
    }
    if frac.den.is_empty() {
        return Err(Error::ZeroDenominator);
    }
    debug_assert!(frac.is_const_den() || !frac.den.is_empty());
    let (num, den) = clear_denominators(&frac.num, &frac.den);
    RationalMap::normalize(&num, &den)
}

/// Parse a point of ℙ¹(ℚ): an integer, a fraction `a/b`, or `inf`.
pub fn parse_point(s: &str) -> Result<ProjectivePoint> {
    let t = s.trim();
    if matches!(t, "inf" | "infinity" | "∞") {
        return Ok(ProjectivePoint::Infinity);
    }
    let bad = || Error::Parse(format!("invalid rational point '{s}'"));
    let (a, b) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let a: BigInt = a.parse().map_err(|_| bad())?;
    let b: BigInt = b.parse().map_err(|_| bad())?;
    ProjectivePoint::from_homogeneous(a, b).ok_or_else(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(n: &[i64], d: &[i64]) -> RationalMap {
        RationalMap::from_i64s(n, d).unwrap()
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_map("(z^2+z)").unwrap(), map(&[0, 1, 1], &[1]));
        assert_eq!(parse_map("(z^3)/(1+2*z)").unwrap(), map(&[0, 0, 0, 1], &[1, 2]));
        assert_eq!(parse_map("z^2 - 1").unwrap(), map(&[-1, 0, 1], &[1]));
        assert_eq!(parse_map("(2*z^2+z^3)/(5+z)").unwrap(), map(&[0, 0, 2, 1], &[5, 1]));
        assert_eq!(parse_map("3 - z + 9z^2").unwrap(), map(&[3, -1, 9], &[1]));
        // rational coefficients are cleared
        assert_eq!(parse_map("1/2*z^2 + 1/3").unwrap(), map(&[2, 0, 3], &[6]));
        assert_eq!(parse_map("z^2/(1+z)").unwrap(), map(&[0, 0, 1], &[1, 1]));
    }

    #[test]
    fn grammar_errors() {
        assert_eq!(parse_map("(z^2+z)/(0)"), Err(Error::ZeroDenominator));
        assert_eq!(parse_map("(z-z^3)/z"), Err(Error::DegenerateMap));
        assert!(matches!(parse_map("z^"), Err(Error::Parse(_))));
        assert!(matches!(parse_map("(z+1"), Err(Error::Parse(_))));
        assert!(matches!(parse_map("z + y"), Err(Error::Parse(_))));
        assert!(matches!(parse_map(""), Err(Error::Parse(_))));
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("3/5").unwrap(), ProjectivePoint::fraction(3, 5));
        assert_eq!(parse_point("-2").unwrap(), ProjectivePoint::integer(-2));
        assert_eq!(parse_point("6/-4").unwrap(), ProjectivePoint::fraction(-3, 2));
        assert_eq!(parse_point("inf").unwrap(), ProjectivePoint::Infinity);
        assert_eq!(parse_point("1/0").unwrap(), ProjectivePoint::Infinity);
        assert!(parse_point("0/0").is_err());
        assert!(parse_point("x").is_err());
    }
}
