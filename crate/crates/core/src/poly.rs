//! Dense univariate polynomials with big-integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient `i` multiplies `q^i`. Trailing zeros are never stored, so the
/// zero polynomial has no coefficients at all.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

/// Polynomials in `q` (`W_n`, Narayana, log-convexity defects).
pub type QPolynomial = Poly;

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Index and value of the first negative coefficient, if any.
    pub fn first_negative(&self) -> Option<(usize, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
            .map(|(i, c)| (i, c.clone()))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.first_negative().is_none()
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Text form in an arbitrary variable name.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            first = false;
            match i {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&format!("{mag}*"));
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses the `q` text form, e.g. `1 + 4*q + q^2` or `2*q - 3*q^3`.
impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = || Error::Polynomial(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(fail());
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut rest = text.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let negative = if let Some(r) = rest.strip_prefix('-') {
                rest = r;
                true
            } else if let Some(r) = rest.strip_prefix('+') {
                if first {
                    return Err(fail());
                }
                rest = r;
                false
            } else if first {
                false
            } else {
                return Err(fail());
            };
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            let (coeff, power) = match term.split_once('q') {
                None => (term.parse::<BigInt>().map_err(|_| fail())?, 0usize),
                Some((c, p)) => {
                    let c = match c {
                        "" => BigInt::one(),
                        c => c.strip_suffix('*').ok_or_else(fail)?.parse().map_err(|_| fail())?,
                    };
                    let p = match p {
                        "" => 1,
                        p => p.strip_prefix('^').ok_or_else(fail)?.parse().map_err(|_| fail())?,
                    };
                    (c, p)
                }
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += if negative { -coeff } else { coeff };
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic() {
        let a = Poly::from_i64s(&[1, 1]);
        let b = Poly::from_i64s(&[1, -1]);
        assert_eq!(&a * &b, Poly::from_i64s(&[1, 0, -1]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_i64s(&[0, 0, 3, 0]).degree(), Some(2));
        assert_eq!(Poly::from_i64s(&[5, 3, 2]).derivative(), Poly::from_i64s(&[3, 4]));
        assert_eq!(a.pow(3), Poly::from_i64s(&[1, 3, 3, 1]));
    }

    #[test]
    fn evaluation() {
        let p = Poly::from_i64s(&[1, 4, 1]);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(13));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p.eval_rational(&half), BigRational::new(13.into(), 4.into()));
    }

    #[test]
    fn text_form() {
        assert_eq!(Poly::from_i64s(&[1, 4, 1]).to_string(), "1 + 4*q + q^2");
        assert_eq!(Poly::from_i64s(&[0, 2, 0, 2]).to_string(), "2*q + 2*q^3");
        assert_eq!(Poly::from_i64s(&[0, 0, -12]).to_string(), "-12*q^2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!("1 - q + 3*q^2".parse::<Poly>().unwrap(), Poly::from_i64s(&[1, -1, 3]));
        assert!("1 + + q".parse::<Poly>().is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(c in prop::collection::vec(-50i64..50, 0..8)) {
            let p = Poly::from_i64s(&c);
            let text = p.to_string();
            let back: Poly = text.parse().unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn product_rule(a in prop::collection::vec(-9i64..9, 0..6), b in prop::collection::vec(-9i64..9, 0..6)) {
            let (a, b) = (Poly::from_i64s(&a), Poly::from_i64s(&b));
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
