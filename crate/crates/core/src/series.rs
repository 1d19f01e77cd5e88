//! Graded dimensions with arbitrary-precision coefficients.

use std::fmt;
use std::ops::{AddAssign, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// A polynomial `Σ c_d t^d` with nonnegative exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    // coefficient of t^d at index d, no trailing zeros
    coeffs: Vec<BigInt>,
}

impl HilbertSeries {
    pub fn zero() -> HilbertSeries {
        HilbertSeries { coeffs: Vec::new() }
    }

    pub fn monomial(coefficient: impl Into<BigInt>, degree: u32) -> HilbertSeries {
        let mut coeffs = vec![BigInt::zero(); degree as usize + 1];
        coeffs[degree as usize] = coefficient.into();
        let mut s = HilbertSeries { coeffs };
        s.trim();
        s
    }

    /// Coefficients listed from degree 0.
    pub fn from_coeffs<I, C>(coeffs: I) -> HilbertSeries
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut s = HilbertSeries {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        s.trim();
        s
    }

    /// `c · t^shift · (1+t)^power`.
    pub fn shifted_binomial(coefficient: &BigInt, shift: u32, power: u32) -> HilbertSeries {
        let mut coeffs = vec![BigInt::zero(); (shift + power) as usize + 1];
        let mut binom = BigInt::one();
        for k in 0..=power {
            coeffs[(shift + k) as usize] = coefficient * &binom;
            binom = binom * BigInt::from(power - k) / BigInt::from(k + 1);
        }
        let mut s = HilbertSeries { coeffs };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: u32) -> BigInt {
        self.coeffs.get(degree as usize).cloned().unwrap_or_default()
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn order(&self) -> Option<u32> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|d| d as u32)
    }

    /// Highest degree with a nonzero coefficient.
    pub fn degree(&self) -> Option<u32> {
        (!self.coeffs.is_empty()).then(|| self.coeffs.len() as u32 - 1)
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> HilbertSeries {
        let mut s = self.clone();
        s.coeffs.truncate(max_degree as usize + 1);
        s.trim();
        s
    }

    pub fn first_negative(&self) -> Option<(u32, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
            .map(|(d, c)| (d as u32, c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    /// `(degree, coefficient)` for every nonzero term, in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d as u32, c))
    }

    pub fn sum_of_coefficients(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl AddAssign<&HilbertSeries> for HilbertSeries {
    fn add_assign(&mut self, rhs: &HilbertSeries) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&HilbertSeries> for HilbertSeries {
    fn sub_assign(&mut self, rhs: &HilbertSeries) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

/// Renders like `225t^5 + 1132t^6`, or `0`.
impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.terms() {
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = if abs.is_one() && d > 0 { String::new() } else { abs.to_string() };
            match d {
                0 => write!(f, "{abs}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// JSON form `{"min_deg": d0, "coeffs": [c0, c1, …]}`; coefficients that do
/// not fit in an `i64` are written as decimal strings.
#[derive(Serialize, Deserialize)]
struct RawSeries {
    min_deg: u32,
    coeffs: Vec<RawCoeff>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Small(i64),
    Big(String),
}

impl Serialize for HilbertSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let min_deg = self.order().unwrap_or(0);
        let coeffs = self.coeffs[min_deg.min(self.coeffs.len() as u32) as usize..]
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => RawCoeff::Small(v),
                None => RawCoeff::Big(c.to_string()),
            })
            .collect();
        RawSeries { min_deg, coeffs }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HilbertSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawSeries::deserialize(deserializer)?;
        let mut coeffs = vec![BigInt::zero(); raw.min_deg as usize];
        for c in raw.coeffs {
            coeffs.push(match c {
                RawCoeff::Small(v) => BigInt::from(v),
                RawCoeff::Big(s) => s.parse().map_err(de::Error::custom)?,
            });
        }
        Ok(HilbertSeries::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_series() {
        let s = HilbertSeries::shifted_binomial(&BigInt::from(225), 5, 9);
        assert_eq!(s.order(), Some(5));
        assert_eq!(s.degree(), Some(14));
        assert_eq!(s.coeff(5), BigInt::from(225));
        assert_eq!(s.coeff(6), BigInt::from(225 * 9));
        assert_eq!(s.sum_of_coefficients(), BigInt::from(225 * 512));
        let e = HilbertSeries::shifted_binomial(&BigInt::one(), 0, 4);
        assert_eq!(e, HilbertSeries::from_coeffs([1, 4, 6, 4, 1]));
    }

    #[test]
    fn arithmetic_and_truncation() {
        let mut a = HilbertSeries::from_coeffs([0, 1, 2, 3]);
        let b = HilbertSeries::from_coeffs([0, 1, 2, 3]);
        a -= &b;
        assert!(a.is_zero());
        a += &HilbertSeries::monomial(5, 2);
        assert_eq!(a.to_string(), "5t^2");
        assert_eq!(b.truncate(2), HilbertSeries::from_coeffs([0, 1, 2]));
        assert_eq!(HilbertSeries::from_coeffs([1, -1]).first_negative(), Some((1, &BigInt::from(-1))));
    }

    #[test]
    fn display() {
        assert_eq!(HilbertSeries::zero().to_string(), "0");
        assert_eq!(HilbertSeries::monomial(1, 0).to_string(), "1");
        assert_eq!(HilbertSeries::from_coeffs([0, 1, 3]).to_string(), "t + 3t^2");
        assert_eq!(HilbertSeries::from_coeffs([2, -1]).to_string(), "2 - t");
        assert_eq!(HilbertSeries::monomial(1, 9).to_string(), "t^9");
    }

    #[test]
    fn json_form() {
        let s = HilbertSeries::from_coeffs([0, 0, 0, 0, 0, 225, 1132]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"min_deg":5,"coeffs":[225,1132]}"#);
        assert_eq!(serde_json::from_str::<HilbertSeries>(&json).unwrap(), s);
        let big = HilbertSeries::monomial("123456789012345678901234567890".parse::<BigInt>().unwrap(), 1);
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(json, r#"{"min_deg":1,"coeffs":["123456789012345678901234567890"]}"#);
        assert_eq!(serde_json::from_str::<HilbertSeries>(&json).unwrap(), big);
        let zero = serde_json::to_string(&HilbertSeries::zero()).unwrap();
        assert_eq!(zero, r#"{"min_deg":0,"coeffs":[]}"#);
    }
}
