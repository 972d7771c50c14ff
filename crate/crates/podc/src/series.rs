//! Dense truncated formal power series in `q` with exact arbitrary-precision
//! integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `q^0 ..= q^N`. Arithmetic truncates to the smaller operand order, so
//! compositional formulas stay writable; reading past the truncation with
//! [`TruncatedSeries::coefficient`] is an error, never a silent zero.
//!
//! Everything is integer-exact. The only divisions offered are by a series
//! with constant term ±1 ([`TruncatedSeries::invert`]) and by a binomial
//! `1 + c·q^e` ([`TruncatedSeries::div_binomial`]); both have exact
//! integer-coefficient inverses in the truncated ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Formal power series in `q` truncated (inclusively) at a fixed order.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// `coeffs[k]` is the coefficient of `q^k`; length is order + 1.
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Self::constant(1, order)
    }

    /// A constant series.
    pub fn constant(c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c.into();
        s
    }

    /// `c · q^exp`; exponents beyond the order leave the series zero.
    pub fn monomial(c: impl Into<BigInt>, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c.into();
        }
        s
    }

    /// Builds a series from explicit coefficients; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the q^0 coefficient");
        TruncatedSeries { coeffs }
    }

    /// Truncation order (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All coefficients, `q^0 ..= q^order`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^n`. Errors past the truncation order.
    pub fn coefficient(&self, n: usize) -> Result<&BigInt> {
        self.coeffs.get(n).ok_or(Error::CoefficientOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// A copy truncated to `min(order, self.order())`.
    pub fn truncated(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        TruncatedSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Coefficientwise sum at the smaller operand order.
    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated at the smaller operand order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse up to the truncation order. Requires constant
    /// term +1 or -1, which keeps every coefficient an exact integer.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.magnitude().is_one() {
            return Err(Error::NonInvertible {
                constant: c0.clone(),
            });
        }
        let n = self.order();
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = c0.clone(); // (+1)^-1 = +1, (-1)^-1 = -1
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !inv[k - j].is_zero() {
                    acc += &self.coeffs[j] * &inv[k - j];
                }
            }
            inv[k] = -(c0 * acc);
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Multiply by `q^k`, keeping the order (top coefficients truncate away).
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        if k <= n {
            coeffs[k..].clone_from_slice(&self.coeffs[..=n - k]);
        }
        TruncatedSeries { coeffs }
    }

    /// Multiply every coefficient by a constant.
    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Multiply by the binomial `1 + c·q^exp` in O(order) operations.
    pub fn mul_binomial(&self, c: i64, exp: usize) -> Self {
        if exp == 0 {
            return self.scale(1 + c);
        }
        let n = self.order();
        let mut coeffs = self.coeffs.clone();
        if exp <= n {
            for k in (exp..=n).rev() {
                let add = &self.coeffs[k - exp] * c;
                coeffs[k] += add;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Divide by the binomial `1 + c·q^exp` in O(order) operations. Exact in
    /// the truncated ring because the divisor has unit constant term.
    pub fn div_binomial(&self, c: i64, exp: usize) -> Result<Self> {
        if exp == 0 {
            // Divisor is the constant 1 + c.
            return match 1 + c {
                1 => Ok(self.clone()),
                -1 => Ok(self.neg()),
                other => Err(Error::NonInvertible {
                    constant: BigInt::from(other),
                }),
            };
        }
        let n = self.order();
        let mut coeffs = self.coeffs.clone();
        if exp <= n {
            for k in exp..=n {
                let sub = &coeffs[k - exp] * c;
                coeffs[k] -= sub;
            }
        }
        Ok(TruncatedSeries { coeffs })
    }
}

impl fmt::Display for TruncatedSeries {
    /// Shows the leading nonzero terms, e.g. `1 - q^2 - q^4 + ... (order 10)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const MAX_TERMS: usize = 8;
        let mut written = 0;
        let mut truncated = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if written == MAX_TERMS {
                truncated = true;
                break;
            }
            let mag = c.magnitude();
            if written == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
            written += 1;
        }
        if written == 0 {
            write!(f, "0")?;
        }
        if truncated {
            write!(f, " + ...")?;
        }
        write!(f, " (order {})", self.order())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[{self}]")
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::neg(self)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for TruncatedSeries {
    /// JSON form: `{"order": N, "coeffs": ["1", "-1", ...]}` with decimal
    /// strings so consumers never lose integer width.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(BigInt::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "series of order {} must carry {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| BigInt::from_str(s).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn add_and_identities() {
        let one_plus_q = series(&[1, 1, 0]);
        let one_minus_q = series(&[1, -1, 0]);
        assert_eq!(one_plus_q.add(&one_minus_q), series(&[2, 0, 0]));
        let s = series(&[3, 1, 4, 1]);
        assert_eq!(s.add(&TruncatedSeries::zero(3)), s);
        assert_eq!(s.mul(&TruncatedSeries::one(3)), s);
    }

    #[test]
    fn mul_difference_of_squares() {
        let prod = series(&[1, -1, 0]).mul(&series(&[1, 1, 0]));
        assert_eq!(prod, series(&[1, 0, -1]));
    }

    #[test]
    fn arithmetic_takes_the_min_order() {
        let a = series(&[1, 2, 3, 4, 5]);
        let b = series(&[1, 1]);
        assert_eq!(a.add(&b).order(), 1);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!((&a - &b).order(), 1);
    }

    #[test]
    fn invert_geometric_series() {
        let inv = series(&[1, -1, 0, 0, 0, 0]).invert().unwrap();
        assert_eq!(inv, series(&[1, 1, 1, 1, 1, 1]));
        // 1/(1+q^3) alternates in steps of three.
        let inv3 = TruncatedSeries::one(9)
            .mul_binomial(1, 3)
            .invert()
            .unwrap();
        assert_eq!(inv3, series(&[1, 0, 0, -1, 0, 0, 1, 0, 0, -1]));
    }

    #[test]
    fn invert_is_an_involution() {
        // (q;q)_5 = (1-q)(1-q^2)...(1-q^5) at order 30.
        let mut s = TruncatedSeries::one(30);
        for e in 1..=5 {
            s = s.mul_binomial(-1, e);
        }
        let back = s.invert().unwrap().invert().unwrap();
        assert_eq!(back, s);
        assert_eq!(s.mul(&s.invert().unwrap()), TruncatedSeries::one(30));
    }

    #[test]
    fn invert_with_negative_unit_constant() {
        let s = series(&[-1, 2, 5]);
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv), TruncatedSeries::one(2));
    }

    #[test]
    fn invert_rejects_non_unit_constant() {
        assert!(matches!(
            series(&[2, 1]).invert(),
            Err(Error::NonInvertible { .. })
        ));
        assert!(series(&[0, 1]).invert().is_err());
    }

    #[test]
    fn coefficient_past_order_is_an_error() {
        let s = series(&[1, 2]);
        assert_eq!(*s.coefficient(1).unwrap(), BigInt::from(2));
        assert!(matches!(
            s.coefficient(2),
            Err(Error::CoefficientOutOfRange { index: 2, order: 1 })
        ));
    }

    #[test]
    fn binomial_mul_div_are_inverse() {
        let s = series(&[3, -1, 4, 1, -5, 9, 2, -6]);
        for (c, e) in [(1i64, 1usize), (-1, 2), (1, 3), (-1, 5)] {
            let round = s.mul_binomial(c, e).div_binomial(c, e).unwrap();
            assert_eq!(round, s);
        }
        // Against the generic route: dividing equals multiplying by invert.
        let b = TruncatedSeries::one(7).mul_binomial(-1, 2);
        assert_eq!(
            s.div_binomial(-1, 2).unwrap(),
            s.mul(&b.invert().unwrap())
        );
    }

    #[test]
    fn shift_and_scale() {
        let s = series(&[1, 2, 3]);
        assert_eq!(s.shift_up(1), series(&[0, 1, 2]));
        assert_eq!(s.scale(-2), series(&[-2, -4, -6]));
    }

    #[test]
    fn serde_roundtrip_with_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let s = TruncatedSeries::from_coeffs(vec![BigInt::one(), -&big, big.clone()]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"order":2,"coeffs":["1","-123456789012345678901234567890","123456789012345678901234567890"]}"#
        );
        let back: TruncatedSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn serde_rejects_length_mismatch() {
        let bad = r#"{"order":3,"coeffs":["1","2"]}"#;
        assert!(serde_json::from_str::<TruncatedSeries>(bad).is_err());
    }

    #[test]
    fn display_shows_leading_terms() {
        let s = series(&[1, 0, -1, 0, -1, 0, 0]);
        assert_eq!(s.to_string(), "1 - q^2 - q^4 (order 6)");
        assert_eq!(TruncatedSeries::zero(3).to_string(), "0 (order 3)");
    }
}
