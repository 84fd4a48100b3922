//! Arbitrary-precision rational scalars.
//!
//! [`Rational`] is the sole scalar type of the crate: every coefficient,
//! norm, energy and moment is one. Values are kept in canonical form at
//! all times (positive denominator, `gcd(|num|, den) = 1`), so equality
//! is plain structural equality and replaces every tolerance check.
//!
//! The representation delegates to `num_rational::BigRational`, which
//! enforces canonicalization in its constructors and arithmetic. The
//! newtype pins the crate-wide serialization contract: `"num/den"`, or
//! just `"num"` when the denominator is one, with integers in decimal.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// An exact signed rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Build `num/den`, reducing to canonical form.
    ///
    /// Panics if `den` is zero; a zero denominator is a bug at the call
    /// site, never a data condition.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num.into(), den))
    }

    /// Shorthand for small literal ratios.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(num, den)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Numerator of the canonical form (carries the sign).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the canonical form (always positive).
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Integer power, with negative exponents inverting. Panics on `0^k` for `k < 0`.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Self::one();
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc *= base.clone();
        }
        acc
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::from_int(n)
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator: {e}"))?;
        let den = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator: {e}"))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rational::new(num, den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }

        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }

        impl $assign_trait for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                (self.0).$assign_method(rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);
forward_binop!(Div, div, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self == &Rational::from_int(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.partial_cmp(&Rational::from_int(*other))
    }
}

/// Exact factorial `k!`.
pub fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k as u64 {
        acc *= i;
    }
    acc
}

/// Exact binomial coefficient C(n, k), zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// Falling factorial `p (p-1) ... (p-j+1)` for a signed base.
///
/// The empty product (`j = 0`) is one. Used by the operator-composition
/// Leibniz rule, where `p` may be negative.
pub fn falling_factorial(p: i64, j: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..j as i64 {
        acc *= p - i;
    }
    acc
}
