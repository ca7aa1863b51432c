//! Exact coefficient domains for [`QSeries`](super::QSeries).

use std::fmt::Debug;
use std::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A commutative ring with decidable equality that also admits scalar
/// multiplication by rationals.
pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, other: &Self) -> Self;

    fn scale(&self, r: &Rational) -> Self;

    fn from_rational(r: Rational) -> Self;

    /// The multiplicative inverse, when it exists in the domain.
    fn inverse(&self) -> Option<Self>;

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        *self += &p;
    }
}

impl Coefficient for Rational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Coefficients that have a canonical one-line text form.
pub trait TextCoefficient: Coefficient {
    fn to_text(&self) -> String;
    fn parse_text(s: &str) -> Result<Self>;
}

impl TextCoefficient for Rational {
    fn to_text(&self) -> String {
        self.to_string()
    }

    fn parse_text(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

/// Parses `"n"` or `"n/d"` with an optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Returns the integer value of `r`, if it has one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "-7", "3/4", "-12345678901234567890123/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_text(), s);
        }
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn lowest_terms() {
        let r = rat(10, -4);
        assert_eq!(*r.numer(), BigInt::from(-5));
        assert_eq!(*r.denom(), BigInt::from(2));
    }
}
