use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, SubAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qseries::{int, Coefficient, Rational, TextCoefficient};

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly1 {
    coeffs: Vec<Rational>,
}

impl Poly1 {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `v` (the variable itself).
    pub fn variable() -> Self {
        Self::from_integers(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// Lagrange interpolation through the given points.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Self> {
        for (i, (a, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(b, _)| b == a) {
                return Err(Error::DuplicateAbscissa(a.to_string()));
            }
        }
        let mut acc = Poly1::default();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Poly1::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = (xi - xj).recip();
                // (v - xj) / (xi - xj)
                let factor = Poly1::new(vec![-xj * &denom, denom]);
                basis = basis.mul_ref(&factor);
            }
            acc += &basis;
        }
        Ok(acc)
    }

    /// Content-free form: the gcd of the integer coefficients, if they are all integers.
    pub fn integer_content(&self) -> Option<num_bigint::BigInt> {
        use num_integer::Integer;
        let mut g = num_bigint::BigInt::zero();
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            g = g.gcd(&c.to_integer());
        }
        Some(g)
    }

    /// Rendered with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => c.to_string(),
                1 => format!("{c}*{var}"),
                _ => format!("{c}*{var}^{i}"),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("d"))
    }
}

impl Add for Poly1 {
    type Output = Poly1;
    fn add(mut self, rhs: Poly1) -> Poly1 {
        self += &rhs;
        self
    }
}

impl Mul for Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: Poly1) -> Poly1 {
        self.mul_ref(&rhs)
    }
}

impl Neg for Poly1 {
    type Output = Poly1;
    fn neg(self) -> Poly1 {
        Poly1 { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<'a> AddAssign<&'a Poly1> for Poly1 {
    fn add_assign(&mut self, rhs: &Poly1) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = Poly1::new(std::mem::take(&mut self.coeffs));
    }
}

impl<'a> SubAssign<&'a Poly1> for Poly1 {
    fn sub_assign(&mut self, rhs: &Poly1) {
        *self += &-rhs.clone();
    }
}

impl Zero for Poly1 {
    fn zero() -> Self {
        Poly1::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly1 {
    fn one() -> Self {
        Poly1::constant(int(1))
    }
}

impl Coefficient for Poly1 {
    fn mul_ref(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly1::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly1::new(out)
    }

    fn scale(&self, r: &Rational) -> Self {
        Poly1::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    fn from_rational(r: Rational) -> Self {
        Poly1::constant(r)
    }

    fn inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => Some(Poly1::constant(c.recip())),
            _ => None,
        }
    }
}

impl TextCoefficient for Poly1 {
    fn to_text(&self) -> String {
        self.to_string()
    }

    fn parse_text(s: &str) -> Result<Self> {
        let mut coeffs: Vec<Rational> = Vec::new();
        if s.trim() == "0" {
            return Ok(Poly1::default());
        }
        for t in s.split(" + ") {
            let (c, k) = match t.split_once('*') {
                None => (t, 0usize),
                Some((c, v)) => {
                    let k = match v.split_once('^') {
                        None => 1,
                        Some((_, k)) => k.parse().map_err(|_| Error::Parse(t.to_string()))?,
                    };
                    (c, k)
                }
            };
            let c = crate::qseries::parse_rational(c)?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += c;
        }
        Ok(Poly1::new(coeffs))
    }
}
