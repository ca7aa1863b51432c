use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Poly1;
use crate::error::{Error, Result};
use crate::qseries::{int, parse_rational, Coefficient, Rational, TextCoefficient};

/// Exponents of `(x, y, z, t)`.
pub type Exponent = [u32; 4];

pub const VARIABLES: [&str; 4] = ["x", "y", "z", "t"];

/// Sparse polynomial in `x = L^2`, `y = L.K`, `z = K^2`, `t = c2` with exact
/// rational coefficients. No zero coefficient is ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly4 {
    terms: BTreeMap<Exponent, Rational>,
}

impl Poly4 {
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut p = Poly4::default();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([([0; 4], c)])
    }

    /// The variable with the given index (0 = x, 1 = y, 2 = z, 3 = t).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Self::from_terms([(e, int(1))])
    }

    pub fn x() -> Self {
        Self::var(0)
    }
    pub fn y() -> Self {
        Self::var(1)
    }
    pub fn z() -> Self {
        Self::var(2)
    }
    pub fn t() -> Self {
        Self::var(3)
    }

    /// `a x + b y + c z + d t + e`.
    pub fn linear(coeffs: [Rational; 4], constant: Rational) -> Self {
        let mut terms: Vec<(Exponent, Rational)> = coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                let mut e = [0; 4];
                e[i] = 1;
                (e, c)
            })
            .collect();
        terms.push(([0; 4], constant));
        Self::from_terms(terms)
    }

    fn add_term(&mut self, e: Exponent, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The constant term if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    /// Exact evaluation at `(x, y, z, t)`.
    pub fn eval(&self, values: &[Rational; 4]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in values.iter().zip(e) {
                if k > 0 {
                    term *= num_traits::pow(v.clone(), k as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes the plane values `(d^2, -3d, 9, 3)` and returns a polynomial in `d`.
    pub fn specialize_p2(&self) -> Poly1 {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in &self.terms {
            let [a, b, cz, ct] = *e;
            let power = (2 * a + b) as usize;
            let factor = num_traits::pow(int(-3), b as usize)
                * num_traits::pow(int(9), cz as usize)
                * num_traits::pow(int(3), ct as usize);
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            coeffs[power] += c * factor;
        }
        Poly1::new(coeffs)
    }

    /// Terms in graded lexicographic order: higher total degree first, then
    /// lexicographically larger exponent vectors in `(x, y, z, t)`.
    pub fn graded_terms(&self) -> Vec<(Exponent, Rational)> {
        let mut v: Vec<(Exponent, Rational)> =
            self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    pub fn to_document(&self) -> Poly4Document {
        Poly4Document {
            variables: VARIABLES.iter().map(|s| s.to_string()).collect(),
            terms: self.graded_terms().iter().map(|(e, c)| monomial_text(e, c)).collect(),
        }
    }

    pub fn from_document(doc: &Poly4Document) -> Result<Self> {
        if doc.variables != VARIABLES {
            return Err(Error::Parse(format!("unexpected variables {:?}", doc.variables)));
        }
        let mut p = Poly4::default();
        for t in &doc.terms {
            let (e, c) = parse_monomial(t)?;
            p.add_term(e, &c);
        }
        Ok(p)
    }
}

/// Structured form of a [`Poly4`]: one `c * x^a y^b z^c t^d` string per term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly4Document {
    pub variables: Vec<String>,
    pub terms: Vec<String>,
}

fn monomial_text(e: &Exponent, c: &Rational) -> String {
    let vars: Vec<String> = e
        .iter()
        .zip(VARIABLES)
        .filter(|(k, _)| **k > 0)
        .map(|(k, v)| if *k == 1 { v.to_string() } else { format!("{v}^{k}") })
        .collect();
    if vars.is_empty() {
        c.to_string()
    } else {
        format!("{} * {}", c, vars.join(" "))
    }
}

fn parse_monomial(s: &str) -> Result<(Exponent, Rational)> {
    let bad = || Error::Parse(format!("invalid monomial `{s}`"));
    let (coeff, vars) = match s.split_once('*') {
        Some((c, v)) => (c.trim(), v.trim()),
        None => (s.trim(), ""),
    };
    let c = parse_rational(coeff)?;
    let mut e = [0u32; 4];
    for factor in vars.split_whitespace() {
        let (name, pow) = match factor.split_once('^') {
            Some((n, p)) => (n, p.parse::<u32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let i = VARIABLES.iter().position(|v| *v == name).ok_or_else(bad)?;
        e[i] += pow;
    }
    Ok((e, c))
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.graded_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = terms.iter().map(|(e, c)| monomial_text(e, c)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for Poly4 {
    type Output = Poly4;
    fn add(mut self, rhs: Poly4) -> Poly4 {
        self += &rhs;
        self
    }
}

impl Sub for Poly4 {
    type Output = Poly4;
    fn sub(mut self, rhs: Poly4) -> Poly4 {
        self -= &rhs;
        self
    }
}

impl Mul for Poly4 {
    type Output = Poly4;
    fn mul(self, rhs: Poly4) -> Poly4 {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a Poly4> for &'a Poly4 {
    type Output = Poly4;
    fn mul(self, rhs: &Poly4) -> Poly4 {
        self.mul_ref(rhs)
    }
}

impl Neg for Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        Poly4 { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<'a> AddAssign<&'a Poly4> for Poly4 {
    fn add_assign(&mut self, rhs: &Poly4) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl<'a> SubAssign<&'a Poly4> for Poly4 {
    fn sub_assign(&mut self, rhs: &Poly4) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }
}

impl Zero for Poly4 {
    fn zero() -> Self {
        Poly4::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly4 {
    fn one() -> Self {
        Poly4::constant(int(1))
    }
}

fn add_exp(a: &Exponent, b: &Exponent) -> Exponent {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

impl Coefficient for Poly4 {
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Poly4::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(add_exp(ea, eb), &(ca * cb));
            }
        }
        out
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Poly4::default();
        }
        Poly4 { terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect() }
    }

    fn from_rational(r: Rational) -> Self {
        Poly4::constant(r)
    }

    fn inverse(&self) -> Option<Self> {
        match self.as_constant() {
            Some(c) if !c.is_zero() => Some(Poly4::constant(c.recip())),
            _ => None,
        }
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(add_exp(ea, eb), &(ca * cb));
            }
        }
    }
}

impl TextCoefficient for Poly4 {
    fn to_text(&self) -> String {
        self.to_string()
    }

    fn parse_text(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Poly4::default());
        }
        let mut p = Poly4::default();
        // terms are joined by " + "; a negative coefficient keeps its sign
        for t in s.split(" + ") {
            let (e, c) = parse_monomial(t)?;
            p.add_term(e, &c);
        }
        Ok(p)
    }
}
