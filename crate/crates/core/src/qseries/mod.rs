//! Truncated Laurent series in `q` over an exact coefficient domain.
//!
//! A [`QSeries`] stores `sum_{i >= v} c_{i-v} q^i` together with an absolute
//! precision `P`: the series is only known modulo `q^P`. Every operation
//! computes the tightest precision it can prove from its inputs.
//!
//! The zero-to-precision series has an empty coefficient vector and records
//! only `P`; it has no leading coefficient and reports `valuation() == P`.

mod coeff;
mod format;

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub use coeff::{as_integer, int, parse_rational, rat, Coefficient, Rational, TextCoefficient};
pub use format::SeriesDocument;

#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<C = Rational> {
    valuation: i64,
    coeffs: Vec<C>,
    precision: i64,
}

impl<C: Coefficient> QSeries<C> {
    /// Builds `sum_i coeffs[i] q^{start + i} mod q^precision`, dropping
    /// coefficients at or beyond the precision and normalising leading zeros.
    pub fn new(start: i64, mut coeffs: Vec<C>, precision: i64) -> Self {
        let keep = (precision - start).max(0) as usize;
        coeffs.truncate(keep);
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(precision),
            Some(k) => {
                coeffs.drain(..k);
                let valuation = start + k as i64;
                // pad so that every coefficient below the precision is present
                let len = (precision - valuation) as usize;
                coeffs.resize(len, C::zero());
                QSeries { valuation, coeffs, precision }
            }
        }
    }

    pub fn zero(precision: i64) -> Self {
        QSeries { valuation: precision, coeffs: Vec::new(), precision }
    }

    pub fn one(precision: i64) -> Self {
        Self::constant(C::one(), precision)
    }

    pub fn constant(c: C, precision: i64) -> Self {
        Self::new(0, vec![c], precision)
    }

    /// `c q^n mod q^precision`.
    pub fn monomial(c: C, n: i64, precision: i64) -> Self {
        Self::new(n, vec![c], precision)
    }

    /// `q mod q^precision`.
    pub fn q(precision: i64) -> Self {
        Self::monomial(C::one(), 1, precision)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Valuation of the series; equals the precision for the zero series.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Coefficients from `q^valuation` up to `q^(precision-1)`.
    pub fn coefficients(&self) -> &[C] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.coeffs.first()
    }

    /// The coefficient of `q^n`; valid for `n < precision` (zero below the valuation).
    pub fn coeff(&self, n: i64) -> Result<C> {
        if n >= self.precision {
            return Err(Error::OutOfPrecision {
                n,
                valuation: self.valuation,
                precision: self.precision,
            });
        }
        Ok(self.coeff_or_zero(n))
    }

    /// Coefficient lookup that treats everything outside the stored window as zero.
    pub(crate) fn coeff_or_zero(&self, n: i64) -> C {
        if n < self.valuation || n >= self.precision {
            C::zero()
        } else {
            self.coeffs[(n - self.valuation) as usize].clone()
        }
    }

    fn coeff_ref(&self, n: i64) -> Option<&C> {
        if n < self.valuation {
            None
        } else {
            self.coeffs.get((n - self.valuation) as usize)
        }
    }

    /// Lowers the precision to `min(self.precision, precision)`.
    pub fn truncate(&self, precision: i64) -> Self {
        if precision >= self.precision {
            return self.clone();
        }
        Self::new(self.valuation, self.coeffs.clone(), precision)
    }

    /// Reinterprets the known coefficients as an exact polynomial known to a
    /// larger precision.
    pub(crate) fn padded(&self, precision: i64) -> Self {
        debug_assert!(precision >= self.precision);
        Self::new(self.valuation, self.coeffs.clone(), precision)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero(self.precision + k);
        }
        QSeries {
            valuation: self.valuation + k,
            coeffs: self.coeffs.clone(),
            precision: self.precision + k,
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn scale_by(&self, c: &C) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries::new(self.valuation, self.coeffs.iter().map(f).collect(), self.precision)
    }

    /// Coefficientwise sum; precision is the smaller of the two.
    pub fn add_series(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub_series(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let precision = self.precision.min(other.precision);
        let start = self.valuation.min(other.valuation);
        if start >= precision {
            return Self::zero(precision);
        }
        let mut out = vec![C::zero(); (precision - start) as usize];
        for (i, slot) in out.iter_mut().enumerate() {
            let n = start + i as i64;
            if let Some(c) = self.coeff_ref(n) {
                *slot += c;
            }
            if let Some(c) = other.coeff_ref(n) {
                if subtract {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
        }
        Self::new(start, out, precision)
    }

    /// Cauchy product; precision `min(P_a + v_b, P_b + v_a)`.
    pub fn mul_series(&self, other: &Self) -> Self {
        let precision = (self.precision + other.valuation).min(other.precision + self.valuation);
        if self.is_zero() || other.is_zero() {
            return Self::zero(precision);
        }
        let valuation = self.valuation + other.valuation;
        let len = (precision - valuation).max(0) as usize;
        let mut out = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j].add_product(a, b);
            }
        }
        Self::new(valuation, out, precision)
    }

    /// Multiplicative inverse of a series with an invertible leading coefficient.
    pub fn inverse(&self) -> Result<Self> {
        let lead = self.leading_coefficient().ok_or(Error::DivisionByZeroSeries)?;
        let inv = lead.inverse().ok_or(Error::NonInvertibleLeadingCoefficient)?;
        let a = &self.coeffs;
        let m = a.len();
        let mut b: Vec<C> = Vec::with_capacity(m);
        b.push(inv.clone());
        for n in 1..m {
            let mut acc = C::zero();
            for k in 1..=n {
                acc.add_product(&a[k], &b[n - k]);
            }
            b.push(-acc.mul_ref(&inv));
        }
        let valuation = -self.valuation;
        Ok(Self::new(valuation, b, valuation + m as i64))
    }

    pub fn div_series(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_series(&other.inverse()?))
    }

    /// The derivation `D = q d/dq`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&int(self.valuation + i as i64)))
            .collect();
        Self::new(self.valuation, coeffs, self.precision)
    }

    /// `exp(self)` for a series of valuation at least one.
    pub fn exp(&self) -> Result<Self> {
        let p = self.precision;
        if !self.is_zero() && self.valuation < 1 {
            return Err(Error::PositiveValuationRequired(self.valuation));
        }
        if p <= 0 {
            return Ok(Self::zero(p));
        }
        let n_max = p as usize;
        // weighted[k] = k * a_k
        let weighted: Vec<Option<C>> = (0..n_max as i64)
            .map(|k| {
                self.coeff_ref(k)
                    .filter(|c| !c.is_zero())
                    .map(|c| c.scale(&int(k)))
            })
            .collect();
        let mut out: Vec<C> = Vec::with_capacity(n_max);
        out.push(C::one());
        for n in 1..n_max {
            let mut acc = C::zero();
            for (k, wk) in weighted.iter().enumerate().take(n + 1).skip(1) {
                if let Some(wk) = wk {
                    acc.add_product(wk, &out[n - k]);
                }
            }
            out.push(acc.scale(&rat(1, n as i64)));
        }
        Ok(Self::new(0, out, p))
    }

    /// `log(self)` for a series `1 + O(q)`.
    pub fn log(&self) -> Result<Self> {
        if self.valuation != 0 || !self.coeffs.first().is_some_and(|c| c.is_one()) {
            return Err(Error::UnitConstantTermRequired);
        }
        let a = &self.coeffs;
        let m = a.len();
        // n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
        let mut weighted: Vec<C> = vec![C::zero(); m];
        let mut out: Vec<C> = vec![C::zero(); m];
        for n in 1..m {
            let mut acc = a[n].scale(&int(n as i64));
            for k in 1..n {
                if !weighted[k].is_zero() {
                    let t = weighted[k].mul_ref(&a[n - k]);
                    acc -= &t;
                }
            }
            out[n] = acc.scale(&rat(1, n as i64));
            weighted[n] = acc;
        }
        Ok(Self::new(0, out, self.precision))
    }

    /// Integer power. Negative exponents need an invertible leading coefficient.
    pub fn pow_int(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inverse()?.pow_int(-e);
        }
        if e == 0 {
            let rel = if self.is_zero() { self.precision } else { self.precision - self.valuation };
            return Ok(Self::one(rel));
        }
        let mut base = self.clone();
        let mut e = e as u64;
        let mut acc: Option<Self> = None;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul_series(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul_series(&base);
        }
        Ok(acc.expect("positive exponent"))
    }

    /// `self^e = exp(e log self)` for an exponent in the coefficient ring.
    pub fn pow_coeff(&self, e: &C) -> Result<Self> {
        self.log()?.scale_by(e).exp()
    }

    /// Rational power: integers go through repeated multiplication, everything
    /// else through `exp(e log self)` and so requires constant term one.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self> {
        match as_integer(e).and_then(|n| i64::try_from(n).ok()) {
            Some(n) => self.pow_int(n),
            None => self.log()?.scale(e).exp(),
        }
    }

    /// Substitution `self(g(q))` for `g` of valuation at least one.
    ///
    /// The result is known modulo `q^min(P_f * v_g, P_g)`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !self.is_zero() && self.valuation < 0 {
            return Err(Error::NegativeValuationUnsupported(self.valuation));
        }
        if g.valuation < 1 {
            return Err(Error::PositiveValuationRequired(g.valuation));
        }
        let precision = (self.precision.max(0) * g.valuation).min(g.precision);
        let g = g.truncate(precision);
        let mut acc = Self::zero(precision);
        for k in (0..self.precision.max(0)).rev() {
            let c = self.coeff_or_zero(k);
            acc = acc.mul_series(&g).add_series(&Self::constant(c, precision));
        }
        Ok(acc.truncate(precision))
    }

    /// Coefficients `c_0..c_{P-1}` with `self = sum_k c_k g^k mod q^P`,
    /// `P = min(P_f, P_g)`, by successive elimination of leading terms.
    pub fn expand_in_base(&self, g: &Self) -> Result<Vec<C>> {
        let (p, g1_inv) = self.check_base(g)?;
        let g = g.truncate(p);
        let mut rest = self.truncate(p);
        let mut out = Vec::with_capacity(p as usize);
        let mut gk = Self::one(p);
        let mut lead_inv = C::one();
        for k in 0..p {
            let c = rest.coeff_or_zero(k).mul_ref(&lead_inv);
            if !c.is_zero() {
                rest = rest.sub_series(&gk.scale_by(&c));
            }
            out.push(c);
            gk = gk.mul_series(&g).truncate(p);
            lead_inv = lead_inv.mul_ref(&g1_inv);
        }
        Ok(out)
    }

    /// Same contract as [`expand_in_base`](Self::expand_in_base), computed by
    /// the residue rule `c_k = [q^0] f Dg / g^(k+1)`.
    pub fn expand_in_base_residue(&self, g: &Self) -> Result<Vec<C>> {
        let (p, _) = self.check_base(g)?;
        // g mod q^p is an exact polynomial with the same expansion coefficients below p
        let g = g.truncate(p).padded(2 * p + 2);
        let dg = g.derivative();
        let g_inv = g.inverse()?;
        let f = self.truncate(p);
        let mut inv_pow = g_inv.clone();
        let mut out = Vec::with_capacity(p as usize);
        for _ in 0..p {
            let h = dg.mul_series(&inv_pow);
            out.push(f.mul_series(&h).coeff(0)?);
            inv_pow = inv_pow.mul_series(&g_inv);
        }
        Ok(out)
    }

    fn check_base(&self, g: &Self) -> Result<(i64, C)> {
        if g.is_zero() || g.valuation != 1 {
            return Err(Error::BaseValuationMustBeOne(g.valuation));
        }
        if !self.is_zero() && self.valuation < 0 {
            return Err(Error::NegativeValuationUnsupported(self.valuation));
        }
        let inv = g.coeffs[0].inverse().ok_or(Error::NonInvertibleLeadingCoefficient)?;
        Ok((self.precision.min(g.precision), inv))
    }

    /// Horner evaluation of `sum_k c_k g^k` as a series known mod `q^precision`.
    pub fn from_base_expansion(coeffs: &[C], g: &Self, precision: i64) -> Self {
        let g = g.truncate(precision);
        let mut acc = Self::zero(precision);
        for c in coeffs.iter().rev() {
            acc = acc.mul_series(&g).add_series(&Self::constant(c.clone(), precision));
        }
        acc.truncate(precision)
    }
}

impl QSeries<Rational> {
    /// Lifts a rational series into another coefficient domain.
    pub fn lift<D: Coefficient>(&self) -> QSeries<D> {
        self.map(|c| D::from_rational(c.clone()))
    }

    pub fn from_integers(start: i64, coeffs: &[i64], precision: i64) -> Self {
        Self::new(start, coeffs.iter().map(|&c| int(c)).collect(), precision)
    }
}

impl<C: Coefficient> Add for &QSeries<C> {
    type Output = QSeries<C>;
    fn add(self, rhs: Self) -> QSeries<C> {
        self.add_series(rhs)
    }
}

impl<C: Coefficient> Sub for &QSeries<C> {
    type Output = QSeries<C>;
    fn sub(self, rhs: Self) -> QSeries<C> {
        self.sub_series(rhs)
    }
}

impl<C: Coefficient> Mul for &QSeries<C> {
    type Output = QSeries<C>;
    fn mul(self, rhs: Self) -> QSeries<C> {
        self.mul_series(rhs)
    }
}

impl<C: Coefficient> Neg for &QSeries<C> {
    type Output = QSeries<C>;
    fn neg(self) -> QSeries<C> {
        self.map(|c| -c.clone())
    }
}

#[cfg(test)]
mod tests;
