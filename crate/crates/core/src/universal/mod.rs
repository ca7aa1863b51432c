//! The generating function for nodal curve counts, evaluated numerically for
//! a given surface or symbolically over [`Poly4`], and the fit of the
//! universal series `B1`, `B2` from plane Severi degrees.
//!
//! With `x = DG2`, the counts `t_delta(L)` are the coefficients of
//!
//! ```text
//! exp( chi(L) log(DG2/q) + K^2 log B1 + L.K log B2 - chi(O)/2 log(Delta D^2G2/q^2) )
//! ```
//!
//! expanded in powers of `x`.

mod fit;
mod geometry;

use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::modforms::{d2g2, delta, dg2};
use crate::multipoly::Poly4;
use crate::qseries::{as_integer, int, rat, Coefficient, QSeries, Rational};

pub use fit::{
    check_fit_idempotence, fit_bc, fit_bc_unchecked, fit3_verify_c1, fit_from_severi, default_degrees,
    C1Check, FitResult, IdempotenceMismatch, PairResidual,
};
pub use geometry::SurfaceGeometry;

/// The universal series `B1`, `B2`, both `1 + O(q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BSeriesPair {
    pub b1: QSeries,
    pub b2: QSeries,
}

impl BSeriesPair {
    pub fn new(b1: QSeries, b2: QSeries) -> Result<Self> {
        for b in [&b1, &b2] {
            if b.valuation() != 0 || b.coeff(0)? != int(1) {
                return Err(Error::UnitConstantTermRequired);
            }
        }
        Ok(BSeriesPair { b1, b2 })
    }

    /// `B1 = B2 = 1` to the given precision.
    pub fn trivial(precision: i64) -> Self {
        BSeriesPair { b1: QSeries::one(precision), b2: QSeries::one(precision) }
    }

    pub fn precision(&self) -> i64 {
        self.b1.precision().min(self.b2.precision())
    }

    fn require(&self, precision: i64) -> Result<()> {
        if self.precision() < precision {
            return Err(Error::InvalidInput(format!(
                "B-series known to q^{} but precision {precision} was requested",
                self.precision()
            )));
        }
        Ok(())
    }
}

/// `DG2 / q` to precision `p`.
pub fn dg2_unit(p: i64) -> QSeries {
    dg2(p + 1).shift(-1)
}

/// `D^2G2 / q` to precision `p`.
pub fn d2g2_unit(p: i64) -> QSeries {
    d2g2(p + 1).shift(-1)
}

/// `Delta / q` to precision `p`.
pub fn delta_unit(p: i64) -> QSeries {
    delta(p + 1).shift(-1)
}

/// `log(DG2 / q)` to precision `p`.
pub fn log_dg2(p: i64) -> QSeries {
    dg2_unit(p).log().expect("DG2/q starts with 1")
}

/// `log(Delta D^2G2 / q^2)` to precision `p`.
pub fn log_delta_d2g2(p: i64) -> QSeries {
    (&delta_unit(p) * &d2g2_unit(p)).log().expect("unit series")
}

/// The right-hand side with exponents taken in an arbitrary coefficient ring:
/// `chi_l`, `k2`, `lk` and `chi_o` are `chi(L)`, `K^2`, `L.K` and `chi(O)`.
pub fn conjecture_rhs_with<C: Coefficient>(
    chi_l: &C,
    k2: &C,
    lk: &C,
    chi_o: &C,
    b: &BSeriesPair,
    p: i64,
) -> Result<QSeries<C>> {
    b.require(p)?;
    let log_b1 = b.b1.truncate(p).log()?;
    let log_b2 = b.b2.truncate(p).log()?;
    let half_chi_o = chi_o.scale(&rat(1, 2));
    let exponent = log_dg2(p).lift::<C>().scale_by(chi_l);
    let exponent = &exponent + &log_b1.lift::<C>().scale_by(k2);
    let exponent = &exponent + &log_b2.lift::<C>().scale_by(lk);
    let exponent = &exponent - &log_delta_d2g2(p).lift::<C>().scale_by(&half_chi_o);
    exponent.exp()
}

/// The right-hand side for a concrete surface, as a rational `q`-series.
pub fn conjecture_rhs(geom: &SurfaceGeometry, b: &BSeriesPair, p: i64) -> Result<QSeries> {
    conjecture_rhs_with(&geom.chi_l(), &int(geom.k2), &int(geom.lk), &geom.chi_o(), b, p)
}

/// `chi(L)`, `K^2`, `L.K`, `chi(O)` as polynomials in `(x, y, z, t)`.
pub fn symbolic_exponents() -> [Poly4; 4] {
    let chi_o = Poly4::linear([int(0), int(0), rat(1, 12), rat(1, 12)], int(0));
    let chi_l = Poly4::linear([rat(1, 2), rat(-1, 2), rat(1, 12), rat(1, 12)], int(0));
    [chi_l, Poly4::z(), Poly4::y(), chi_o]
}

/// The right-hand side with symbolic geometry.
pub fn conjecture_rhs_symbolic(b: &BSeriesPair, p: i64) -> Result<QSeries<Poly4>> {
    let [chi_l, k2, lk, chi_o] = symbolic_exponents();
    conjecture_rhs_with(&chi_l, &k2, &lk, &chi_o, b, p)
}

/// Precision used for an order-`n` job: `n + 2` when the B-series allow it.
/// The coefficients of `x^0..x^n` only need everything modulo `q^(n+1)`.
fn working_precision(b: &BSeriesPair, n: usize) -> Result<i64> {
    let p = (n as i64 + 2).min(b.precision());
    b.require(n as i64 + 1)?;
    Ok(p)
}

/// Universal polynomials `T_0..T_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct UniversalPolynomialTable {
    pub polys: Vec<Poly4>,
}

impl UniversalPolynomialTable {
    /// `T_delta`, zero for negative `delta`.
    pub fn get(&self, delta: i64) -> Option<Poly4> {
        if delta < 0 {
            return Some(Poly4::default());
        }
        self.polys.get(delta as usize).cloned()
    }

    pub fn max_delta(&self) -> usize {
        self.polys.len() - 1
    }
}

/// `T_0..T_N` as the coefficients of the symbolic right-hand side in powers of `DG2`.
pub fn tdelta_universal(b: &BSeriesPair, n: usize) -> Result<UniversalPolynomialTable> {
    let p = working_precision(b, n)?;
    let rhs = conjecture_rhs_symbolic(b, p)?;
    let base = dg2(p).lift::<Poly4>();
    let mut polys = rhs.expand_in_base(&base)?;
    polys.truncate(n + 1);
    Ok(UniversalPolynomialTable { polys })
}

/// `t_0..t_N` for a concrete surface, computed entirely over the rationals.
pub fn tdelta_evaluate(geom: &SurfaceGeometry, b: &BSeriesPair, n: usize) -> Result<Vec<Rational>> {
    let p = working_precision(b, n)?;
    let rhs = conjecture_rhs(geom, b, p)?;
    let mut t = rhs.expand_in_base(&dg2(p))?;
    t.truncate(n + 1);
    Ok(t)
}

/// The series `A1..A4` with `T(S, L) = exp(L^2 A1 + L.K A2 + K^2 A3 + c2 A4)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LogParts {
    pub a1: QSeries,
    pub a2: QSeries,
    pub a3: QSeries,
    pub a4: QSeries,
}

pub fn universal_log_parts(b: &BSeriesPair, p: i64) -> Result<LogParts> {
    b.require(p)?;
    let l = log_dg2(p);
    let lam = log_delta_d2g2(p);
    let log_b1 = b.b1.truncate(p).log()?;
    let log_b2 = b.b2.truncate(p).log()?;
    let a1 = l.scale(&rat(1, 2));
    let a2 = &l.scale(&rat(-1, 2)) + &log_b2;
    let common = &l.scale(&rat(1, 12)) - &lam.scale(&rat(1, 24));
    let a3 = &common + &log_b1;
    Ok(LogParts { a1, a2, a3, a4: common })
}

/// `sum_l n_r(l, m) q^l = B1^{K^2} B2^m DG2^r D^2G2 / (Delta D^2G2)^{chi(O)/2}`
/// to absolute precision `p`. Requires an integral `chi(O)`.
pub fn nr_series(geom: &SurfaceGeometry, m: i64, r: u32, b: &BSeriesPair, p: i64) -> Result<QSeries> {
    let chi_o = as_integer(&geom.chi_o())
        .and_then(|c| i64::try_from(c).ok())
        .ok_or_else(|| Error::InvalidInput(format!("chi(O) = {} is not an integer", geom.chi_o())))?;
    // DG2^r D^2G2 / (Delta D^2G2)^{chi/2} = q^{r + 1 - chi} * (unit series)
    let shift = r as i64 + 1 - chi_o;
    let rel = p - shift;
    if rel <= 0 {
        return Ok(QSeries::zero(p));
    }
    b.require(rel)?;
    let mut unit = b.b1.truncate(rel).pow_int(geom.k2)?;
    unit = &unit * &b.b2.truncate(rel).pow_int(m)?;
    unit = &unit * &dg2_unit(rel).pow_int(r as i64)?;
    unit = &unit * &d2g2_unit(rel);
    let denom = (&delta_unit(rel) * &d2g2_unit(rel)).pow_rational(&rat(-chi_o, 2))?;
    unit = &unit * &denom;
    Ok(unit.shift(shift))
}

/// `n_r(l, m) := T_{l + chi(O) - 1 - r}(2l + m, m, K^2, c2)`.
pub fn nr_from_polynomials(
    table: &UniversalPolynomialTable,
    geom: &SurfaceGeometry,
    l: i64,
    m: i64,
    r: i64,
) -> Result<Rational> {
    let chi_o = geom.chi_o();
    let idx = int(l - 1 - r) + &chi_o;
    let idx = as_integer(&idx)
        .and_then(|c| i64::try_from(c).ok())
        .ok_or_else(|| Error::InvalidInput("non-integral chi(O)".into()))?;
    let t = table
        .get(idx)
        .ok_or_else(|| Error::InvalidInput(format!("T_{idx} not computed")))?;
    Ok(t.eval(&[int(2 * l + m), int(m), int(geom.k2), int(geom.c2)]))
}

impl Add for SurfaceGeometry {
    type Output = SurfaceGeometry;
    fn add(self, o: SurfaceGeometry) -> SurfaceGeometry {
        SurfaceGeometry::new(self.l2 + o.l2, self.lk + o.lk, self.k2 + o.k2, self.c2 + o.c2)
    }
}

impl Sub for SurfaceGeometry {
    type Output = SurfaceGeometry;
    fn sub(self, o: SurfaceGeometry) -> SurfaceGeometry {
        SurfaceGeometry::new(self.l2 - o.l2, self.lk - o.lk, self.k2 - o.k2, self.c2 - o.c2)
    }
}
