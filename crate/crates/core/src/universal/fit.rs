//! Fitting `B1`, `B2` from plane Severi degrees.
//!
//! On the plane `(L^2, L.K, K^2, c2) = (d^2, -3d, 9, 3)` the generating
//! function becomes `exp(d^2 C1(x) + d C2(x) + C3(x))` with `x = DG2` and
//!
//! ```text
//! C1 = 1/2 log(DG2/q)
//! C2 = 3/2 log(DG2/q) - 3 log B2
//! C3 = log(DG2/q) + 9 log B1 - 1/2 log(Delta D^2G2/q^2)
//! ```
//!
//! all re-expanded in powers of `x`. The Severi degrees agree with it for
//! `delta <= 2d - 2`, so each admissible pair of degrees gives two linear
//! equations for the `x^delta` coefficients of `C2` and `C3`.

use num_traits::Zero;
use serde::Serialize;

use super::{log_delta_d2g2, log_dg2, tdelta_evaluate, BSeriesPair, SurfaceGeometry};
use crate::error::{Error, Result};
use crate::modforms::dg2;
use crate::multipoly::Poly1;
use crate::qseries::{int, rat, QSeries, Rational};
use crate::severi::{severi_table_for, MemoCache, SeveriTable};

/// One admissible degree pair's solution for the `x^delta` coefficients,
/// and its difference from the first admissible pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairResidual {
    pub delta: usize,
    pub d1: u32,
    pub d2: u32,
    #[serde(serialize_with = "ser_rational")]
    pub c2: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c3: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub residual_c2: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub residual_c3: Rational,
}

impl PairResidual {
    pub fn is_zero(&self) -> bool {
        self.residual_c2.is_zero() && self.residual_c3.is_zero()
    }
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub max_delta: usize,
    pub degrees: Vec<u32>,
    /// Coefficients of `x^0..x^N`.
    pub c1: Vec<Rational>,
    pub c2: Vec<Rational>,
    pub c3: Vec<Rational>,
    pub b: BSeriesPair,
    pub report: Vec<PairResidual>,
}

impl FitResult {
    pub fn is_consistent(&self) -> bool {
        self.report.iter().all(PairResidual::is_zero)
    }
}

/// Expansion of `f` in powers of `DG2`, coefficients `x^0..x^n`.
fn in_x(f: &QSeries, n: usize) -> Result<Vec<Rational>> {
    let p = n as i64 + 2;
    let mut c = f.truncate(p).expand_in_base(&dg2(p))?;
    c.truncate(n + 1);
    Ok(c)
}

/// Conjectural `C1` coefficients `x^0..x^n`.
pub fn conjectural_c1(n: usize) -> Result<Vec<Rational>> {
    in_x(&log_dg2(n as i64 + 2).scale(&rat(1, 2)), n)
}

/// Coefficients of `log sum_delta N^{d,delta} x^delta` up to the validity
/// bound `min(n, 2d - 2)`.
fn log_severi(table: &SeveriTable, d: u32, n: usize) -> Result<Vec<Rational>> {
    let top = n.min(2 * d as usize - 2);
    let coeffs: Vec<Rational> =
        table.row(d)[..=top].iter().map(|v| Rational::from_integer(v.clone().into())).collect();
    let s = QSeries::new(0, coeffs, top as i64 + 1);
    let l = s.log()?;
    Ok((0..=top as i64).map(|k| l.coeff_or_zero(k)).collect())
}

fn admissible(degrees: &[u32], delta: usize) -> Vec<u32> {
    degrees.iter().copied().filter(|&d| delta + 2 <= 2 * d as usize).collect()
}

/// Fits `C2`, `C3` pairwise and recovers `B1`, `B2`, without failing on
/// inconsistent pairs; the residuals are in the report.
pub fn fit_bc_unchecked(table: &SeveriTable, n: usize, degrees: &[u32]) -> Result<FitResult> {
    let mut degrees = degrees.to_vec();
    degrees.sort_unstable();
    degrees.dedup();
    for delta in 0..=n {
        if admissible(&degrees, delta).len() < 2 {
            return Err(Error::InsufficientDegrees { delta });
        }
    }
    for &d in &degrees {
        if d > table.d_max || (table.delta_max as usize) < n.min(2 * d as usize - 2) {
            return Err(Error::InvalidInput(format!("Severi table does not cover degree {d}")));
        }
    }
    let c1 = conjectural_c1(n)?;
    let logs: Vec<(u32, Vec<Rational>)> =
        degrees.iter().map(|&d| Ok((d, log_severi(table, d, n)?))).collect::<Result<_>>()?;

    let mut c2 = Vec::with_capacity(n + 1);
    let mut c3 = Vec::with_capacity(n + 1);
    let mut report = Vec::new();
    for delta in 0..=n {
        let adm = admissible(&degrees, delta);
        // L(d) = log[x^delta] - d^2 c1 = d c2 + c3
        let value = |d: u32| -> Rational {
            let l = &logs.iter().find(|(e, _)| *e == d).expect("degree present").1;
            let dd = int(d as i64);
            &l[delta] - &dd * &dd * &c1[delta]
        };
        let mut reference: Option<(Rational, Rational)> = None;
        for (i, &d1) in adm.iter().enumerate() {
            for &d2 in &adm[i + 1..] {
                let line = Poly1::interpolate(&[(int(d1 as i64), value(d1)), (int(d2 as i64), value(d2))])?;
                let (s2, s3) = (line.coefficient(1), line.coefficient(0));
                let (r2, r3) = match &reference {
                    None => {
                        reference = Some((s2.clone(), s3.clone()));
                        (Rational::zero(), Rational::zero())
                    }
                    Some((a, b)) => (&s2 - a, &s3 - b),
                };
                report.push(PairResidual { delta, d1, d2, c2: s2, c3: s3, residual_c2: r2, residual_c3: r3 });
            }
        }
        let (a, b) = reference.expect("at least one pair");
        c2.push(a);
        c3.push(b);
    }

    let b = recover_b(&c2, &c3, n)?;
    Ok(FitResult { max_delta: n, degrees, c1, c2, c3, b, report })
}

/// `log B2 = 1/2 [log(DG2/q)]_x - C2/3` and
/// `log B1 = (C3 - [log(DG2/q)]_x + 1/2 [log(Delta D^2G2/q^2)]_x) / 9`,
/// substituted `x = DG2` and exponentiated.
fn recover_b(c2: &[Rational], c3: &[Rational], n: usize) -> Result<BSeriesPair> {
    let p = n as i64 + 1;
    let ell = in_x(&log_dg2(n as i64 + 2), n)?;
    let lam = in_x(&log_delta_d2g2(n as i64 + 2), n)?;
    let log_b2: Vec<Rational> =
        (0..=n).map(|k| &ell[k] * rat(1, 2) - &c2[k] * rat(1, 3)).collect();
    let log_b1: Vec<Rational> =
        (0..=n).map(|k| (&c3[k] - &ell[k] + &lam[k] * rat(1, 2)) * rat(1, 9)).collect();
    let x = dg2(p + 1);
    let to_q = |c: Vec<Rational>| -> Result<QSeries> {
        QSeries::new(0, c, p).compose(&x)?.exp()
    };
    BSeriesPair::new(to_q(log_b1)?, to_q(log_b2)?)
}

/// Fits `B1`, `B2` from `N^{d,delta}`, `delta <= n`, using every admissible
/// pair from `degrees`; fails if two pairs disagree.
pub fn fit_bc(table: &SeveriTable, n: usize, degrees: &[u32]) -> Result<FitResult> {
    let fit = fit_bc_unchecked(table, n, degrees)?;
    if let Some(bad) = fit.report.iter().find(|r| !r.is_zero()) {
        return Err(Error::InconsistentOverdetermination {
            delta: bad.delta,
            detail: format!(
                "pair ({}, {}) gives C2 = {}, C3 = {} (residuals {}, {})",
                bad.d1, bad.d2, bad.c2, bad.c3, bad.residual_c2, bad.residual_c3
            ),
        });
    }
    Ok(fit)
}

/// Smallest pair of degrees admissible for every `delta <= n`.
pub fn default_degrees(n: usize) -> Vec<u32> {
    let d0 = (n as u32 + 3) / 2;
    vec![d0.max(1), d0.max(1) + 1]
}

/// Computes the needed Severi degrees and fits.
pub fn fit_from_severi(n: usize, degrees: &[u32], cache: &MemoCache) -> Result<FitResult> {
    let table = severi_table_for(degrees, n as u32, cache);
    fit_bc(&table, n, degrees)
}

/// Result of fitting `C1` jointly with `C2`, `C3` at one `x^delta`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct C1Check {
    pub delta: usize,
    pub degrees: [u32; 3],
    #[serde(serialize_with = "ser_rational")]
    pub fitted: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub expected: Rational,
}

impl C1Check {
    pub fn matches(&self) -> bool {
        self.fitted == self.expected
    }
}

/// Solves for `C1`, `C2`, `C3` at each `x^delta` from every admissible triple
/// of degrees and compares the fitted `C1` with the conjectural one.
pub fn fit3_verify_c1(table: &SeveriTable, n: usize, degrees: &[u32]) -> Result<Vec<C1Check>> {
    let mut degrees = degrees.to_vec();
    degrees.sort_unstable();
    degrees.dedup();
    let expected = conjectural_c1(n)?;
    let logs: Vec<(u32, Vec<Rational>)> =
        degrees.iter().map(|&d| Ok((d, log_severi(table, d, n)?))).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (delta, exp) in expected.iter().enumerate() {
        let adm = admissible(&degrees, delta);
        if adm.len() < 3 {
            return Err(Error::InsufficientDegrees { delta });
        }
        for i in 0..adm.len() {
            for j in i + 1..adm.len() {
                for k in j + 1..adm.len() {
                    let pts: Vec<(Rational, Rational)> = [adm[i], adm[j], adm[k]]
                        .iter()
                        .map(|&d| {
                            let l = &logs.iter().find(|(e, _)| *e == d).expect("degree").1;
                            (int(d as i64), l[delta].clone())
                        })
                        .collect();
                    let quad = Poly1::interpolate(&pts)?;
                    out.push(C1Check {
                        delta,
                        degrees: [adm[i], adm[j], adm[k]],
                        fitted: quad.coefficient(2),
                        expected: exp.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// A plane Severi degree that the fitted series fail to reproduce.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotenceMismatch {
    pub d: u32,
    pub delta: usize,
    pub severi: Rational,
    pub predicted: Rational,
}

/// Rebuilds `t_delta(d)` from the fitted `B1`, `B2` and compares with the
/// Severi degrees used for the fit, for `delta <= min(n, 2d - 2)`.
pub fn check_fit_idempotence(table: &SeveriTable, fit: &FitResult) -> Result<Vec<IdempotenceMismatch>> {
    let n = fit.max_delta;
    let mut out = Vec::new();
    for &d in &fit.degrees {
        let geom = SurfaceGeometry::new((d * d) as i64, -3 * d as i64, 9, 3);
        let t = tdelta_evaluate(&geom, &fit.b, n)?;
        for delta in 0..=n.min(2 * d as usize - 2) {
            let severi = Rational::from_integer(table.get(d, delta as u32).clone().into());
            if t[delta] != severi {
                out.push(IdempotenceMismatch { d, delta, severi, predicted: t[delta].clone() });
            }
        }
    }
    Ok(out)
}
