//! q-expansions of the quasimodular forms entering the generating functions:
//! Eisenstein series `G_k`, the discriminant `Delta`, and `D G2`, `D^2 G2`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qseries::{int, QSeries, Rational};

/// `sigma_k(n) = sum_{d | n} d^k`.
pub fn sigma(k: u32, n: u64) -> BigInt {
    assert!(n >= 1, "sigma is defined for n >= 1");
    let mut acc = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    acc
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli numbers `B_0..B_n` (with `B_1 = -1/2`) from
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![int(1)];
    for m in 1..=n as u64 {
        let mut s = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            s += Rational::from_integer(binomial(m + 1, j as u64)) * bj;
        }
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `G_k = -B_k / 2k + sum_{n>0} sigma_{k-1}(n) q^n` modulo `q^precision`.
pub fn eisenstein(k: i64, precision: i64) -> Result<QSeries> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::OddWeightUnsupported(k));
    }
    let bk = bernoulli_numbers(k as usize).pop().expect("B_k");
    let mut coeffs = vec![-bk / int(2 * k)];
    for n in 1..precision.max(1) {
        coeffs.push(Rational::from_integer(sigma((k - 1) as u32, n as u64)));
    }
    Ok(QSeries::new(0, coeffs, precision))
}

/// `Delta = q prod_{k>0} (1 - q^k)^24` by repeated convolution.
pub fn delta(precision: i64) -> QSeries {
    let len = (precision - 1).max(0) as usize;
    // coefficients of prod (1 - q^k)^24 from q^0
    let mut c = vec![BigInt::zero(); len];
    if len > 0 {
        c[0] = BigInt::one();
    }
    for k in 1..len {
        for _ in 0..24 {
            for i in (k..len).rev() {
                let t = c[i - k].clone();
                c[i] -= t;
            }
        }
    }
    QSeries::new(1, c.into_iter().map(Rational::from_integer).collect(), precision)
}

/// `q prod (1 - q^k)^24` computed as the 24th power of Euler's pentagonal
/// series `sum_j (-1)^j q^{j(3j-1)/2}`, independent of [`delta`].
pub fn delta_pentagonal(precision: i64) -> QSeries {
    let len = (precision - 1).max(1);
    let mut c = vec![Rational::zero(); len as usize];
    let mut j: i64 = 0;
    loop {
        let mut any = false;
        for jj in [j, -j] {
            let e = jj * (3 * jj - 1) / 2;
            if e < len {
                any = true;
                let sign = if jj.rem_euclid(2) == 0 { 1 } else { -1 };
                c[e as usize] = int(sign);
            }
        }
        if !any {
            break;
        }
        j += 1;
    }
    let eta = QSeries::new(0, c, len);
    eta.pow_int(24).expect("positive power").shift(1)
}

/// `D G2 = sum n sigma_1(n) q^n`.
pub fn dg2(precision: i64) -> QSeries {
    weighted_sigma1(1, precision)
}

/// `D^2 G2 = sum n^2 sigma_1(n) q^n`.
pub fn d2g2(precision: i64) -> QSeries {
    weighted_sigma1(2, precision)
}

fn weighted_sigma1(power: u32, precision: i64) -> QSeries {
    let coeffs = (1..precision.max(1))
        .map(|n| Rational::from_integer(BigInt::from(n).pow(power) * sigma(1, n as u64)))
        .collect();
    QSeries::new(1, coeffs, precision)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormName {
    G2,
    G4,
    G6,
    Delta,
    DG2,
    D2G2,
}

impl FormName {
    pub const ALL: [FormName; 6] =
        [FormName::G2, FormName::G4, FormName::G6, FormName::Delta, FormName::DG2, FormName::D2G2];
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormName::G2 => "G2",
            FormName::G4 => "G4",
            FormName::G6 => "G6",
            FormName::Delta => "Delta",
            FormName::DG2 => "DG2",
            FormName::D2G2 => "D2G2",
        };
        f.write_str(s)
    }
}

impl FromStr for FormName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FormName::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown form `{s}`")))
    }
}

fn catalog() -> &'static DashMap<(FormName, i64), QSeries> {
    static CATALOG: OnceLock<DashMap<(FormName, i64), QSeries>> = OnceLock::new();
    CATALOG.get_or_init(DashMap::new)
}

/// Memoized catalog lookup of a named form to the given precision.
pub fn form(name: FormName, precision: i64) -> QSeries {
    catalog()
        .entry((name, precision))
        .or_insert_with(|| match name {
            FormName::G2 => eisenstein(2, precision).expect("even weight"),
            FormName::G4 => eisenstein(4, precision).expect("even weight"),
            FormName::G6 => eisenstein(6, precision).expect("even weight"),
            FormName::Delta => delta(precision),
            FormName::DG2 => dg2(precision),
            FormName::D2G2 => d2g2(precision),
        })
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rat;

    fn s(start: i64, c: &[i64], p: i64) -> QSeries {
        QSeries::from_integers(start, c, p)
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(1, 1), BigInt::from(1));
        assert_eq!(sigma(1, 6), BigInt::from(12));
        assert_eq!(sigma(3, 2), BigInt::from(9));
        assert_eq!(sigma(0, 36), BigInt::from(9));
    }

    #[test]
    fn bernoulli() {
        let b = bernoulli_numbers(6);
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
    }

    #[test]
    fn eisenstein_examples() {
        let g2 = eisenstein(2, 4).unwrap();
        assert_eq!(g2, QSeries::new(0, vec![rat(-1, 24), int(1), int(3), int(4)], 4));
        assert_eq!(eisenstein(4, 2).unwrap(), QSeries::new(0, vec![rat(1, 240), int(1)], 2));
        assert_eq!(eisenstein(2, 1).unwrap(), QSeries::constant(rat(-1, 24), 1));
        assert_eq!(eisenstein(6, 1).unwrap(), QSeries::constant(rat(-1, 504), 1));
        assert!(matches!(eisenstein(3, 4), Err(Error::OddWeightUnsupported(3))));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(3), s(1, &[1, -24], 3));
        assert_eq!(delta(5), s(1, &[1, -24, 252, -1472], 5));
        assert_eq!(delta(12).coeff(1).unwrap(), int(1));
        assert_eq!(delta(12).coeff(11).unwrap(), int(534612));
    }

    #[test]
    fn derived_forms() {
        assert_eq!(dg2(4), s(1, &[1, 6, 12], 4));
        assert_eq!(d2g2(4), s(1, &[1, 12, 36], 4));
        assert_eq!(d2g2(20), dg2(20).derivative());
    }

    #[test]
    fn catalog_identities() {
        for p in [1, 2, 7, 33, 64] {
            assert_eq!(dg2(p), eisenstein(2, p).unwrap().derivative());
            assert_eq!(d2g2(p), dg2(p).derivative());
        }
        for p in 2..=64 {
            assert_eq!(delta(p), delta_pentagonal(p), "precision {p}");
        }
        let d = delta(40);
        let prod = &d * &d.inverse().unwrap();
        assert_eq!(prod, QSeries::one(prod.precision()));
    }

    #[test]
    fn ring_relation_delta() {
        // 1728 Delta = (240 G4)^3 - (504 G6)^2 up to the normalisation E4 = 240 G4, E6 = -504 G6
        let p = 20;
        let e4 = eisenstein(4, p).unwrap().scale(&int(240));
        let e6 = eisenstein(6, p).unwrap().scale(&int(-504));
        let lhs = &(&e4 * &e4) * &e4;
        let rhs = &e6 * &e6;
        assert_eq!((&lhs - &rhs).scale(&rat(1, 1728)), delta(p));
    }

    #[test]
    fn memo_returns_same_series() {
        assert_eq!(form(FormName::Delta, 9), delta(9));
        assert_eq!(form(FormName::Delta, 9), form(FormName::Delta, 9));
        assert_eq!("d2g2".parse::<FormName>().unwrap(), FormName::D2G2);
    }
}
