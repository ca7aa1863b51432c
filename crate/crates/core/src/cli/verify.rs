//! Reproduction checks behind `nodalgen verify`.

use std::time::Instant;

use clap::ValueEnum;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use serde::{Deserialize, Serialize};

use super::output::{row, Rendered};
use crate::error::{Error, Result};
use crate::modforms::{d2g2, delta};
use crate::multipoly::{Poly1, Poly4};
use crate::qseries::{int, rat, QSeries, Rational};
use crate::severi::{severi_degree, severi_table_for, MemoCache};
use crate::surfaces::{
    abelian_egf_check, abelian_genus_series, enriques_genus_series, k3_genus_series, node_polynomials,
    normalized_p_mu, qmu_extract, split_two_three, SurfaceKind,
};
use crate::universal::{
    check_fit_idempotence, default_degrees, fit3_verify_c1, fit_bc_unchecked, tdelta_evaluate, tdelta_universal,
    BSeriesPair, FitResult, SurfaceGeometry,
};

/// `B1` coefficients of `q^0..q^20`.
pub const REFERENCE_B1: [i64; 21] = [
    1,
    -1,
    -5,
    39,
    -345,
    2961,
    -24866,
    207759,
    -1737670,
    14584625,
    -122937305,
    1040906771,
    -8852158628,
    75598131215,
    -648168748072,
    5577807139921,
    -48163964723088,
    417210529188188,
    -3624610235789053,
    31575290280786530,
    -275758194822813754,
];

/// `B2` coefficients of `q^0..q^20`.
pub const REFERENCE_B2: [i64; 21] = [
    1,
    5,
    2,
    35,
    -140,
    986,
    -6643,
    48248,
    -362700,
    2802510,
    -22098991,
    177116726,
    -1438544962,
    11814206036,
    -97940651274,
    818498739637,
    -6888195294592,
    58324130994782,
    -496519067059432,
    4247266246317414,
    -36488059346439524,
];

/// `(mu, sign, 2-power, 3-power, primitive part from the constant term up)`.
pub const REFERENCE_Q: [(usize, i64, u32, u32, &[i64]); 3] = [
    (8, -1, 4, 0, &[1141616, 425202, 417490, -931146, 282855]),
    (9, -1, 3, 2, &[-1724779, -1488377, -1011772, 268644, 128676]),
    (10, 1, 4, 2, &[98802690, 57779307, 7300210, -3710865, -15710500, 4345998]),
];

pub fn reference_b(precision: i64) -> BSeriesPair {
    let p = precision.min(21);
    BSeriesPair::new(
        QSeries::from_integers(0, &REFERENCE_B1[..p as usize], p),
        QSeries::from_integers(0, &REFERENCE_B2[..p as usize], p),
    )
    .expect("constant terms are one")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    #[default]
    Quick,
    Full,
}

/// What a check compares against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Published reference values.
    ReferenceTable,
    /// A separate computation that shares no code with the one checked.
    IndependentOracle,
    /// A formal identity or self-consistency property.
    Identity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub criterion: u32,
    pub name: String,
    pub source: Source,
    pub passed: bool,
    pub detail: String,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub level: Level,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn rendered(&self) -> Result<Rendered> {
        let mut text: Vec<String> = self
            .checks
            .iter()
            .map(|c| {
                format!(
                    "{} [{:>2}] {} ({:?}, {} ms): {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.criterion,
                    c.name,
                    c.source,
                    c.runtime_ms,
                    c.detail
                )
            })
            .collect();
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        text.push(format!("{} checks, {failed} failed", self.checks.len()));
        let mut csv = vec![row(["criterion", "name", "source", "passed", "runtime_ms", "detail"])];
        for c in &self.checks {
            csv.push(vec![
                c.criterion.to_string(),
                c.name.clone(),
                format!("{:?}", c.source),
                c.passed.to_string(),
                c.runtime_ms.to_string(),
                c.detail.clone(),
            ]);
        }
        Rendered::new(text.join("\n"), self, csv)
    }
}

struct Runner {
    checks: Vec<CheckOutcome>,
}

impl Runner {
    fn check(&mut self, criterion: u32, name: &str, source: Source, f: impl FnOnce() -> Result<(bool, String)>) {
        let start = Instant::now();
        let (passed, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        log::info!("{} {name}", if passed { "pass" } else { "FAIL" });
        self.checks.push(CheckOutcome {
            criterion,
            name: name.to_string(),
            source,
            passed,
            detail,
            runtime_ms: start.elapsed().as_millis() as u64,
        });
    }
}

fn fit(n: usize, degrees: &[u32], cache: &MemoCache) -> Result<FitResult> {
    fit_bc_unchecked(&severi_table_for(degrees, n as u32, cache), n, degrees)
}

fn compare_b(b: &BSeriesPair, n: usize) -> (bool, String) {
    let expected = reference_b(n as i64 + 1);
    let first_bad = (0..=n as i64).find(|&k| {
        b.b1.coeff(k).ok() != expected.b1.coeff(k).ok() || b.b2.coeff(k).ok() != expected.b2.coeff(k).ok()
    });
    match first_bad {
        None => (true, format!("B1, B2 match through q^{n}")),
        Some(k) => (false, format!("first mismatch at q^{k}")),
    }
}

/// `q^-1 prod (1 - q^k)^-24` to `q^(n-2)` by repeated prefix sums.
fn inverse_eta24(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(0); n];
    c[0] = BigInt::from(1);
    for k in 1..n {
        for _ in 0..24 {
            for i in k..n {
                let prev = c[i - k].clone();
                c[i] += prev;
            }
        }
    }
    c
}

fn divisor_sum(n: u64) -> u64 {
    (1..=n).filter(|d| n % d == 0).sum()
}

fn random_series(rng: &mut StdRng, start: i64, leading: Option<i64>, len: usize) -> QSeries {
    let mut c: Vec<Rational> = (0..len).map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=4))).collect();
    if let Some(l) = leading {
        c[0] = int(l);
    }
    QSeries::new(start, c, start + len as i64)
}

/// An owned copy of a shared intermediate result.
fn own<T: Clone>(r: &Result<T>) -> Result<T> {
    r.as_ref().map(T::clone).map_err(|e| Error::InvalidInput(e.to_string()))
}

fn first_difference(a: &[Rational], b: &[Rational]) -> Option<usize> {
    (0..a.len().max(b.len())).find(|&i| a.get(i) != b.get(i))
}

/// Runs the checks of the given level against the Severi memo cache.
pub fn run_verify(level: Level, cache: &MemoCache) -> VerifyReport {
    let mut r = Runner { checks: Vec::new() };
    let short = fit(8, &[5, 6, 7, 8, 9], cache);

    r.check(1, "b_series_q8", Source::ReferenceTable, || Ok(compare_b(&own(&short)?.b, 8)));

    if level == Level::Full {
        r.check(2, "b_series_q20", Source::ReferenceTable, || {
            let f = fit(20, &[11, 12], cache)?;
            let (ok, detail) = compare_b(&f.b, 20);
            Ok((ok && f.is_consistent(), detail))
        });
        r.check(2, "c1_three_degree_q20", Source::Identity, || {
            let degrees = [11, 12, 13];
            let checks = fit3_verify_c1(&severi_table_for(&degrees, 20, cache), 20, &degrees)?;
            let bad = checks.iter().filter(|c| !c.matches()).count();
            Ok((bad == 0, format!("{} triples, {bad} mismatches", checks.len())))
        });
    }

    r.check(3, "overdetermination", Source::Identity, || {
        let f = own(&short)?;
        let bad = f.report.iter().filter(|p| !p.is_zero()).count();
        Ok((bad == 0 && f.report.len() == 90, format!("{} pair solutions, {bad} nonzero residuals", f.report.len())))
    });
    r.check(3, "fit_idempotence", Source::Identity, || {
        let f = own(&short)?;
        let table = severi_table_for(&f.degrees, 8, cache);
        let bad = check_fit_idempotence(&table, &f)?;
        Ok((bad.is_empty(), format!("{} Severi degrees not reproduced", bad.len())))
    });

    let b12 = fit(12, &default_degrees(12), cache).map(|f| f.b);
    r.check(4, "q_polynomials", Source::ReferenceTable, || {
        let b = own(&b12)?;
        for (mu, sign, a, c, prim) in REFERENCE_Q {
            let got = split_two_three(&qmu_extract(mu, &b)?);
            if got != (sign, a, c, Poly1::from_integers(prim)) {
                return Ok((false, format!("Q_{mu} differs")));
            }
        }
        Ok((true, "Q_8, Q_9, Q_10 match".into()))
    });
    r.check(4, "p_mu_consistency", Source::Identity, || {
        let b = own(&b12)?;
        let ps = node_polynomials(8, &own(&short)?.b)?;
        let mut compared = 0;
        for mu in 0..=8usize {
            let q = qmu_extract(mu, &b)?;
            for p in &ps[mu.div_ceil(2)..] {
                if normalized_p_mu(p, mu) != q.eval(&int(p.delta as i64)) {
                    return Ok((false, format!("p_{mu}({}) disagrees", p.delta)));
                }
                compared += 1;
            }
        }
        Ok((true, format!("{compared} leading coefficients agree")))
    });

    r.check(5, "k3_yau_zaslow", Source::IndependentOracle, || {
        let s = k3_genus_series(0, 29).series;
        let oracle = inverse_eta24(30);
        let got: Vec<Rational> = (-1..29).map(|l| s.coeff(l)).collect::<Result<_>>()?;
        let want: Vec<Rational> = oracle.into_iter().map(Rational::from_integer).collect();
        Ok(match first_difference(&got, &want) {
            None => (true, "30 coefficients match".into()),
            Some(i) => (false, format!("mismatch at q^{}", i as i64 - 1)),
        })
    });

    r.check(6, "abelian_genus_two", Source::IndependentOracle, || {
        let s = abelian_genus_series(0, 51).series;
        for n in 1..=50u64 {
            if s.coeff(n as i64)? != int((n * n * divisor_sum(n)) as i64) {
                return Ok((false, format!("mismatch at n = {n}")));
            }
        }
        Ok((true, "n^2 sigma_1(n) for n <= 50".into()))
    });

    let b10 = fit(10, &default_degrees(10), cache).map(|f| f.b);
    r.check(7, "universal_polynomials", Source::Identity, || {
        let t = tdelta_universal(&own(&b10)?, 10)?;
        let t1 = Poly4::linear([int(3), int(2), int(0), int(1)], int(0));
        let degrees_ok = t.polys.iter().enumerate().all(|(d, p)| p.degree().unwrap_or(0) as usize <= d);
        let ok = t.polys[0] == Poly4::constant(int(1)) && t.polys[1] == t1 && degrees_ok;
        Ok((ok, "T_0 = 1, T_1 = 3x + 2y + t, deg T_delta <= delta for delta <= 10".into()))
    });

    r.check(8, "multiplicativity", Source::Identity, || {
        let b = own(&b10)?;
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let mut g = || {
            SurfaceGeometry::new(
                rng.random_range(-40..=40),
                rng.random_range(-40..=40),
                rng.random_range(-12..=12),
                rng.random_range(-24..=48),
            )
        };
        for i in 0..20 {
            let (g1, g2) = (g(), g());
            let s = |g: &SurfaceGeometry| -> Result<QSeries> { Ok(QSeries::new(0, tdelta_evaluate(g, &b, 10)?, 11)) };
            if s(&(g1 + g2))? != &s(&g1)? * &s(&g2)? {
                return Ok((false, format!("pair {i} fails: {g1:?}, {g2:?}")));
            }
        }
        Ok((true, "20 random pairs, mod x^11".into()))
    });

    r.check(9, "severi_classical", Source::IndependentOracle, || {
        let mut ok = (1..=12).all(|d| severi_degree(d, 0, cache) == 1u32.into());
        for (d, delta, v) in [(2, 1, 3u32), (3, 1, 12), (3, 2, 21), (4, 3, 675)] {
            ok &= severi_degree(d, delta, cache) == v.into();
        }
        Ok((ok, "N(d,0) = 1 for d <= 12, N(2,1) = 3, N(3,1) = 12, N(3,2) = 21, N(4,3) = 675".into()))
    });
    r.check(9, "node_polynomials_vs_severi", Source::Identity, || {
        let ps = node_polynomials(8, &own(&short)?.b)?;
        let mut n = 0;
        for p in &ps {
            for d in 1..=9u32 {
                if p.delta + 2 > 2 * d as usize {
                    continue;
                }
                let want = Rational::from_integer(severi_degree(d, p.delta as u32, cache).into());
                if p.eval(d as i64) != want {
                    return Ok((false, format!("P_{}({d}) differs", p.delta)));
                }
                n += 1;
            }
        }
        Ok((true, format!("{n} values agree")))
    });

    r.check(10, "exp_log_round_trip", Source::Identity, || {
        let mut rng = StdRng::seed_from_u64(1);
        for i in 0..100 {
            let f = random_series(&mut rng, 0, Some(1), 10);
            if f.log()?.exp()? != f {
                return Ok((false, format!("case {i}")));
            }
        }
        Ok((true, "100 random series".into()))
    });
    r.check(10, "base_expansion_round_trip", Source::Identity, || {
        let mut rng = StdRng::seed_from_u64(2);
        for i in 0..100 {
            let lead = rng.random_range(1..=3);
            let g = random_series(&mut rng, 1, Some(lead), 9);
            let f = random_series(&mut rng, 0, None, 10);
            let c = f.expand_in_base(&g)?;
            if QSeries::from_base_expansion(&c, &g, 10) != f {
                return Ok((false, format!("case {i}")));
            }
        }
        Ok((true, "100 random pairs".into()))
    });
    r.check(10, "abelian_egf", Source::Identity, || Ok((abelian_egf_check(15, 5), "to q^15, z^5".into())));
    r.check(10, "enriques_square", Source::Identity, || {
        let s = enriques_genus_series(0, 20).series;
        let ratio = d2g2(22).div_series(&delta(22))?.truncate(20);
        Ok(((&s * &s).truncate(20) == ratio, "mod q^20".into()))
    });
    r.check(10, "p1xp1_symmetry", Source::Identity, || {
        let b = own(&b10)?;
        for (n, m) in [(1, 2), (2, 3), (1, 5), (3, 4)] {
            let a = tdelta_evaluate(&SurfaceKind::Ruled { e: 0, n, m }.geometry(), &b, 10)?;
            let c = tdelta_evaluate(&SurfaceKind::Ruled { e: 0, n: m, m: n }.geometry(), &b, 10)?;
            if a != c {
                return Ok((false, format!("({n}, {m})")));
            }
        }
        Ok((true, "delta <= 10".into()))
    });

    let passed = r.checks.iter().all(|c| c.passed);
    VerifyReport { level, passed, checks: r.checks }
}
