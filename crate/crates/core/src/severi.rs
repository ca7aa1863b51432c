//! Plane Severi degrees `N^{d,delta}` (reducible curves included) from the
//! Caporaso–Harris recursion on relative Severi degrees.
//!
//! A relative Severi degree `N(d, delta, alpha, beta)` counts degree-`d`
//! curves with `delta` nodes, not containing a fixed line `L`, through the
//! appropriate number of general points, with `alpha_k` contacts of order `k`
//! with `L` at fixed points and `beta_k` at unassigned points. Specialising one
//! point onto `L` gives
//!
//! ```text
//! N(d, delta, a, b) = sum_{k : b_k > 0} k N(d, delta, a + e_k, b - e_k)
//!     + sum_{a' <= a, b' >= b, I a' + I b' = d - 1}
//!         I^(b' - b) C(a, a') C(b', b) N(d - 1, delta', a', b')
//! delta' = delta + |b' - b| + 1 - d
//! ```
//!
//! with base case `d = 1` (one line, no nodes).

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Header line of a cache file. The second field names the cogenus
/// bookkeeping so that caches written under another convention are rejected.
pub const CACHE_HEADER: &str = "# nodalgen severi cache v1; delta' = delta + |beta'-beta| + 1 - d";

/// Contact multiplicities `(m_1, m_2, ...)`: `m_k` points of contact order `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TangencyProfile(Vec<u8>);

impl TangencyProfile {
    pub fn new(mut m: Vec<u8>) -> Self {
        while m.last() == Some(&0) {
            m.pop();
        }
        TangencyProfile(m)
    }

    pub fn empty() -> Self {
        TangencyProfile(Vec::new())
    }

    /// `count` points of contact order `k`.
    pub fn unit(k: usize, count: u8) -> Self {
        let mut m = vec![0; k];
        m[k - 1] = count;
        Self::new(m)
    }

    /// Multiplicity of contact order `k` (1-based).
    pub fn get(&self, k: usize) -> u8 {
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[u8] {
        &self.0
    }

    /// `I(profile) = sum_k k m_k`.
    pub fn weight(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &m)| (i as u32 + 1) * m as u32).sum()
    }

    /// `|profile| = sum_k m_k`.
    pub fn len(&self) -> u32 {
        self.0.iter().map(|&m| m as u32).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        (1..=self.0.len()).all(|k| self.get(k) <= other.get(k))
    }

    fn with_delta(&self, k: usize, delta: i32) -> Self {
        let mut m = self.0.clone();
        if m.len() < k {
            m.resize(k, 0);
        }
        m[k - 1] = (m[k - 1] as i32 + delta) as u8;
        Self::new(m)
    }

    fn plus(&self, other: &[u8]) -> Self {
        let n = self.0.len().max(other.len());
        Self::new((0..n).map(|i| self.0.get(i).unwrap_or(&0) + other.get(i).unwrap_or(&0)).collect())
    }
}

impl fmt::Display for TangencyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for TangencyProfile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Self::empty());
        }
        s.split(',')
            .map(|p| p.parse::<u8>().map_err(|_| Error::Parse(format!("invalid profile `{s}`"))))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeveriKey {
    pub d: u32,
    pub delta: u32,
    pub alpha: TangencyProfile,
    pub beta: TangencyProfile,
}

impl SeveriKey {
    pub fn new(d: u32, delta: u32, alpha: TangencyProfile, beta: TangencyProfile) -> Result<Self> {
        let key = SeveriKey { d, delta, alpha, beta };
        if d == 0 || key.alpha.weight() + key.beta.weight() != d {
            return Err(Error::InvalidProfile(format!(
                "I(alpha) + I(beta) = {} but d = {d}",
                key.alpha.weight() + key.beta.weight()
            )));
        }
        Ok(key)
    }

    /// Key of the plain Severi degree: no fixed contacts, `d` simple contacts.
    pub fn plain(d: u32, delta: u32) -> Self {
        SeveriKey { d, delta, alpha: TangencyProfile::empty(), beta: TangencyProfile::unit(1, d as u8) }
    }
}

impl fmt::Display for SeveriKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}|{}", self.d, self.delta, self.alpha, self.beta)
    }
}

impl FromStr for SeveriKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid key `{s}`"));
        let mut it = s.splitn(3, ':');
        let d = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let delta = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let (a, b) = it.next().ok_or_else(bad)?.split_once('|').ok_or_else(bad)?;
        SeveriKey::new(d, delta, a.parse()?, b.parse()?)
    }
}

/// Write-once memo of relative Severi degrees, safe to share across threads.
#[derive(Debug, Default)]
pub struct MemoCache {
    map: DashMap<SeveriKey, BigUint>,
}

impl MemoCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, key: &SeveriKey) -> Option<BigUint> {
        self.map.get(key).map(|v| v.value().clone())
    }

    /// Inserts a value unless the key is already present; returns the stored value.
    pub fn insert(&self, key: SeveriKey, value: BigUint) -> BigUint {
        let entry = self.map.entry(key).or_insert(value);
        entry.value().clone()
    }

    /// Overwrites an entry regardless of write-once semantics. Only meant for
    /// fault-injection tests of the verification pipeline.
    #[doc(hidden)]
    pub fn tamper(&self, key: SeveriKey, value: BigUint) {
        self.map.insert(key, value);
    }

    /// All entries sorted by key.
    pub fn entries(&self) -> BTreeMap<SeveriKey, BigUint> {
        self.map.iter().map(|e| (e.key().clone(), e.value().clone())).collect()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut w = BufWriter::new(fs::File::create(path)?);
        writeln!(w, "{CACHE_HEADER}")?;
        for (k, v) in self.entries() {
            writeln!(w, "{k}={v}")?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let cache = MemoCache::new();
        let mut lines = text.lines();
        match lines.next() {
            None => return Ok(cache),
            Some(h) if h.trim_end() == CACHE_HEADER => {}
            Some(h) => return Err(Error::FormatVersionMismatch(format!("unexpected header `{h}`"))),
        }
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let corrupt = || Error::FormatVersionMismatch(format!("line {}: `{line}`", i + 2));
            let (k, v) = line.split_once('=').ok_or_else(corrupt)?;
            let key: SeveriKey = k.parse().map_err(|_| corrupt())?;
            let value: BigUint = v.trim().parse().map_err(|_| corrupt())?;
            cache.map.insert(key, value);
        }
        Ok(cache)
    }
}

fn binomial(n: u32, k: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multiplicity vectors of all partitions of `w`, with their lengths.
fn partitions(w: u32) -> Arc<Vec<(Vec<u8>, u32)>> {
    static TABLE: OnceLock<Mutex<Vec<Arc<Vec<(Vec<u8>, u32)>>>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(Vec::new()));
    let mut t = table.lock().expect("partition table");
    while t.len() <= w as usize {
        let n = t.len() as u32;
        let mut out = Vec::new();
        let mut m = vec![0u8; n as usize];
        fill_partitions(n, n, &mut m, &mut out);
        t.push(Arc::new(out));
    }
    t[w as usize].clone()
}

fn fill_partitions(rest: u32, max_part: u32, m: &mut Vec<u8>, out: &mut Vec<(Vec<u8>, u32)>) {
    if rest == 0 {
        let mut v = m.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        let len = v.iter().map(|&x| x as u32).sum();
        out.push((v, len));
        return;
    }
    for k in (1..=max_part.min(rest)).rev() {
        m[k as usize - 1] += 1;
        fill_partitions(rest - k, k, m, out);
        m[k as usize - 1] -= 1;
    }
}

/// Every `alpha' <= alpha` componentwise, with `prod_k C(alpha_k, alpha'_k)`.
fn sub_profiles(alpha: &TangencyProfile) -> Vec<(TangencyProfile, BigUint)> {
    let mut out = vec![(Vec::new(), BigUint::one())];
    for k in 1..=alpha.0.len() {
        let ak = alpha.get(k);
        let mut next = Vec::with_capacity(out.len() * (ak as usize + 1));
        for (m, c) in &out {
            for j in 0..=ak {
                let mut m2: Vec<u8> = m.clone();
                m2.push(j);
                next.push((m2, c * binomial(ak as u32, j as u32)));
            }
        }
        out = next;
    }
    out.into_iter().map(|(m, c)| (TangencyProfile::new(m), c)).collect()
}

/// Relative Severi degree `N(d, delta, alpha, beta)`, memoized in `cache`.
pub fn severi_rel(key: &SeveriKey, cache: &MemoCache) -> Result<BigUint> {
    if key.d == 0 || key.alpha.weight() + key.beta.weight() != key.d {
        return Err(Error::InvalidProfile(key.to_string()));
    }
    Ok(rel(key.d, key.delta as i64, &key.alpha, &key.beta, cache))
}

fn rel(d: u32, delta: i64, alpha: &TangencyProfile, beta: &TangencyProfile, cache: &MemoCache) -> BigUint {
    let max_nodes = (d as i64) * (d as i64 - 1) / 2;
    if delta < 0 || delta > max_nodes {
        return BigUint::zero();
    }
    if d == 1 {
        return BigUint::one();
    }
    let key = SeveriKey { d, delta: delta as u32, alpha: alpha.clone(), beta: beta.clone() };
    if let Some(v) = cache.get(&key) {
        return v;
    }

    let mut total = BigUint::zero();
    // a moving contact of order k becomes fixed
    for k in 1..=beta.0.len() {
        let bk = beta.get(k);
        if bk > 0 {
            let a2 = alpha.with_delta(k, 1);
            let b2 = beta.with_delta(k, -1);
            let v = rel(d, delta, &a2, &b2, cache);
            if !v.is_zero() {
                total += v * k as u32;
            }
        }
    }

    // the curve degenerates to L plus a curve of degree d - 1
    let i_alpha = alpha.weight();
    let min_new_points = d as i64 - 1 - delta;
    for (a_sub, c_alpha) in sub_profiles(alpha) {
        let i_sub = a_sub.weight();
        if i_sub + 1 > i_alpha {
            continue;
        }
        let w = i_alpha - i_sub - 1;
        for (gamma, gamma_len) in partitions(w).iter() {
            if (*gamma_len as i64) < min_new_points {
                continue;
            }
            let delta2 = delta + *gamma_len as i64 + 1 - d as i64;
            let b_new = beta.plus(gamma);
            let sub = rel(d - 1, delta2, &a_sub, &b_new, cache);
            if sub.is_zero() {
                continue;
            }
            let mut coeff = c_alpha.clone();
            for (i, &g) in gamma.iter().enumerate() {
                if g == 0 {
                    continue;
                }
                let k = i as u32 + 1;
                coeff *= BigUint::from(k).pow(g as u32);
                coeff *= binomial(beta.get(k as usize) as u32 + g as u32, beta.get(k as usize) as u32);
            }
            total += coeff * sub;
        }
    }
    cache.insert(key, total)
}

/// The plain Severi degree `N^{d,delta}`.
pub fn severi_degree(d: u32, delta: u32, cache: &MemoCache) -> BigUint {
    assert!(d >= 1, "degree must be positive");
    let k = SeveriKey::plain(d, delta);
    rel(k.d, delta as i64, &k.alpha, &k.beta, cache)
}

/// `N^{d,delta}` for `1 <= d <= d_max`, `0 <= delta <= delta_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeveriTable {
    pub d_max: u32,
    pub delta_max: u32,
    rows: Vec<Vec<BigUint>>,
}

impl SeveriTable {
    pub fn get(&self, d: u32, delta: u32) -> &BigUint {
        &self.rows[d as usize - 1][delta as usize]
    }

    /// `N^{d,0..=delta_max}`.
    pub fn row(&self, d: u32) -> &[BigUint] {
        &self.rows[d as usize - 1]
    }
}

/// Computes the table in parallel, sharing `cache`; reports each finished
/// degree through `log`.
pub fn severi_table(d_max: u32, delta_max: u32, cache: &MemoCache) -> SeveriTable {
    let mut rows = Vec::with_capacity(d_max as usize);
    for d in 1..=d_max {
        let row: Vec<BigUint> = (0..=delta_max).into_par_iter().map(|delta| severi_degree(d, delta, cache)).collect();
        log::info!("severi: degree {d} done, {} cached entries", cache.len());
        rows.push(row);
    }
    SeveriTable { d_max, delta_max, rows }
}

/// Builds a table only for the listed degrees (rows for other degrees are empty).
pub fn severi_table_for(degrees: &[u32], delta_max: u32, cache: &MemoCache) -> SeveriTable {
    let d_max = degrees.iter().copied().max().unwrap_or(0);
    let mut rows = vec![Vec::new(); d_max as usize];
    for &d in degrees {
        rows[d as usize - 1] =
            (0..=delta_max).into_par_iter().map(|delta| severi_degree(d, delta, cache)).collect();
        log::info!("severi: degree {d} done, {} cached entries", cache.len());
    }
    SeveriTable { d_max, delta_max, rows }
}
