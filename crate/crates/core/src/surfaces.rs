//! Named surfaces and the specialisations of the generating function to them:
//! genus-indexed counts on K3, abelian and Enriques surfaces, node
//! polynomials of the plane and predictions for Hirzebruch surfaces.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modforms::{d2g2, delta, dg2, sigma};
use crate::multipoly::Poly1;
use crate::qseries::{int, rat, QSeries, Rational};
use crate::universal::{conjecture_rhs_with, tdelta_evaluate, BSeriesPair, SurfaceGeometry};

/// A family of surfaces together with the parameters that fix `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    /// `O(d)` on the plane.
    P2 { d: i64 },
    /// `nF + mE` on the Hirzebruch surface `Sigma_e`.
    Ruled { e: i64, n: i64, m: i64 },
    K3 { l2: i64 },
    Abelian { l2: i64 },
    Enriques { l2: i64 },
    Custom(SurfaceGeometry),
}

/// Builds a [`SurfaceKind`] from a name and its integer parameters.
pub fn geometry_preset(kind: &str, params: &[i64]) -> Result<SurfaceGeometry> {
    Ok(parse_kind(kind, params)?.geometry())
}

pub fn parse_kind(kind: &str, params: &[i64]) -> Result<SurfaceKind> {
    let arity = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("surface kind `{kind}` takes {n} parameters, got {}", params.len())))
        }
    };
    let k = match kind.to_ascii_lowercase().as_str() {
        "p2" => {
            arity(1)?;
            SurfaceKind::P2 { d: params[0] }
        }
        "ruled" => {
            arity(3)?;
            SurfaceKind::Ruled { e: params[0], n: params[1], m: params[2] }
        }
        "k3" => {
            arity(1)?;
            SurfaceKind::K3 { l2: params[0] }
        }
        "abelian" => {
            arity(1)?;
            SurfaceKind::Abelian { l2: params[0] }
        }
        "enriques" => {
            arity(1)?;
            SurfaceKind::Enriques { l2: params[0] }
        }
        "custom" => {
            arity(4)?;
            SurfaceKind::Custom(SurfaceGeometry::new(params[0], params[1], params[2], params[3]))
        }
        _ => return Err(Error::UnknownKind(kind.to_string())),
    };
    Ok(k)
}

impl SurfaceKind {
    pub fn geometry(&self) -> SurfaceGeometry {
        match *self {
            SurfaceKind::P2 { d } => SurfaceGeometry::new(d * d, -3 * d, 9, 3),
            // K = -2E - (e+2)F, E^2 = -e, E.F = 1, F^2 = 0
            SurfaceKind::Ruled { e, n, m } => SurfaceGeometry::new(2 * n * m - e * m * m, -2 * n + (e - 2) * m, 8, 4),
            SurfaceKind::K3 { l2 } => SurfaceGeometry::new(l2, 0, 0, 24),
            SurfaceKind::Abelian { l2 } => SurfaceGeometry::new(l2, 0, 0, 0),
            SurfaceKind::Enriques { l2 } => SurfaceGeometry::new(l2, 0, 0, 12),
            SurfaceKind::Custom(g) => g,
        }
    }
}

/// Surfaces with a genus-indexed generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenusTag {
    K3,
    Abelian,
    Enriques,
}

impl GenusTag {
    /// `g - r`: the genus of the curves counted by `n_r` is `r + shift`.
    pub fn genus_shift(self) -> i64 {
        match self {
            GenusTag::K3 => 0,
            GenusTag::Enriques => 1,
            GenusTag::Abelian => 2,
        }
    }

    pub fn geometry(self, l2: i64) -> SurfaceGeometry {
        match self {
            GenusTag::K3 => SurfaceKind::K3 { l2 },
            GenusTag::Abelian => SurfaceKind::Abelian { l2 },
            GenusTag::Enriques => SurfaceKind::Enriques { l2 },
        }
        .geometry()
    }
}

impl fmt::Display for GenusTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenusTag::K3 => "k3",
            GenusTag::Abelian => "abelian",
            GenusTag::Enriques => "enriques",
        })
    }
}

impl FromStr for GenusTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "k3" => Ok(GenusTag::K3),
            "abelian" => Ok(GenusTag::Abelian),
            "enriques" => Ok(GenusTag::Enriques),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// `sum_l n_r(l) q^l`, where `n_r(l)` counts curves in `|L|`, `L^2 = 2l`,
/// through `r` general points with geometric genus `r + shift`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusCountSeries {
    pub tag: GenusTag,
    pub r: u32,
    pub series: QSeries,
}

impl GenusCountSeries {
    pub fn genus(&self) -> i64 {
        self.r as i64 + self.tag.genus_shift()
    }

    /// `n_r(l)`.
    pub fn count(&self, l: i64) -> Result<Rational> {
        self.series.coeff(l)
    }

    /// `m_g(l)`, the number of genus `g` curves through `g - shift` points;
    /// only defined for the `g` this series was built for.
    pub fn genus_count(&self, g: i64, l: i64) -> Result<Rational> {
        if g != self.genus() {
            return Err(Error::InvalidInput(format!(
                "series for r = {} holds genus {} counts, not genus {g}",
                self.r,
                self.genus()
            )));
        }
        self.count(l)
    }
}

fn dg2_pow(r: u32, p: i64) -> QSeries {
    dg2(p).pow_int(r as i64).expect("nonnegative power")
}

/// `DG2^r / Delta` to precision `p`.
pub fn k3_genus_series(r: u32, p: i64) -> GenusCountSeries {
    let series = dg2_pow(r, p + 2).div_series(&delta(p + 3)).expect("Delta is invertible").truncate(p);
    GenusCountSeries { tag: GenusTag::K3, r, series }
}

/// `DG2^r D^2G2` to precision `p`.
pub fn abelian_genus_series(r: u32, p: i64) -> GenusCountSeries {
    let series = (&dg2_pow(r, p + 2) * &d2g2(p + 2)).truncate(p);
    GenusCountSeries { tag: GenusTag::Abelian, r, series }
}

/// `DG2^r (D^2G2 / Delta)^(1/2)` to precision `p`.
pub fn enriques_genus_series(r: u32, p: i64) -> GenusCountSeries {
    let ratio = d2g2(p + 3).div_series(&delta(p + 3)).expect("Delta is invertible");
    let root = ratio.pow_rational(&rat(1, 2)).expect("unit constant term");
    let series = (&dg2_pow(r, p + 2) * &root).truncate(p);
    GenusCountSeries { tag: GenusTag::Enriques, r, series }
}

pub fn genus_series(tag: GenusTag, r: u32, p: i64) -> GenusCountSeries {
    match tag {
        GenusTag::K3 => k3_genus_series(r, p),
        GenusTag::Abelian => abelian_genus_series(r, p),
        GenusTag::Enriques => enriques_genus_series(r, p),
    }
}

/// Expands `(1/z) D exp(DG2 z)` in `z` and checks that `r!` times the
/// coefficient of `z^r` is `DG2^r D^2G2` modulo `q^p`, for `r <= z_max`.
pub fn abelian_egf_check(p: i64, z_max: u32) -> bool {
    let zdeg = z_max as usize + 1;
    let truncate_z = |c: &Poly1| Poly1::new(c.coeffs().iter().take(zdeg + 1).cloned().collect());
    // DG2 z, as a series with coefficients in Q[z]
    let x = dg2(p).map(|c| Poly1::new(vec![int(0), c.clone()]));
    let mut term = QSeries::<Poly1>::one(p);
    let mut sum = QSeries::<Poly1>::one(p);
    for k in 1..=zdeg as i64 {
        term = (&term * &x).scale(&rat(1, k)).map(truncate_z);
        sum = &sum + &term;
    }
    // D then divide by z: the z^0 part of exp is 1, killed by D
    let lhs = sum.derivative().map(|c| Poly1::new(c.coeffs().iter().skip(1).cloned().collect()));
    let mut factorial = int(1);
    (0..=z_max).all(|r| {
        if r > 0 {
            factorial *= int(r as i64);
        }
        let slice = lhs.map(|c| c.coefficient(r as usize) * &factorial);
        slice == abelian_genus_series(r, p).series
    })
}

/// `n^2 sigma_1(n)`, the number of genus 2 curves in a `(1, n)` polarisation.
pub fn abelian_genus2_count(n: u64) -> BigInt {
    BigInt::from(n) * BigInt::from(n) * sigma(1, n)
}

/// The node polynomial `P_delta(d) = T_delta(d^2, -3d, 9, 3)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NodePolynomial {
    pub delta: usize,
    #[serde(serialize_with = "ser_poly1")]
    pub poly: Poly1,
}

fn ser_poly1<S: serde::Serializer>(p: &Poly1, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(p.coeffs().len()))?;
    for c in p.coeffs() {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

impl NodePolynomial {
    /// `p_mu(delta)`, the coefficient of `d^(2 delta - mu)`.
    pub fn p_mu(&self, mu: usize) -> Rational {
        match (2 * self.delta).checked_sub(mu) {
            Some(k) => self.poly.coefficient(k),
            None => int(0),
        }
    }

    pub fn eval(&self, d: i64) -> Rational {
        self.poly.eval(&int(d))
    }
}

/// `P_0..P_n`, computed by specialising the generating function to the plane
/// with `d` kept as a variable.
pub fn node_polynomials(n: usize, b: &BSeriesPair) -> Result<Vec<NodePolynomial>> {
    let p = (n as i64 + 2).min(b.precision());
    if b.precision() < n as i64 + 1 {
        return Err(Error::InvalidInput(format!(
            "B-series known to q^{} but node polynomials up to {n} were requested",
            b.precision()
        )));
    }
    // chi(L) = (d^2 + 3d)/2 + 1
    let chi_l = Poly1::new(vec![int(1), rat(3, 2), rat(1, 2)]);
    let rhs = conjecture_rhs_with(&chi_l, &Poly1::constant(int(9)), &Poly1::from_integers(&[0, -3]), &Poly1::constant(int(1)), b, p)?;
    let mut polys = rhs.expand_in_base(&dg2(p).lift::<Poly1>())?;
    polys.truncate(n + 1);
    Ok(polys.into_iter().enumerate().map(|(delta, poly)| NodePolynomial { delta, poly }).collect())
}

pub fn node_polynomial(delta: usize, b: &BSeriesPair) -> Result<NodePolynomial> {
    Ok(node_polynomials(delta, b)?.pop().expect("nonempty"))
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// `mu! (delta - [(mu+1)/2])! / 3^(delta - [mu/2]) p_mu(delta)`, which is
/// the value `Q_mu(delta)` of an integer polynomial of degree `[mu/2]`.
pub fn normalized_p_mu(np: &NodePolynomial, mu: usize) -> Rational {
    let k = np.delta.saturating_sub((mu + 1) / 2) as u64;
    let three = BigInt::from(3).pow((np.delta - mu / 2) as u32);
    np.p_mu(mu) * Rational::new(factorial(k) * factorial(mu as u64), three)
}

/// The polynomial `Q_mu` with
/// `p_mu(delta) = 3^(delta - [mu/2]) / ((delta - [(mu+1)/2])! mu!) Q_mu(delta)`,
/// interpolated from `delta = h+1..=2h+1`, `h = [mu/2]`, and checked at `2h+2`.
pub fn qmu_extract(mu: usize, b: &BSeriesPair) -> Result<Poly1> {
    qmu_from_polynomials(mu, &node_polynomials(mu / 2 * 2 + 2, b)?)
}

/// [`qmu_extract`] on precomputed node polynomials `P_0, P_1, ...`.
pub fn qmu_from_polynomials(mu: usize, polys: &[NodePolynomial]) -> Result<Poly1> {
    let h = mu / 2;
    if polys.len() < 2 * h + 3 {
        return Err(Error::InvalidInput(format!("Q_{mu} needs node polynomials up to delta = {}", 2 * h + 2)));
    }
    let sample = |delta: usize| (int(delta as i64), normalized_p_mu(&polys[delta], mu));
    let points: Vec<_> = (h + 1..=2 * h + 1).map(sample).collect();
    let q = Poly1::interpolate(&points)?;
    let (x, y) = sample(2 * h + 2);
    if q.eval(&x) != y || q.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(Error::NonPolynomialResidual { mu, delta: 2 * h + 2 });
    }
    Ok(q)
}

/// Writes an integer polynomial as `2^a 3^b` times a primitive-up-to-sign
/// polynomial with no factor of 2 or 3 left in its content.
pub fn split_two_three(q: &Poly1) -> (i64, u32, u32, Poly1) {
    let content = q.integer_content().unwrap_or_else(|| BigInt::from(1));
    let mut c = content.clone();
    let (mut a, mut b) = (0, 0);
    while !c.is_zero() && c.is_even() {
        c /= 2;
        a += 1;
    }
    while !c.is_zero() && (&c % 3u32).is_zero() {
        c /= 3;
        b += 1;
    }
    let lead = q.coeffs().last().cloned().unwrap_or_else(|| int(0));
    let sign = if lead < int(0) { -1 } else { 1 };
    let unit = Rational::from_integer(BigInt::from(2).pow(a) * BigInt::from(3).pow(b) * sign);
    let rest = Poly1::new(q.coeffs().iter().map(|x| x / &unit).collect());
    (sign, a, b, rest)
}

/// A predicted count `t_delta` on a Hirzebruch surface with its validity flag.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RuledPrediction {
    pub delta: usize,
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    pub valid: bool,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Whether `t_delta` for `nF + mE` on `Sigma_e` is expected to be the
/// actual count.
pub fn ruled_valid(e: i64, n: i64, m: i64, delta: i64) -> bool {
    if (n, m) == (1, 0) {
        return false;
    }
    let bound = if e == 0 { (2 * m).min(2 * n) } else { (2 * m).min(n - e * m) };
    delta <= bound
}

pub fn ruled_predictions(e: i64, n: i64, m: i64, delta_max: usize, b: &BSeriesPair) -> Result<Vec<RuledPrediction>> {
    let geom = SurfaceKind::Ruled { e, n, m }.geometry();
    let t = tdelta_evaluate(&geom, b, delta_max)?;
    Ok(t.into_iter()
        .enumerate()
        .map(|(delta, value)| RuledPrediction { delta, value, valid: ruled_valid(e, n, m, delta as i64) })
        .collect())
}
