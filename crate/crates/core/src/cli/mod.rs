//! The `nodalgen` command line.
//!
//! Every subcommand produces a [`Rendered`] result, written in the requested
//! format to standard output or to `--out`. Exit status is 0 on success, 1 on
//! a computation error or a failed `verify`, and 2 on a usage error.

mod output;
pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modforms::{form, FormName};
use crate::multipoly::{Poly1, Poly4Document};
use crate::qseries::{QSeries, SeriesDocument};
use crate::severi::{severi_degree, severi_table, MemoCache};
use crate::surfaces::{
    genus_series, node_polynomial, parse_kind, qmu_extract, ruled_valid, split_two_three, GenusTag, SurfaceKind,
};
use crate::universal::{
    default_degrees, fit3_verify_c1, fit_bc, tdelta_evaluate, tdelta_universal, BSeriesPair, C1Check, PairResidual,
};

pub use output::{Format, Rendered};
pub use verify::{run_verify, CheckOutcome, Level, VerifyReport};

#[derive(Debug, Parser)]
#[command(name = "nodalgen", version, about = "Exact nodal curve counts, Severi degrees and universal series")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Severi memo cache file, loaded before and saved after the command.
    #[arg(long, env = "NODALGEN_CACHE", global = true)]
    pub cache: Option<PathBuf>,
    /// Log progress to standard error (repeat for more detail).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Plane Severi degrees: one value with --d/--delta, a table with --d-max/--delta-max.
    Severi {
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        delta: Option<u32>,
        #[arg(long)]
        d_max: Option<u32>,
        #[arg(long)]
        delta_max: Option<u32>,
    },
    /// Fit B1, B2 from plane Severi degrees.
    Fit {
        #[arg(long)]
        max_delta: usize,
        /// Comma-separated degrees; defaults to the smallest admissible pair.
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
        /// Also fit C1 from every admissible triple of degrees.
        #[arg(long)]
        three_degree_check: bool,
    },
    /// Universal polynomials T_0..T_N, or their values for --geometry L2,LK,K2,c2.
    Universal {
        #[arg(long)]
        max_delta: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        geometry: Option<Vec<i64>>,
    },
    /// Generating series on a named surface.
    ///
    /// For k3, abelian and enriques this is the genus-indexed series to
    /// precision q^order; for p2, ruled and custom it is t_0..t_order for the
    /// line bundle given by --params.
    Surface {
        #[arg(long)]
        kind: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<i64>,
        #[arg(long, default_value_t = 0)]
        r: u32,
        #[arg(long)]
        order: i64,
        /// Print only this coefficient.
        #[arg(long, allow_hyphen_values = true)]
        coeff: Option<i64>,
    },
    /// The plane node polynomial P_delta(d).
    Nodepoly {
        #[arg(long)]
        delta: usize,
    },
    /// The polynomial Q_mu describing the coefficient of d^(2 delta - mu).
    Qmu {
        #[arg(long)]
        mu: usize,
    },
    /// q-expansion of G2, G4, G6, Delta, DG2 or D2G2.
    Form {
        #[arg(long)]
        name: FormName,
        #[arg(long)]
        order: i64,
    },
    /// Run the reproduction checks.
    Verify {
        #[arg(value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
    /// Inspect, fill or clear the Severi memo cache given by --cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Clone, Debug, Subcommand)]
pub enum CacheAction {
    Info,
    Warm {
        #[arg(long)]
        d_max: u32,
        #[arg(long)]
        delta_max: u32,
    },
    Clear,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Severi { .. } => "severi",
            Command::Fit { .. } => "fit",
            Command::Universal { .. } => "universal",
            Command::Surface { .. } => "surface",
            Command::Nodepoly { .. } => "nodepoly",
            Command::Qmu { .. } => "qmu",
            Command::Form { .. } => "form",
            Command::Verify { .. } => "verify",
            Command::Cache { .. } => "cache",
        }
    }
}

/// A fully parsed and validated invocation.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub command: Command,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache: Option<PathBuf>,
    pub verbosity: u8,
}

impl JobConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let job = JobConfig {
            command: cli.command,
            format: cli.global.format,
            out: cli.global.out,
            cache: cli.global.cache,
            verbosity: cli.global.verbose,
        };
        job.validate()?;
        Ok(job)
    }

    fn validate(&self) -> Result<()> {
        let usage = |m: String| Err(Error::InvalidInput(m));
        match &self.command {
            Command::Severi { d, delta, d_max, delta_max } => match (d, delta, d_max, delta_max) {
                (Some(_), Some(_), None, None) | (None, None, Some(_), Some(_)) => Ok(()),
                _ => usage("severi needs either --d and --delta or --d-max and --delta-max".into()),
            },
            Command::Fit { max_delta, degrees, three_degree_check } => {
                let need = if *three_degree_check { 3 } else { 2 };
                if degrees.is_empty() && !three_degree_check {
                    return Ok(());
                }
                for delta in 0..=*max_delta {
                    let n = degrees.iter().filter(|&&d| delta + 2 <= 2 * d as usize).count();
                    if n < need {
                        return usage(format!(
                            "degrees {degrees:?} leave fewer than {need} admissible degrees (delta <= 2d - 2) at delta = {delta}"
                        ));
                    }
                }
                Ok(())
            }
            Command::Universal { geometry: Some(g), .. } if g.len() != 4 => {
                usage("--geometry takes four integers L2,LK,K2,c2".into())
            }
            Command::Surface { kind, params, order, .. } => {
                if *order < 0 {
                    return usage("--order must be nonnegative".into());
                }
                if kind.parse::<GenusTag>().is_ok() {
                    if !params.is_empty() {
                        return usage(format!("surface kind `{kind}` takes no --params"));
                    }
                    Ok(())
                } else {
                    parse_kind(kind, params).map(|_| ())
                }
            }
            Command::Form { order, .. } if *order < 0 => usage("--order must be nonnegative".into()),
            Command::Cache { .. } if self.cache.is_none() => {
                usage("cache needs --cache or NODALGEN_CACHE".into())
            }
            _ => Ok(()),
        }
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    init_logging(cli.global.verbose);
    let job = match JobConfig::from_cli(cli) {
        Ok(job) => job,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match run_job(&job) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn init_logging(verbosity: u8) {
    let level = match verbosity {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    let _ = env_logger::Builder::new().filter_level(level).format_timestamp(None).try_init();
}

/// Runs a validated job, writing its output. Returns whether it succeeded
/// (only `verify` can complete with a failure).
pub fn run_job(job: &JobConfig) -> Result<bool> {
    let cache = match &job.cache {
        Some(path) if path.exists() && !matches!(job.command, Command::Cache { action: CacheAction::Clear }) => {
            MemoCache::load(path)?
        }
        _ => MemoCache::new(),
    };
    let loaded = cache.len();
    let (rendered, ok) = execute(job, &cache)?;
    if let Some(path) = &job.cache {
        let cleared = matches!(job.command, Command::Cache { action: CacheAction::Clear });
        if cleared || cache.len() != loaded || !path.exists() {
            cache.save(path)?;
        }
    }
    let text = rendered.render(job.format)?;
    match &job.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(ok)
}

/// B1, B2 fitted to `q^order` with the default degrees.
pub fn fitted_b(order: usize, cache: &MemoCache) -> Result<BSeriesPair> {
    let degrees = default_degrees(order);
    let table = crate::severi::severi_table_for(&degrees, order as u32, cache);
    Ok(fit_bc(&table, order, &degrees)?.b)
}

/// Computes a job's output without writing it.
pub fn execute(job: &JobConfig, cache: &MemoCache) -> Result<(Rendered, bool)> {
    let r = match &job.command {
        Command::Severi { d: Some(d), delta: Some(delta), .. } => severi_value(*d, *delta, cache)?,
        Command::Severi { d_max: Some(d), delta_max: Some(delta), .. } => severi_rows(*d, *delta, cache)?,
        Command::Severi { .. } => unreachable!("validated"),
        Command::Fit { max_delta, degrees, three_degree_check } => {
            let degrees = if degrees.is_empty() { default_degrees(*max_delta) } else { degrees.clone() };
            fit_command(*max_delta, &degrees, *three_degree_check, cache)?
        }
        Command::Universal { max_delta, geometry } => universal_command(*max_delta, geometry.as_deref(), cache)?,
        Command::Surface { kind, params, r, order, coeff } => surface_command(kind, params, *r, *order, *coeff, cache)?,
        Command::Nodepoly { delta } => nodepoly_command(*delta, cache)?,
        Command::Qmu { mu } => qmu_command(*mu, cache)?,
        Command::Form { name, order } => form_command(*name, *order)?,
        Command::Verify { level } => {
            let report = run_verify(*level, cache);
            let ok = report.passed;
            return Ok((report.rendered()?, ok));
        }
        Command::Cache { action } => cache_command(action, job.cache.as_ref().expect("validated"), cache)?,
    };
    Ok((r, true))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeveriValueDocument {
    pub d: u32,
    pub delta: u32,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeveriTableDocument {
    pub d_max: u32,
    pub delta_max: u32,
    /// `rows[d - 1][delta]`.
    pub rows: Vec<Vec<String>>,
}

fn severi_value(d: u32, delta: u32, cache: &MemoCache) -> Result<Rendered> {
    let value = severi_degree(d, delta, cache).to_string();
    let doc = SeveriValueDocument { d, delta, value: value.clone() };
    let csv = vec![output::row(["d", "delta", "value"]), output::row([d.to_string(), delta.to_string(), value.clone()])];
    Rendered::new(value, &doc, csv)
}

fn severi_rows(d_max: u32, delta_max: u32, cache: &MemoCache) -> Result<Rendered> {
    let table = severi_table(d_max, delta_max, cache);
    let rows: Vec<Vec<String>> =
        (1..=d_max).map(|d| table.row(d).iter().map(|n| n.to_string()).collect()).collect();
    let text = rows.iter().enumerate().map(|(i, r)| format!("d={}: {}", i + 1, r.join(" "))).collect::<Vec<_>>();
    let mut csv = vec![output::row(["d", "delta", "value"])];
    for (i, r) in rows.iter().enumerate() {
        for (delta, v) in r.iter().enumerate() {
            csv.push(output::row([(i + 1).to_string(), delta.to_string(), v.clone()]));
        }
    }
    Rendered::new(text.join("\n"), &SeveriTableDocument { d_max, delta_max, rows }, csv)
}

/// The result of `fit`: B1, B2, the fitted coefficients of `C1..C3` in
/// powers of `x = DG2`, and every pair solution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitDocument {
    pub max_delta: usize,
    pub degrees: Vec<u32>,
    pub b1: SeriesDocument,
    pub b2: SeriesDocument,
    pub c1: Vec<String>,
    pub c2: Vec<String>,
    pub c3: Vec<String>,
    pub consistent: bool,
    pub pairs: Vec<PairDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1_checks: Option<Vec<C1CheckDocument>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDocument {
    pub delta: usize,
    pub d1: u32,
    pub d2: u32,
    pub c2: String,
    pub c3: String,
    pub residual_c2: String,
    pub residual_c3: String,
}

impl From<&PairResidual> for PairDocument {
    fn from(p: &PairResidual) -> Self {
        PairDocument {
            delta: p.delta,
            d1: p.d1,
            d2: p.d2,
            c2: p.c2.to_string(),
            c3: p.c3.to_string(),
            residual_c2: p.residual_c2.to_string(),
            residual_c3: p.residual_c3.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C1CheckDocument {
    pub delta: usize,
    pub degrees: [u32; 3],
    pub fitted: String,
    pub expected: String,
    pub matches: bool,
}

impl From<&C1Check> for C1CheckDocument {
    fn from(c: &C1Check) -> Self {
        C1CheckDocument {
            delta: c.delta,
            degrees: c.degrees,
            fitted: c.fitted.to_string(),
            expected: c.expected.to_string(),
            matches: c.matches(),
        }
    }
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn fit_command(n: usize, degrees: &[u32], three: bool, cache: &MemoCache) -> Result<Rendered> {
    let table = crate::severi::severi_table_for(degrees, n as u32, cache);
    let fit = fit_bc(&table, n, degrees)?;
    let checks = if three { Some(fit3_verify_c1(&table, n, degrees)?) } else { None };
    let doc = FitDocument {
        max_delta: n,
        degrees: fit.degrees.clone(),
        b1: fit.b.b1.to_document(),
        b2: fit.b.b2.to_document(),
        c1: strings(&fit.c1),
        c2: strings(&fit.c2),
        c3: strings(&fit.c3),
        consistent: fit.is_consistent(),
        pairs: fit.report.iter().map(PairDocument::from).collect(),
        c1_checks: checks.as_ref().map(|c| c.iter().map(C1CheckDocument::from).collect()),
    };
    let mut text = vec![
        format!(
            "degrees {}: {} pair solutions, all residuals zero",
            strings(&fit.degrees).join(","),
            fit.report.len()
        ),
        format!("B1 = {}", fit.b.b1),
        format!("B2 = {}", fit.b.b2),
    ];
    if let Some(c) = &checks {
        let good = c.iter().filter(|c| c.matches()).count();
        text.push(format!("C1 from triples: {good} of {} match", c.len()));
    }
    let mut csv = vec![output::row(["n", "b1", "b2", "c1", "c2", "c3"])];
    for k in 0..=n {
        csv.push(vec![
            k.to_string(),
            doc.b1.coefficients[k].clone(),
            doc.b2.coefficients[k].clone(),
            doc.c1[k].clone(),
            doc.c2[k].clone(),
            doc.c3[k].clone(),
        ]);
    }
    Rendered::new(text.join("\n"), &doc, csv)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalDocument {
    pub max_delta: usize,
    pub polynomials: Vec<Poly4Document>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionDocument {
    pub geometry: [i64; 4],
    pub values: Vec<PredictionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionEntry {
    pub delta: usize,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
}

fn universal_command(n: usize, geometry: Option<&[i64]>, cache: &MemoCache) -> Result<Rendered> {
    let b = fitted_b(n, cache)?;
    if let Some(g) = geometry {
        let geom = crate::universal::SurfaceGeometry::new(g[0], g[1], g[2], g[3]);
        let t = tdelta_evaluate(&geom, &b, n)?;
        let entries = t.iter().enumerate().map(|(delta, v)| (delta, v.to_string(), None)).collect();
        return predictions([g[0], g[1], g[2], g[3]], entries);
    }
    let table = tdelta_universal(&b, n)?;
    let text: Vec<String> = table.polys.iter().enumerate().map(|(d, p)| format!("T_{d} = {p}")).collect();
    let mut csv = vec![output::row(["delta", "x", "y", "z", "t", "coefficient"])];
    for (delta, p) in table.polys.iter().enumerate() {
        for (e, c) in p.graded_terms() {
            csv.push(vec![
                delta.to_string(),
                e[0].to_string(),
                e[1].to_string(),
                e[2].to_string(),
                e[3].to_string(),
                c.to_string(),
            ]);
        }
    }
    let doc = UniversalDocument { max_delta: n, polynomials: table.polys.iter().map(|p| p.to_document()).collect() };
    Rendered::new(text.join("\n"), &doc, csv)
}

fn predictions(geometry: [i64; 4], entries: Vec<(usize, String, Option<bool>)>) -> Result<Rendered> {
    let values: Vec<PredictionEntry> =
        entries.into_iter().map(|(delta, value, valid)| PredictionEntry { delta, value, valid }).collect();
    let flag = |v: Option<bool>| match v {
        Some(true) => "",
        Some(false) => "  (outside validity range)",
        None => "",
    };
    let text: Vec<String> = values.iter().map(|e| format!("t_{} = {}{}", e.delta, e.value, flag(e.valid))).collect();
    let mut csv = vec![output::row(["delta", "value", "valid"])];
    for e in &values {
        csv.push(vec![e.delta.to_string(), e.value.clone(), e.valid.map(|v| v.to_string()).unwrap_or_default()]);
    }
    Rendered::new(text.join("\n"), &PredictionDocument { geometry, values }, csv)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusSeriesDocument {
    pub kind: String,
    pub r: u32,
    pub genus: i64,
    pub series: SeriesDocument,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientDocument {
    pub kind: String,
    pub r: u32,
    pub l: i64,
    pub value: String,
}

fn surface_command(
    kind: &str,
    params: &[i64],
    r: u32,
    order: i64,
    coeff: Option<i64>,
    cache: &MemoCache,
) -> Result<Rendered> {
    if let Ok(tag) = kind.parse::<GenusTag>() {
        let s = genus_series(tag, r, order);
        if let Some(l) = coeff {
            let value = s.count(l)?.to_string();
            let csv = vec![output::row(["l", "value"]), output::row([l.to_string(), value.clone()])];
            let doc = CoefficientDocument { kind: tag.to_string(), r, l, value: value.clone() };
            return Rendered::new(value, &doc, csv);
        }
        let mut csv = vec![output::row(["l", "value"])];
        for (i, c) in s.series.coefficients().iter().enumerate() {
            csv.push(vec![(s.series.valuation() + i as i64).to_string(), c.to_string()]);
        }
        let doc = GenusSeriesDocument { kind: tag.to_string(), r, genus: s.genus(), series: s.series.to_document() };
        return Rendered::new(s.series.to_string(), &doc, csv);
    }
    let k = parse_kind(kind, params)?;
    let n = order as usize;
    let b = fitted_b(n, cache)?;
    let geom = k.geometry();
    let t = tdelta_evaluate(&geom, &b, n)?;
    let valid = |delta: usize| match k {
        SurfaceKind::P2 { d } => Some(delta as i64 <= 2 * d - 2),
        SurfaceKind::Ruled { e, n, m } => Some(ruled_valid(e, n, m, delta as i64)),
        _ => None,
    };
    if let Some(delta) = coeff {
        let value = t
            .get(delta as usize)
            .ok_or_else(|| Error::InvalidInput(format!("--coeff {delta} exceeds --order {order}")))?
            .to_string();
        let csv = vec![output::row(["delta", "value"]), output::row([delta.to_string(), value.clone()])];
        let doc = CoefficientDocument { kind: kind.to_ascii_lowercase(), r, l: delta, value: value.clone() };
        return Rendered::new(value, &doc, csv);
    }
    let entries = t.iter().enumerate().map(|(d, v)| (d, v.to_string(), valid(d))).collect();
    predictions([geom.l2, geom.lk, geom.k2, geom.c2], entries)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDocument {
    pub variable: String,
    /// Coefficients from the constant term upwards.
    pub coefficients: Vec<String>,
}

impl PolynomialDocument {
    pub fn new(p: &Poly1, variable: &str) -> Self {
        PolynomialDocument { variable: variable.to_string(), coefficients: strings(p.coeffs()) }
    }

    pub fn to_poly(&self) -> Result<Poly1> {
        let c = self.coefficients.iter().map(|s| crate::qseries::parse_rational(s)).collect::<Result<_>>()?;
        Ok(Poly1::new(c))
    }
}

fn poly_csv(p: &Poly1) -> Vec<Vec<String>> {
    let mut csv = vec![output::row(["power", "coefficient"])];
    csv.extend(p.coeffs().iter().enumerate().map(|(i, c)| vec![i.to_string(), c.to_string()]));
    csv
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodePolynomialDocument {
    pub delta: usize,
    pub polynomial: PolynomialDocument,
}

fn nodepoly_command(delta: usize, cache: &MemoCache) -> Result<Rendered> {
    let b = fitted_b(delta, cache)?;
    let p = node_polynomial(delta, &b)?;
    let doc = NodePolynomialDocument { delta, polynomial: PolynomialDocument::new(&p.poly, "d") };
    Rendered::new(format!("P_{delta}(d) = {}", p.poly.display_in("d")), &doc, poly_csv(&p.poly))
}

/// `Q_mu = sign 2^a 3^b primitive`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QmuDocument {
    pub mu: usize,
    pub polynomial: PolynomialDocument,
    pub sign: i64,
    pub power_of_two: u32,
    pub power_of_three: u32,
    pub primitive: PolynomialDocument,
}

fn qmu_command(mu: usize, cache: &MemoCache) -> Result<Rendered> {
    let b = fitted_b(mu / 2 * 2 + 2, cache)?;
    let q = qmu_extract(mu, &b)?;
    let (sign, a, c, rest) = split_two_three(&q);
    let mut prefix = String::from(if sign < 0 { "-" } else { "" });
    if a > 0 {
        prefix.push_str(&format!("2^{a} "));
    }
    if c > 0 {
        prefix.push_str(&format!("3^{c} "));
    }
    let text = format!("Q_{mu}(delta) = {prefix}({})", rest.display_in("delta"));
    let doc = QmuDocument {
        mu,
        polynomial: PolynomialDocument::new(&q, "delta"),
        sign,
        power_of_two: a,
        power_of_three: c,
        primitive: PolynomialDocument::new(&rest, "delta"),
    };
    Rendered::new(text, &doc, poly_csv(&q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDocument {
    pub name: String,
    pub series: SeriesDocument,
}

fn form_command(name: FormName, order: i64) -> Result<Rendered> {
    let s: QSeries = form(name, order);
    let mut csv = vec![output::row(["power", "coefficient"])];
    for (i, c) in s.coefficients().iter().enumerate() {
        csv.push(vec![(s.valuation() + i as i64).to_string(), c.to_string()]);
    }
    let doc = FormDocument { name: name.to_string(), series: s.to_document() };
    Rendered::new(format!("{name} = {s}"), &doc, csv)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheDocument {
    pub path: String,
    pub entries: usize,
}

fn cache_command(action: &CacheAction, path: &std::path::Path, cache: &MemoCache) -> Result<Rendered> {
    if let CacheAction::Warm { d_max, delta_max } = action {
        severi_table(*d_max, *delta_max, cache);
    }
    let doc = CacheDocument { path: path.display().to_string(), entries: cache.len() };
    let text = format!("{}: {} entries", doc.path, doc.entries);
    let csv = vec![output::row(["path", "entries"]), output::row([doc.path.clone(), doc.entries.to_string()])];
    Rendered::new(text, &doc, csv)
}
