use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fraczeta::cardinality::{
    axiom_suite, catalog, catalog_entry, compare, compare_extended, conservation_report,
    table1_rows, table1_text, table2_rows, table2_text,
};
use fraczeta::dimension::{
    aligned_scales, box_dimension_fit, multifractal_spectrum, q_range, similarity_dimension,
    write_samples_csv, DEFAULT_DIFF_STEP,
};
use fraczeta::exact::{
    build_stage, make_named_spec, make_zf_spec, AffineMap, GeneralIfsSpec, GridSpec,
    DEFAULT_ENUMERATION_CAP,
};
use fraczeta::rational::parse_rational;
use fraczeta::stochastic::{run_trials, RetentionConfig};
use fraczeta::zeros::{
    bundled_zeros, digit_stats, digitize, parse_zero_file, reorder, reorder_by_weights,
    DigitSequence, ReorderMode, ZeroTable, DEFAULT_BOUNDARY_TOL,
};
use fraczeta::zeta::{
    functional_equation_residual, zeta_euler_maclaurin, ZetaParams, DEFAULT_PRECISION_DIGITS,
};
use fraczeta::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::output::{io_error, RunManifest, Sink};

pub const PRECISION_ENV: &str = "FRACZETA_PRECISION";

#[derive(Parser, Debug)]
#[command(
    name = "fraczeta",
    version,
    about = "Digit-restricted fractals, zeta values and informational cardinality"
)]
pub struct Cli {
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Export the exact intervals of a construction stage.
    Construct(ConstructArgs),
    /// Similarity or box-counting dimension of a construction.
    Dimension(DimensionArgs),
    /// Riemann zeta at a real argument by Euler-Maclaurin summation.
    Zeta(ZetaArgs),
    /// Zero-table digitization, statistics and reordering.
    #[command(subcommand)]
    Zeros(ZerosCommand),
    /// Compare the informational cardinalities of two catalog entries.
    Compare(CompareArgs),
    /// Reproduce the catalog tables.
    Catalog(CatalogArgs),
    /// The iota(P_ess) + iota(Z_F) report.
    Conservation(ConservationArgs),
    /// Assertable axiom checks over the catalog.
    Axioms(AxiomArgs),
    /// Monte Carlo for probabilistic retention.
    Perturb(PerturbArgs),
    /// Multifractal spectrum of a weighted similarity system.
    Multifractal(MultifractalArgs),
}

#[derive(Subcommand, Debug)]
enum ZerosCommand {
    /// Base-4 digits a_n = floor(4 frac(gamma_n / 2 pi)).
    Digitize(ZeroCmdArgs),
    /// Chi-square uniformity test of the digits.
    Stats(ZeroCmdArgs),
    /// Reordered zero table.
    Reorder(ZeroCmdArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Order {
    Standard,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Similarity,
    Boxcount,
}

/// Options shared by everything that reads zeta zeros.
#[derive(Args, Debug, Serialize)]
struct ZeroOpts {
    /// Ordering applied before digitization.
    #[arg(long, value_enum, default_value = "standard")]
    order: Order,
    /// Seed for random ordering.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sidecar of `index weight` lines; orders by ascending weight.
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Use only the first COUNT zeros.
    #[arg(long)]
    count: Option<usize>,
    /// Decimal digits of pi used in digitization (40..=100).
    #[arg(long)]
    precision: Option<u32>,
    /// Boundary flag tolerance on 4 t.
    #[arg(long, default_value_t = DEFAULT_BOUNDARY_TOL)]
    tol: f64,
}

/// A named set, a zero-driven set, or a residue construction.
#[derive(Args, Debug, Serialize)]
struct SetArgs {
    /// One of pess, cantor13, classic-cantor, mod6, mod8.
    name: Option<String>,
    /// Zero table for Z_F (`bundled` for the first 100 zeros).
    #[arg(long, conflicts_with = "name")]
    zeros: Option<String>,
    /// Base of a residue construction.
    #[arg(long, conflicts_with_all = ["name", "zeros"], requires = "keep")]
    modq: Option<u32>,
    /// Retained residues, comma separated.
    #[arg(long, value_delimiter = ',', requires = "modq")]
    keep: Vec<u32>,
    #[command(flatten)]
    zero_opts: ZeroOpts,
}

#[derive(Args, Debug, Serialize)]
struct ConstructArgs {
    #[command(flatten)]
    set: SetArgs,
    #[arg(long)]
    depth: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Largest number of intervals to enumerate.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
}

#[derive(Args, Debug, Serialize)]
struct DimensionArgs {
    #[command(flatten)]
    set: SetArgs,
    #[arg(long, value_enum, default_value = "similarity")]
    method: Method,
    /// Stage depth for box counting.
    #[arg(long, default_value_t = 10)]
    depth: usize,
    /// Box sizes as rationals or decimals; defaults to base^-1 .. base^-depth.
    #[arg(long, value_delimiter = ',')]
    scales: Vec<String>,
    /// Also write the (epsilon, count) samples as CSV.
    #[arg(long)]
    samples_csv: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct ZetaArgs {
    /// Real argument, decimal or p/q.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    /// Cutoff N.
    #[arg(long, default_value_t = 10_000)]
    terms: u64,
    /// Number of Bernoulli corrections K.
    #[arg(long, default_value_t = 10)]
    k: u32,
    /// Working precision in decimal digits.
    #[arg(long)]
    digits: Option<u32>,
    /// Also check the functional equation (needs 0 < s < 1).
    #[arg(long)]
    functional: bool,
}

#[derive(Args, Debug, Serialize)]
struct ZeroCmdArgs {
    /// Zero table; the bundled first 100 zeros when omitted.
    #[arg(long)]
    file: Option<PathBuf>,
    #[command(flatten)]
    opts: ZeroOpts,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// Zeta parameters for commands that evaluate iota.
#[derive(Args, Debug, Serialize)]
struct IotaArgs {
    #[arg(long, default_value_t = 10_000)]
    terms: u64,
    #[arg(long, default_value_t = 10)]
    k: u32,
    #[arg(long)]
    digits: Option<u32>,
}

#[derive(Args, Debug, Serialize)]
struct CompareArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    /// Componentwise comparison over dimension vectors.
    #[arg(long)]
    extended: bool,
    #[command(flatten)]
    zeta: IotaArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
enum Table {
    #[value(name = "1")]
    #[serde(rename = "1")]
    One,
    #[value(name = "2")]
    #[serde(rename = "2")]
    Two,
    #[value(name = "all")]
    #[serde(rename = "all")]
    All,
}

#[derive(Args, Debug, Serialize)]
struct CatalogArgs {
    #[arg(long, value_enum, default_value = "1")]
    table: Table,
    #[command(flatten)]
    zeta: IotaArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug, Serialize)]
struct ConservationArgs {
    #[command(flatten)]
    zeta: IotaArgs,
    /// Zero table for the digit-statistics section (`bundled` by default).
    #[arg(long, default_value = "bundled")]
    zeros: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug, Serialize)]
struct AxiomArgs {
    #[command(flatten)]
    zeta: IotaArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug, Serialize)]
struct PerturbArgs {
    /// Common retention probability for positions 1 and 3.
    #[arg(long, conflicts_with_all = ["p1", "p3"])]
    p: Option<f64>,
    #[arg(long, requires = "p3")]
    p1: Option<f64>,
    #[arg(long, requires = "p1")]
    p3: Option<f64>,
    #[arg(long, default_value_t = 12)]
    depth: usize,
    #[arg(long, default_value_t = 500)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write per-trial outcomes as CSV.
    #[arg(long)]
    trials_csv: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct MultifractalArgs {
    /// Named grid set with equal weights.
    #[arg(long, conflicts_with_all = ["ratios", "weights"])]
    set: Option<String>,
    #[arg(long, value_delimiter = ',', requires = "weights")]
    ratios: Vec<String>,
    #[arg(long, value_delimiter = ',', requires = "ratios")]
    weights: Vec<String>,
    /// `from:to:step`.
    #[arg(long, default_value = "-5:5:0.5", allow_hyphen_values = true)]
    q_range: String,
    #[arg(long, default_value_t = DEFAULT_DIFF_STEP)]
    step: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

/// Flag, then `FRACZETA_PRECISION`, then the library default.
fn precision(flag: Option<u32>) -> Result<u32> {
    if let Some(d) = flag {
        return Ok(d);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| input(format!("{PRECISION_ENV}={v} is not a digit count"))),
        Err(_) => Ok(DEFAULT_PRECISION_DIGITS),
    }
}

fn zeta_params(a: &IotaArgs) -> Result<ZetaParams> {
    Ok(ZetaParams::new(a.terms, a.k, precision(a.digits)?))
}

fn rational(text: &str) -> Result<BigRational> {
    parse_rational(text).ok_or_else(|| input(format!("cannot parse `{text}` as a number")))
}

fn load_table(source: Option<&str>, opts: &ZeroOpts) -> Result<ZeroTable> {
    let table = match source {
        None | Some("bundled") => bundled_zeros(),
        Some(p) => parse_zero_file(p)?,
    };
    for w in &table.warnings {
        eprintln!("warning: {w}");
    }
    let table = match (&opts.weights, opts.order) {
        (Some(w), _) => reorder_by_weights(&table, w)?,
        (None, Order::Standard) => reorder(&table, ReorderMode::Standard, opts.seed),
        (None, Order::Random) => reorder(&table, ReorderMode::Random, opts.seed),
    };
    Ok(match opts.count {
        Some(n) => table.truncate(n),
        None => table,
    })
}

fn digits_of(source: Option<&str>, opts: &ZeroOpts) -> Result<DigitSequence> {
    let table = load_table(source, opts)?;
    digitize(&table, precision(opts.precision)?, opts.tol)
}

fn resolve_set(set: &SetArgs) -> Result<GridSpec> {
    if let Some(q) = set.modq {
        let keep: Vec<String> = set.keep.iter().map(u32::to_string).collect();
        return GridSpec::constant(q, &set.keep, format!("mod{q}-keep-{}", keep.join("-")));
    }
    if let Some(z) = &set.zeros {
        return make_zf_spec(&digits_of(Some(z), &set.zero_opts)?);
    }
    match &set.name {
        Some(name) => make_named_spec(name),
        None => Err(input(
            "give a set name, --zeros FILE, or --modq Q --keep LIST",
        )),
    }
}

fn seed_of(set: &SetArgs) -> Option<u64> {
    (set.zeros.is_some() && matches!(set.zero_opts.order, Order::Random))
        .then_some(set.zero_opts.seed)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).map_err(|e| io_error(path, e))?,
    ))
}

pub fn run(cli: Cli) -> Result<()> {
    let out = cli.out;
    let sink = |command: &str, params: Value, seed: Option<u64>, digits: u32| Sink {
        manifest: RunManifest::new(command, params, seed, digits),
        path: out.clone(),
    };
    match cli.command {
        Command::Construct(a) => {
            let spec = resolve_set(&a.set)?;
            let stage = build_stage(&spec, a.depth)?;
            stage.check_cap(a.cap)?;
            let s = sink(
                "construct",
                serde_json::to_value(&a)?,
                seed_of(&a.set),
                precision(a.set.zero_opts.precision)?,
            );
            match a.format {
                Format::Csv => s.csv(|w| stage.write_csv(w, a.cap)),
                _ => s.json(&stage.to_export(a.cap)?),
            }
        }
        Command::Dimension(a) => {
            let spec = resolve_set(&a.set)?;
            let estimate = match a.method {
                Method::Similarity => similarity_dimension(&spec.ratios()?)?,
                Method::Boxcount => {
                    let stage = build_stage(&spec, a.depth)?;
                    let scales = if a.scales.is_empty() {
                        aligned_scales(spec.base(), a.depth)
                    } else {
                        a.scales
                            .iter()
                            .map(|t| rational(t))
                            .collect::<Result<Vec<_>>>()?
                    };
                    box_dimension_fit(&stage, &scales)?
                }
            };
            if let Some(p) = &a.samples_csv {
                write_samples_csv(&estimate.sample_points, create(p)?)?;
            }
            sink(
                "dimension",
                serde_json::to_value(&a)?,
                seed_of(&a.set),
                precision(a.set.zero_opts.precision)?,
            )
            .json(&estimate)
        }
        Command::Zeta(a) => {
            let digits = precision(a.digits)?;
            let params = ZetaParams::new(a.terms, a.k, digits);
            let s_value = rational(&a.s)?;
            let value = zeta_euler_maclaurin(&s_value, params)?;
            let s = sink("zeta", serde_json::to_value(&a)?, None, digits);
            if a.functional {
                let check = functional_equation_residual(&s_value, params)?;
                s.json(&serde_json::json!({ "zeta": value, "functional_equation": check }))
            } else {
                s.json(&value)
            }
        }
        Command::Zeros(cmd) => run_zeros(cmd, &sink),
        Command::Compare(a) => {
            let params = zeta_params(&a.zeta)?;
            let left = catalog_entry(&a.a, params)?;
            let right = catalog_entry(&a.b, params)?;
            let s = sink(
                "compare",
                serde_json::to_value(&a)?,
                None,
                params.precision_digits,
            );
            if a.extended {
                let d = compare_extended(&left.cardinality, &right.cardinality)?;
                return match a.format {
                    Format::Json => s.json(&serde_json::json!({
                        "a": left, "b": right, "outcome": d,
                    })),
                    _ => s.text(&format!(
                        "I({}) = {}\nI({}) = {}\n{d}\n",
                        left.name, left.cardinality, right.name, right.cardinality
                    )),
                };
            }
            let r = compare(&left.cardinality, &right.cardinality);
            match a.format {
                Format::Json => {
                    s.json(&serde_json::json!({ "a": left, "b": right, "comparison": r }))
                }
                _ => {
                    let mut text = format!(
                        "I({}) = {}\nI({}) = {}\n",
                        left.name, left.cardinality, right.name, right.cardinality
                    );
                    for step in &r.trace {
                        text.push_str(&format!(
                            "{}: {} vs {} -> {} ({})\n",
                            step.component,
                            step.left,
                            step.right,
                            step.outcome,
                            serde_json::to_value(step.method)?.as_str().unwrap_or("")
                        ));
                    }
                    text.push_str(&format!("{}\n", r.outcome));
                    s.text(&text)
                }
            }
        }
        Command::Catalog(a) => {
            let params = zeta_params(&a.zeta)?;
            let cat = catalog(params)?;
            let s = sink(
                "catalog",
                serde_json::to_value(&a)?,
                None,
                params.precision_digits,
            );
            match a.format {
                Format::Json => match a.table {
                    Table::One => s.json(&serde_json::json!({
                        "rows": table1_rows(&cat), "entries": cat,
                    })),
                    Table::Two => s.json(&table2_rows(&cat)?),
                    Table::All => s.json(&serde_json::json!({
                        "table1": table1_rows(&cat), "table2": table2_rows(&cat)?, "entries": cat,
                    })),
                },
                _ => {
                    let text = match a.table {
                        Table::One => table1_text(&cat),
                        Table::Two => table2_text(&cat)?,
                        Table::All => format!("{}\n{}", table1_text(&cat), table2_text(&cat)?),
                    };
                    s.text(&text)
                }
            }
        }
        Command::Conservation(a) => {
            let params = zeta_params(&a.zeta)?;
            let digits = digits_of(Some(&a.zeros), &default_zero_opts())?;
            let report = conservation_report(params)?.with_digit_stats(digit_stats(&digits)?);
            let s = sink(
                "conservation",
                serde_json::to_value(&a)?,
                None,
                params.precision_digits,
            );
            match a.format {
                Format::Json => s.json(&report),
                _ => {
                    let mut text = format!(
                        "zeta(1/2)        = {}\niota(P_ess)      = {}\niota(Z_F)        = {}\nsum              = {}\nsum is exactly 0 = {}\n\n{}\n",
                        report.zeta_half, report.iota_pess, report.iota_zf, report.sum, report.sum_is_zero, report.caveat
                    );
                    if let Some(st) = &report.digit_stats {
                        text.push_str(&format!(
                            "\ndigit statistics over {} zero-derived digits: counts {:?}, chi-square {:.4} (df {}, 5% critical {}), uniformity {}\n",
                            st.n,
                            st.counts,
                            st.chi_square,
                            st.df,
                            st.critical_value,
                            if st.reject_at_05 { "rejected" } else { "not rejected" }
                        ));
                    }
                    s.text(&text)
                }
            }
        }
        Command::Axioms(a) => {
            let params = zeta_params(&a.zeta)?;
            let report = axiom_suite(params)?;
            let s = sink(
                "axioms",
                serde_json::to_value(&a)?,
                None,
                params.precision_digits,
            );
            match a.format {
                Format::Json => s.json(&report),
                _ => {
                    let mut text = String::new();
                    for c in &report.checks {
                        let status = serde_json::to_value(c.status)?;
                        text.push_str(&format!(
                            "{} [{}] {}: {}\n",
                            c.axiom,
                            status.as_str().unwrap_or(""),
                            c.statement,
                            c.detail
                        ));
                    }
                    s.text(&text)
                }
            }
        }
        Command::Perturb(a) => {
            let config = match (a.p, a.p1, a.p3) {
                (Some(p), _, _) => RetentionConfig::uniform(p, a.depth, a.trials, a.seed),
                (None, Some(p1), Some(p3)) => {
                    RetentionConfig::biased(p1, p3, a.depth, a.trials, a.seed)
                }
                _ => return Err(input("give --p or both --p1 and --p3")),
            };
            let report = run_trials(&config)?;
            if report.aggregate.subcritical {
                eprintln!(
                    "warning: subcritical retention (predicted dimension {}); extinction is almost sure",
                    report.aggregate.predicted_dim
                );
            }
            if let Some(p) = &a.trials_csv {
                report.write_trials_csv(create(p)?)?;
            }
            sink(
                "perturb",
                serde_json::to_value(&a)?,
                Some(a.seed),
                DEFAULT_PRECISION_DIGITS,
            )
            .json(&report.aggregate)
        }
        Command::Multifractal(a) => {
            let ifs = match &a.set {
                Some(name) => make_named_spec(name)?.to_ifs()?,
                None => {
                    if a.ratios.len() != a.weights.len() || a.ratios.is_empty() {
                        return Err(input("--ratios and --weights need the same nonzero length"));
                    }
                    let ratios = a
                        .ratios
                        .iter()
                        .map(|t| rational(t))
                        .collect::<Result<Vec<_>>>()?;
                    let weights = a
                        .weights
                        .iter()
                        .map(|t| rational(t))
                        .collect::<Result<Vec<_>>>()?;
                    // left-packed offsets; only ratios and weights enter the spectrum
                    let mut offset = BigRational::zero();
                    let mut maps = Vec::with_capacity(ratios.len());
                    for (r, w) in ratios.into_iter().zip(weights) {
                        let o = if &offset + &r <= BigRational::one() {
                            offset.clone()
                        } else {
                            BigRational::zero()
                        };
                        offset = &o + &r;
                        maps.push(AffineMap::weighted(r, o, w));
                    }
                    GeneralIfsSpec::new(maps, "custom")?
                }
            };
            let parts: Vec<f64> = a
                .q_range
                .split(':')
                .map(|p| p.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| input(format!("q range `{}` is not from:to:step", a.q_range)))?;
            let [from, to, step] = parts[..] else {
                return Err(input(format!(
                    "q range `{}` is not from:to:step",
                    a.q_range
                )));
            };
            let spectrum = multifractal_spectrum(&ifs, &q_range(from, to, step)?, a.step)?;
            let s = sink(
                "multifractal",
                serde_json::to_value(&a)?,
                None,
                DEFAULT_PRECISION_DIGITS,
            );
            match a.format {
                Format::Csv => s.csv(|w| {
                    let mut c = csv::Writer::from_writer(w);
                    c.write_record(["q", "tau", "alpha", "f"])
                        .map_err(csv_err)?;
                    for p in &spectrum {
                        c.write_record([p.q, p.tau, p.alpha, p.f].map(|x| x.to_string()))
                            .map_err(csv_err)?;
                    }
                    c.flush().map_err(|e| Error::Serialize(e.to_string()))
                }),
                _ => s.json(&spectrum),
            }
        }
    }
}

fn default_zero_opts() -> ZeroOpts {
    ZeroOpts {
        order: Order::Standard,
        seed: 0,
        weights: None,
        count: None,
        precision: None,
        tol: DEFAULT_BOUNDARY_TOL,
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Serialize(e.to_string())
}

type SinkFactory<'a> = dyn Fn(&str, Value, Option<u64>, u32) -> Sink + 'a;

fn run_zeros(cmd: ZerosCommand, sink: &SinkFactory) -> Result<()> {
    let (name, a) = match &cmd {
        ZerosCommand::Digitize(a) => ("zeros digitize", a),
        ZerosCommand::Stats(a) => ("zeros stats", a),
        ZerosCommand::Reorder(a) => ("zeros reorder", a),
    };
    let file = a.file.as_ref().map(|p| p.display().to_string());
    let seed = matches!(a.opts.order, Order::Random).then_some(a.opts.seed);
    let digits = precision(a.opts.precision)?;
    let s = sink(name, serde_json::to_value(a)?, seed, digits);
    match cmd {
        ZerosCommand::Digitize(_) => {
            let seq = digits_of(file.as_deref(), &a.opts)?;
            match a.format {
                Format::Csv => s.csv(|w| seq.write_csv(w)),
                _ => s.json(&seq),
            }
        }
        ZerosCommand::Stats(_) => {
            let seq = digits_of(file.as_deref(), &a.opts)?;
            let stats = digit_stats(&seq)?;
            s.json(&serde_json::json!({
                "stats": stats,
                "boundary_count": seq.boundary_count(),
                "digits": seq.digits().iter().map(u8::to_string).collect::<String>(),
            }))
        }
        ZerosCommand::Reorder(_) => {
            let table = load_table(file.as_deref(), &a.opts)?;
            match a.format {
                Format::Csv => s.csv(|w| {
                    let mut c = csv::Writer::from_writer(w);
                    c.write_record(["position", "rank", "gamma"])
                        .map_err(csv_err)?;
                    for (i, g) in table.gammas.iter().enumerate() {
                        c.write_record([(i + 1).to_string(), g.rank.to_string(), g.text.clone()])
                            .map_err(csv_err)?;
                    }
                    c.flush().map_err(|e| Error::Serialize(e.to_string()))
                }),
                _ => s.json(&table),
            }
        }
    }
}
