//! End-to-end acceptance checks. Each criterion prints one `PASS`/`FAIL`
//! line; the test fails if any criterion fails.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use fraczeta::cardinality::{catalog, compare, Comparison, Delta, InfoCardinality, Provenance};
use fraczeta::dimension::{
    aligned_scales, box_dimension_fit, multifractal_spectrum, q_range, similarity_dimension,
    DEFAULT_DIFF_STEP,
};
use fraczeta::exact::{
    build_stage, make_named_spec, make_pess_spec, make_zf_spec, nesting_check,
    self_similarity_check, NAMED_SETS,
};
use fraczeta::rational::parse_rational;
use fraczeta::zeros::{bundled_zeros, digitize, reorder, ReorderMode};
use fraczeta::zeta::{functional_equation_residual, zeta_at, ZetaParams};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const PUBLISHED_ZETA_HALF: &str = "-1.460354508809586812889499152515440424";
const ZETA_HALF_SIG_DIGITS: usize = 12;
const ZETA_HALF_MAX_RUNTIME: Duration = Duration::from_secs(5);
const ZETA_TWO_TOL: f64 = 1e-12;
const FUNCTIONAL_TOL: f64 = 1e-10;
const SIMILARITY_TOL: f64 = 1e-12;
const BOX_SLOPE_TOL: f64 = 1e-12;
const SPECTRUM_TOL: f64 = 1e-9;
const MONTE_CARLO_TOL: f64 = 0.03;
const MONTE_CARLO_MAX_RUNTIME: Duration = Duration::from_secs(10);
const ORDER_TRIPLES: usize = 10_000;
const STRUCTURE_DEPTH: usize = 8;

type Outcome = Result<String, String>;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_fraczeta"));
    c.env("SOURCE_DATE_EPOCH", "0")
        .env_remove("FRACZETA_PRECISION");
    c
}

fn run_json(args: &[&str]) -> Result<(Value, Duration), String> {
    let start = Instant::now();
    let out = bin().args(args).output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let v = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    Ok((v, elapsed))
}

fn run_text(args: &[&str]) -> Result<String, String> {
    let out = bin().args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn num(v: &Value) -> Option<f64> {
    v.as_f64()
        .or_else(|| v.as_str().and_then(|s| s.parse().ok()))
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Relative agreement at `sig` significant digits, decided on exact decimals.
fn agrees_to(a: &str, b: &str, sig: usize) -> bool {
    let (Some(x), Some(y)) = (parse_rational(a), parse_rational(b)) else {
        return false;
    };
    let diff = if x > y { &x - &y } else { &y - &x };
    let bound = BigRational::new(BigInt::from(5), BigInt::from(10).pow(sig as u32))
        * if y < BigRational::from_integer(0.into()) {
            -y
        } else {
            y
        };
    diff < bound
}

fn c1_zeta_half() -> Outcome {
    let (v, elapsed) = run_json(&[
        "zeta", "--s", "0.5", "--terms", "10000", "--k", "10", "--digits", "50",
    ])?;
    let value = v["result"]["value"]
        .as_str()
        .ok_or("no value in output")?
        .to_string();
    check(
        agrees_to(&value, PUBLISHED_ZETA_HALF, ZETA_HALF_SIG_DIGITS)
            && elapsed < ZETA_HALF_MAX_RUNTIME,
        format!(
            "zeta(1/2) = {value}, published {PUBLISHED_ZETA_HALF}, {} sig. digits, {elapsed:.2?}",
            ZETA_HALF_SIG_DIGITS
        ),
    )
}

fn c2_zeta_two() -> Outcome {
    let z = zeta_at("2", ZetaParams::default()).map_err(|e| e.to_string())?;
    let pi2_6 = std::f64::consts::PI.powi(2) / 6.0;
    let err = (z.value.to_f64() - pi2_6).abs();
    check(err < ZETA_TWO_TOL, format!("|zeta(2) - pi^2/6| = {err:e}"))
}

fn c3_functional_equation() -> Outcome {
    let mut worst: f64 = 0.0;
    for s in ["0.3", "0.5", "0.7"] {
        let s = parse_rational(s).ok_or("bad literal")?;
        let c =
            functional_equation_residual(&s, ZetaParams::default()).map_err(|e| e.to_string())?;
        worst = worst.max(c.residual);
    }
    check(
        worst < FUNCTIONAL_TOL,
        format!("largest residual {worst:e}"),
    )
}

fn c4_similarity_dimensions() -> Outcome {
    let cases = [
        ("pess", 0.5),
        ("cantor13", 1.0 / 3.0),
        ("mod6", 2f64.ln() / 6f64.ln()),
        ("mod8", 2.0 / 3.0),
        ("classic-cantor", 2f64.ln() / 3f64.ln()),
    ];
    let mut worst: f64 = 0.0;
    let mut parts = Vec::new();
    for (name, closed) in cases {
        let spec = make_named_spec(name).map_err(|e| e.to_string())?;
        let d = similarity_dimension(&spec.ratios().map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?
            .value;
        worst = worst.max((d - closed).abs());
        parts.push(format!("{name} {d:.5}"));
    }
    check(
        worst < SIMILARITY_TOL,
        format!("{}; max error {worst:e}", parts.join(", ")),
    )
}

fn c5_measure_law() -> Outcome {
    let spec = make_pess_spec();
    for n in 0..=20usize {
        let len = build_stage(&spec, n)
            .map_err(|e| e.to_string())?
            .total_length();
        let expected = BigRational::new(1.into(), BigInt::from(2).pow(n as u32));
        if len != expected {
            return Err(format!("stage {n}: total length {len}"));
        }
    }
    Ok("total_length(stage n) = 2^-n exactly for n = 0..20".into())
}

fn c6_box_counting() -> Outcome {
    let stage = build_stage(&make_pess_spec(), 12).map_err(|e| e.to_string())?;
    let fit = box_dimension_fit(&stage, &aligned_scales(4, 12)).map_err(|e| e.to_string())?;
    let pess_ok = (fit.value - 0.5).abs() < BOX_SLOPE_TOL && fit.residual == 1.0;
    let table = bundled_zeros().truncate(12);
    let mut zf = Vec::new();
    for (label, t) in [
        ("standard", reorder(&table, ReorderMode::Standard, 0)),
        (
            "random seed 2024",
            reorder(&table, ReorderMode::Random, 2024),
        ),
    ] {
        let spec = make_zf_spec(&digitize(&t, 50, 1e-6).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let stage = build_stage(&spec, 12).map_err(|e| e.to_string())?;
        let f = box_dimension_fit(&stage, &aligned_scales(4, 12)).map_err(|e| e.to_string())?;
        zf.push((label, f.value));
    }
    let zf_ok = zf.iter().all(|(_, s)| (s - 0.5).abs() < BOX_SLOPE_TOL);
    check(
        pess_ok && zf_ok,
        format!(
            "pess slope {} r^2 {}; Z_F (12 zeros) {}",
            fit.value,
            fit.residual,
            zf.iter()
                .map(|(l, s)| format!("{l} {s}"))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    )
}

fn c7_comparison_and_catalog() -> Outcome {
    let (v, _) = run_json(&[
        "compare", "--a", "pess", "--b", "cantor13", "--format", "json",
    ])?;
    let cmp = &v["result"]["comparison"];
    let trace = cmp["trace"].as_array().ok_or("no trace")?;
    let trace_ok = cmp["outcome"] == "greater"
        && trace.len() == 2
        && trace[0]["component"] == "alpha"
        && trace[0]["outcome"] == "equal"
        && trace[1]["component"] == "delta"
        && trace[1]["outcome"] == "greater";

    let cat = catalog(ZetaParams::default()).map_err(|e| e.to_string())?;
    let rows: Vec<_> = cat.iter().filter(|e| e.in_table).collect();
    let expected = [
        ("pess", 0.5, Some(1.46035)),
        ("cantor13", 1.0 / 3.0, None),
        ("zf", 0.5, Some(-1.46035)),
        ("unit-interval", 1.0, None),
        ("cantor", 0.631, None),
    ];
    let rows_ok = rows.len() == expected.len()
        && rows.iter().zip(expected).all(|(e, (name, delta, iota))| {
            let c = &e.cardinality;
            e.name == name
                && c.alpha == 1
                && (c.delta.value - delta).abs() < 5e-4
                && match iota {
                    Some(i) => {
                        (c.iota - i).abs() < 1e-5 && c.provenance.iota == Provenance::Computed
                    }
                    None => c.iota == 0.0,
                }
        });
    check(
        trace_ok && rows_ok,
        format!(
            "compare -> {}, decided by delta after alpha tie; {} catalog rows with live iota",
            cmp["outcome"],
            rows.len()
        ),
    )
}

fn c8_conservation() -> Outcome {
    let (v, _) = run_json(&["conservation", "--format", "json"])?;
    let r = &v["result"];
    let text = run_text(&["conservation"])?;
    let ok = r["sum_is_zero"] == true
        && r["sum"] == "0"
        && text.contains("holds by definition")
        && text.contains("open computational problem")
        && text.contains("digit statistics");
    check(
        ok,
        format!(
            "iota(P_ess) = {}, iota(Z_F) = {}, sum = {}, caveat and digit statistics printed",
            r["iota_pess"].as_str().unwrap_or("?"),
            r["iota_zf"].as_str().unwrap_or("?"),
            r["sum"].as_str().unwrap_or("?")
        ),
    )
}

fn c9_multifractal() -> Outcome {
    let ifs = make_pess_spec().to_ifs().map_err(|e| e.to_string())?;
    let grid = q_range(-5.0, 5.0, 0.5).map_err(|e| e.to_string())?;
    let spectrum =
        multifractal_spectrum(&ifs, &grid, DEFAULT_DIFF_STEP).map_err(|e| e.to_string())?;
    let worst = spectrum
        .iter()
        .map(|p| (p.alpha - 0.5).abs().max((p.f - 0.5).abs()))
        .fold(0.0, f64::max);
    check(
        worst < SPECTRUM_TOL && spectrum.len() == 21,
        format!(
            "{} points, max |(alpha, f) - (1/2, 1/2)| = {worst:e}",
            spectrum.len()
        ),
    )
}

fn c10_monte_carlo() -> Outcome {
    let (v, elapsed) = run_json(&[
        "perturb", "--p", "0.75", "--depth", "12", "--trials", "500", "--seed", "2024",
    ])?;
    let mean = num(&v["result"]["mean_dim"]).ok_or("no mean_dim")?;
    let predicted = 1.5f64.ln() / 4f64.ln();
    let (one, _) = run_json(&[
        "perturb", "--p", "1", "--depth", "10", "--trials", "50", "--seed", "1",
    ])?;
    let one_mean = num(&one["result"]["mean_dim"]).ok_or("no mean_dim")?;
    check(
        (mean - predicted).abs() < MONTE_CARLO_TOL
            && one_mean == 0.5
            && elapsed < MONTE_CARLO_MAX_RUNTIME,
        format!("p = 0.75: mean {mean:.5} vs {predicted:.5} ({elapsed:.2?}); p = 1: {one_mean}"),
    )
}

fn random_triple(rng: &mut ChaCha8Rng) -> InfoCardinality {
    let alpha = rng.gen_range(0..=1u8);
    let delta = match rng.gen_range(0..3) {
        0 => {
            let b = rng.gen_range(2..40u64);
            Delta::log_ratio(rng.gen_range(1..=b), b).expect("valid ratio")
        }
        1 => Delta::real([0.0, 0.5, 1.0][rng.gen_range(0..3)]),
        _ => Delta::real(rng.gen::<f64>()),
    };
    let iota = if rng.gen_bool(0.3) {
        [0.0, 1.5, -1.5][rng.gen_range(0..3)]
    } else {
        rng.gen_range(-3.0..3.0)
    };
    InfoCardinality::defined(alpha, delta, iota).expect("valid triple")
}

fn c11_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let flip = |c: Comparison| match c {
        Comparison::Less => Comparison::Greater,
        Comparison::Equal => Comparison::Equal,
        Comparison::Greater => Comparison::Less,
    };
    for i in 0..ORDER_TRIPLES {
        let (a, b, c) = (
            random_triple(&mut rng),
            random_triple(&mut rng),
            random_triple(&mut rng),
        );
        let ab = compare(&a, &b).outcome;
        if compare(&b, &a).outcome != flip(ab) {
            return Err(format!("antisymmetry fails on triple {i}"));
        }
        let bc = compare(&b, &c).outcome;
        let ac = compare(&a, &c).outcome;
        if ab != Comparison::Greater && bc != Comparison::Greater && ac == Comparison::Greater {
            return Err(format!("transitivity fails on triple {i}"));
        }
        if ab == Comparison::Equal && bc == Comparison::Equal && ac != Comparison::Equal {
            return Err(format!("equality is not transitive on triple {i}"));
        }
    }
    for name in NAMED_SETS {
        let spec = make_named_spec(name).map_err(|e| e.to_string())?;
        let nested = nesting_check(&spec, STRUCTURE_DEPTH).map_err(|e| e.to_string())?;
        let selfsim = self_similarity_check(&spec, STRUCTURE_DEPTH).map_err(|e| e.to_string())?;
        if !nested || !selfsim.holds {
            return Err(format!(
                "{name}: nested {nested}, self-similar {}",
                selfsim.holds
            ));
        }
    }
    let table = bundled_zeros();
    let lo = digitize(&table, 40, 1e-6).map_err(|e| e.to_string())?;
    let hi = digitize(&table, 60, 1e-6).map_err(|e| e.to_string())?;
    let mut compared = 0;
    for (x, y) in lo.entries.iter().zip(&hi.entries) {
        if x.boundary_flag || y.boundary_flag {
            continue;
        }
        if x.a != y.a {
            return Err(format!(
                "zero {}: digit {} at 40 places, {} at 60",
                x.n, x.a, y.a
            ));
        }
        compared += 1;
    }
    Ok(format!(
        "{ORDER_TRIPLES} random triples ordered consistently; nesting and self-similarity exact to depth {STRUCTURE_DEPTH}; {compared}/{} digits identical at 40 and 60 places",
        table.len()
    ))
}

#[test]
fn acceptance_criteria() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("zeta(1/2) to 12 digits in under 5 s", c1_zeta_half),
        ("zeta(2) = pi^2/6", c2_zeta_two),
        ("functional equation residual", c3_functional_equation),
        ("similarity dimensions", c4_similarity_dimensions),
        ("exact measure law", c5_measure_law),
        ("box-count regression", c6_box_counting),
        ("pess over cantor13 and catalog", c7_comparison_and_catalog),
        ("conservation report", c8_conservation),
        ("multifractal degeneracy", c9_multifractal),
        ("Monte Carlo retention", c10_monte_carlo),
        ("property suites", c11_properties),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (tag, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed.push(i + 1);
                ("FAIL", d)
            }
        };
        writeln!(out, "acceptance {:>2} {tag} {name}: {detail}", i + 1).unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
