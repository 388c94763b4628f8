use std::fs;
use std::path::Path;

use num_rational::BigRational;
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::parse_rational;

/// One zero ordinate, kept both as its source text and as an exact rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroOrdinate {
    /// 1-based position in the source file's data lines.
    pub rank: usize,
    pub text: String,
    #[serde(skip)]
    pub value: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum ZeroOrdering {
    Standard,
    Random { seed: u64 },
    ExternalWeights { file: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroSource {
    pub path: String,
    pub line_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroTable {
    pub gammas: Vec<ZeroOrdinate>,
    pub source: ZeroSource,
    pub ordering: ZeroOrdering,
    pub warnings: Vec<String>,
}

impl ZeroTable {
    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn is_increasing(&self) -> bool {
        self.gammas.windows(2).all(|w| w[0].value < w[1].value)
    }

    /// First `n` ordinates in the current order.
    pub fn truncate(mut self, n: usize) -> Self {
        self.gammas.truncate(n);
        self
    }
}

/// Imaginary parts of the first 100 nontrivial zeros, 30 decimals each.
pub const FIRST_100_ZEROS: &str = include_str!("../../data/zeros_first100.txt");

/// The bundled table of the first 100 zeros in standard order.
pub fn bundled_zeros() -> ZeroTable {
    parse_zero_text(FIRST_100_ZEROS, "bundled:zeros_first100.txt").expect("bundled table parses")
}

/// Reads a plain-text zero table: one decimal per line, `#` comments and
/// blank lines ignored.
pub fn parse_zero_file(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_zero_text(&text, &path.display().to_string())
}

pub fn parse_zero_text(text: &str, source: &str) -> Result<ZeroTable> {
    let mut gammas = Vec::new();
    let mut line_count = 0;
    for (i, line) in text.lines().enumerate() {
        line_count = i + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let value = parse_rational(t).ok_or_else(|| Error::Parse {
            line: i + 1,
            message: format!("`{t}` is not a decimal number"),
        })?;
        if !value.is_positive() {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("zero ordinate `{t}` must be positive"),
            });
        }
        gammas.push(ZeroOrdinate {
            rank: gammas.len() + 1,
            text: t.to_string(),
            value,
        });
    }
    if gammas.is_empty() {
        return Err(Error::input(format!("{source} contains no zero ordinates")));
    }
    let mut table = ZeroTable {
        gammas,
        source: ZeroSource {
            path: source.to_string(),
            line_count,
        },
        ordering: ZeroOrdering::Standard,
        warnings: Vec::new(),
    };
    if !table.is_increasing() {
        table
            .warnings
            .push("ordinates are not strictly increasing in file order".to_string());
    }
    Ok(table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReorderMode {
    Standard,
    Random,
}

/// `Standard` sorts ascending; `Random` applies a Fisher-Yates shuffle driven
/// by a ChaCha8 generator seeded from `seed`.
pub fn reorder(table: &ZeroTable, mode: ReorderMode, seed: u64) -> ZeroTable {
    let mut out = table.clone();
    match mode {
        ReorderMode::Standard => {
            out.gammas.sort_by(|a, b| a.value.cmp(&b.value));
            out.ordering = ZeroOrdering::Standard;
        }
        ReorderMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            out.gammas.shuffle(&mut rng);
            out.ordering = ZeroOrdering::Random { seed };
        }
    }
    out
}

/// Orders by ascending weight from a sidecar of `index weight` lines
/// (1-based indices into the current order, comma or whitespace separated).
/// Ties keep their current relative order.
pub fn reorder_by_weights(table: &ZeroTable, weights: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = weights.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut w: Vec<Option<f64>> = vec![None; table.len()];
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        let mut parts = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty());
        let (Some(idx), Some(weight), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(parse_err(format!("expected `index weight`, got `{t}`")));
        };
        let idx: usize = idx
            .parse()
            .map_err(|_| parse_err(format!("bad index `{idx}`")))?;
        let weight: f64 = weight
            .parse()
            .map_err(|_| parse_err(format!("bad weight `{weight}`")))?;
        if idx == 0 || idx > table.len() {
            return Err(parse_err(format!(
                "index {idx} outside 1..={}",
                table.len()
            )));
        }
        w[idx - 1] = Some(weight);
    }
    let weights = w
        .into_iter()
        .enumerate()
        .map(|(i, x)| x.ok_or_else(|| Error::input(format!("no weight given for zero {}", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let mut order: Vec<usize> = (0..table.len()).collect();
    order.sort_by(|&a, &b| weights[a].total_cmp(&weights[b]));
    let mut out = table.clone();
    out.gammas = order.into_iter().map(|i| table.gammas[i].clone()).collect();
    out.ordering = ZeroOrdering::ExternalWeights {
        file: path.display().to_string(),
    };
    Ok(out)
}
