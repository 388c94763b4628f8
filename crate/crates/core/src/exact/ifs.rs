use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::grid::GridSpec;
use super::stage::{build_stage, Interval, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};

/// `x -> ratio * x + offset`, optionally carrying a probability weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub ratio: BigRational,
    pub offset: BigRational,
    pub weight: Option<BigRational>,
}

impl AffineMap {
    pub fn new(ratio: BigRational, offset: BigRational) -> Self {
        Self {
            ratio,
            offset,
            weight: None,
        }
    }

    pub fn weighted(ratio: BigRational, offset: BigRational, weight: BigRational) -> Self {
        Self {
            ratio,
            offset,
            weight: Some(weight),
        }
    }

    pub fn apply(&self, x: &BigRational) -> BigRational {
        &self.ratio * x + &self.offset
    }

    pub fn image(&self, iv: &Interval) -> Interval {
        let a = self.apply(&iv.left);
        let b = self.apply(&iv.right);
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }
}

/// Validated contraction system on `[0, 1]`. The open set condition is the
/// caller's responsibility and is not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralIfsSpec {
    maps: Vec<AffineMap>,
    label: String,
}

impl GeneralIfsSpec {
    pub fn new(maps: Vec<AffineMap>, label: impl Into<String>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::input("an IFS needs at least one map"));
        }
        for (i, m) in maps.iter().enumerate() {
            if !(m.ratio.is_positive() && m.ratio < BigRational::one()) {
                return Err(Error::input(format!(
                    "map {i}: ratio {} is not in (0, 1)",
                    m.ratio
                )));
            }
            if m.offset.is_negative() || m.offset >= BigRational::one() {
                return Err(Error::input(format!(
                    "map {i}: offset {} is not in [0, 1)",
                    m.offset
                )));
            }
            if let Some(w) = &m.weight {
                if !w.is_positive() || *w > BigRational::one() {
                    return Err(Error::input(format!(
                        "map {i}: weight {w} is not in (0, 1]"
                    )));
                }
            }
        }
        let weighted = maps.iter().filter(|m| m.weight.is_some()).count();
        if weighted != 0 && weighted != maps.len() {
            return Err(Error::input(
                "either every map carries a weight or none does",
            ));
        }
        if weighted != 0 {
            let total: BigRational = maps.iter().filter_map(|m| m.weight.clone()).sum();
            if !total.is_one() {
                return Err(Error::input(format!("weights sum to {total}, not 1")));
            }
        }
        Ok(Self {
            maps,
            label: label.into(),
        })
    }

    pub fn maps(&self) -> &[AffineMap] {
        &self.maps
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ratios(&self) -> Vec<BigRational> {
        self.maps.iter().map(|m| m.ratio.clone()).collect()
    }

    pub fn weights(&self) -> Option<Vec<BigRational>> {
        self.maps.iter().map(|m| m.weight.clone()).collect()
    }

    pub fn apply_step(&self, intervals: &[Interval]) -> IfsStep {
        apply_ifs_step(&self.maps, intervals)
    }
}

impl GridSpec {
    /// Maps `x -> (x + d) / b` for each retained digit `d`, equally weighted.
    pub fn to_ifs(&self) -> Result<GeneralIfsSpec> {
        let ratios = self.ratios()?;
        let set = self.retained(1).expect("constant spec");
        let b = BigInt::from(self.base());
        let w = BigRational::new(BigInt::one(), BigInt::from(set.len()));
        let maps = set
            .iter()
            .zip(ratios)
            .map(|(&d, r)| {
                AffineMap::weighted(r, BigRational::new(BigInt::from(d), b.clone()), w.clone())
            })
            .collect();
        GeneralIfsSpec::new(maps, self.label())
    }
}

/// Result of one Hutchinson step. Images are kept in map-major order and
/// never merged; positive-length overlaps are listed by sorted position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IfsStep {
    pub intervals: Vec<Interval>,
    pub overlaps: Vec<(usize, usize)>,
}

pub fn apply_ifs_step(maps: &[AffineMap], intervals: &[Interval]) -> IfsStep {
    let mut images: Vec<Interval> = maps
        .iter()
        .flat_map(|m| intervals.iter().map(move |iv| m.image(iv)))
        .collect();
    images.sort();
    let mut overlaps = Vec::new();
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[j].left >= images[i].right {
                break;
            }
            if images[i].overlaps(&images[j]) {
                overlaps.push((i, j));
            }
        }
    }
    IfsStep {
        intervals: images,
        overlaps,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfSimilarityReport {
    pub label: String,
    pub depth: usize,
    pub holds: bool,
    /// First `n` for which stage `n + 1` differed from the images of stage `n`.
    pub first_failure: Option<usize>,
}

/// Checks stage `n + 1 == union of f_d(stage n)` exactly for every `n < depth`.
pub fn self_similarity_check(spec: &GridSpec, depth: usize) -> Result<SelfSimilarityReport> {
    let ifs = spec.to_ifs().map_err(|_| {
        Error::UnsupportedStructure(format!(
            "`{}` uses level-dependent retained digits; self-similarity needs the same maps at every level",
            spec.label()
        ))
    })?;
    let mut current = build_stage(spec, 0)?.materialize(DEFAULT_ENUMERATION_CAP)?;
    let mut first_failure = None;
    for n in 0..depth {
        let next = build_stage(spec, n + 1)?.materialize(DEFAULT_ENUMERATION_CAP)?;
        let step = ifs.apply_step(&current);
        if step.intervals != next || !step.overlaps.is_empty() {
            first_failure = Some(n);
            break;
        }
        current = next;
    }
    Ok(SelfSimilarityReport {
        label: spec.label().to_string(),
        depth,
        holds: first_failure.is_none(),
        first_failure,
    })
}

/// Exact nesting check: every stage-`n+1` interval lies inside exactly one
/// stage-`n` interval, for all `n < depth`.
pub fn nesting_check(spec: &GridSpec, depth: usize) -> Result<bool> {
    let mut parent = build_stage(spec, 0)?.materialize(DEFAULT_ENUMERATION_CAP)?;
    for n in 0..depth {
        let child = build_stage(spec, n + 1)?.materialize(DEFAULT_ENUMERATION_CAP)?;
        // parents are sorted and pairwise disjoint, so the only candidate
        // host is the last parent starting at or before the child
        if parent.windows(2).any(|w| w[0].overlaps(&w[1])) {
            return Ok(false);
        }
        for iv in &child {
            let k = parent.partition_point(|p| p.left <= iv.left);
            if k == 0 || !parent[k - 1].contains(iv) {
                return Ok(false);
            }
        }
        parent = child;
    }
    Ok(true)
}
