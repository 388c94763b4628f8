use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::grid::GridSpec;
use crate::error::{Error, Result};

/// Default bound on explicit interval materialization (2^20 intervals).
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// Closed interval with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub left: BigRational,
    pub right: BigRational,
}

impl Interval {
    pub fn new(left: BigRational, right: BigRational) -> Self {
        debug_assert!(left <= right);
        Self { left, right }
    }

    pub fn unit() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn length(&self) -> BigRational {
        &self.right - &self.left
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.left <= other.left && other.right <= self.right
    }

    /// True when the two intervals share more than a single point.
    pub fn overlaps(&self, other: &Interval) -> bool {
        self.left < other.right && other.left < self.right
    }
}

pub(crate) fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn serialize_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(r))
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Interval", 2)?;
        st.serialize_field("left", &ratio_string(&self.left))?;
        st.serialize_field("right", &ratio_string(&self.right))?;
        st.end()
    }
}

/// Exact stage-`n` approximation of a digit-restricted set. Counts and total
/// length are closed-form; the intervals themselves are enumerated lazily.
#[derive(Debug, Clone)]
pub struct StageSet {
    spec: GridSpec,
    depth: usize,
    interval_count: BigUint,
    scale: BigUint,
}

pub fn build_stage(spec: &GridSpec, depth: usize) -> Result<StageSet> {
    let interval_count = spec.count_at(depth)?;
    let scale = BigUint::from(spec.base()).pow(depth as u32);
    Ok(StageSet {
        spec: spec.clone(),
        depth,
        interval_count,
        scale,
    })
}

impl StageSet {
    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn interval_count(&self) -> &BigUint {
        &self.interval_count
    }

    /// Common length `b^-n` of every stage interval.
    pub fn interval_length(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(self.scale.clone()))
    }

    pub fn total_length(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.interval_count.clone()),
            BigInt::from(self.scale.clone()),
        )
    }

    /// Lazy, left-to-right enumeration. No cap is applied here.
    pub fn intervals(&self) -> Intervals<'_> {
        Intervals::new(self)
    }

    /// Left-endpoint numerators over the common denominator `b^n`, in order.
    pub fn left_numerators(&self) -> LeftNumerators<'_> {
        LeftNumerators::new(self)
    }

    /// All intervals, refusing when the count exceeds `cap`.
    pub fn materialize(&self, cap: u64) -> Result<Vec<Interval>> {
        self.check_cap(cap)?;
        Ok(self.intervals().collect())
    }

    pub fn check_cap(&self, cap: u64) -> Result<()> {
        match self.interval_count.to_u64() {
            Some(n) if n <= cap => Ok(()),
            _ => Err(Error::Capacity {
                requested: self.interval_count.to_string(),
                cap,
            }),
        }
    }

    /// CSV export: `index,left_numerator,left_denominator,right_numerator,right_denominator`.
    pub fn write_csv<W: Write>(&self, out: W, cap: u64) -> Result<()> {
        self.check_cap(cap)?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "index",
            "left_numerator",
            "left_denominator",
            "right_numerator",
            "right_denominator",
        ])?;
        for (i, iv) in self.intervals().enumerate() {
            w.write_record([
                i.to_string(),
                iv.left.numer().to_string(),
                iv.left.denom().to_string(),
                iv.right.numer().to_string(),
                iv.right.denom().to_string(),
            ])?;
        }
        w.flush().map_err(|e| Error::Serialize(e.to_string()))?;
        Ok(())
    }

    pub fn to_export(&self, cap: u64) -> Result<StageExport> {
        let intervals = self
            .materialize(cap)?
            .into_iter()
            .enumerate()
            .map(|(index, interval)| IndexedInterval { index, interval })
            .collect();
        Ok(StageExport {
            label: self.spec.label().to_string(),
            base: self.spec.base(),
            depth: self.depth,
            interval_count: self.interval_count.to_string(),
            interval_length: self.interval_length(),
            total_length: self.total_length(),
            intervals,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexedInterval {
    pub index: usize,
    #[serde(flatten)]
    pub interval: Interval,
}

/// JSON shape of a stage export; endpoints are `"p/q"` strings.
#[derive(Debug, Clone, Serialize)]
pub struct StageExport {
    pub label: String,
    pub base: u32,
    pub depth: usize,
    pub interval_count: String,
    #[serde(serialize_with = "serialize_ratio")]
    pub interval_length: BigRational,
    #[serde(serialize_with = "serialize_ratio")]
    pub total_length: BigRational,
    pub intervals: Vec<IndexedInterval>,
}

/// Odometer over per-level retained-digit indices, maintaining prefix sums
/// so each step costs amortized O(1) big-integer additions.
pub struct LeftNumerators<'a> {
    stage: &'a StageSet,
    // place value b^(n-k) for level k (index k-1)
    weights: Vec<BigUint>,
    counters: Vec<usize>,
    prefix: Vec<BigUint>,
    done: bool,
}

impl<'a> LeftNumerators<'a> {
    fn new(stage: &'a StageSet) -> Self {
        let n = stage.depth;
        let b = BigUint::from(stage.spec.base());
        let mut weights = vec![BigUint::one(); n];
        for k in (0..n.saturating_sub(1)).rev() {
            weights[k] = &weights[k + 1] * &b;
        }
        let mut it = Self {
            stage,
            weights,
            counters: vec![0; n],
            prefix: vec![BigUint::zero(); n + 1],
            done: stage.interval_count.is_zero(),
        };
        it.refresh_from(0);
        it
    }

    fn digit(&self, level_idx: usize) -> u32 {
        self.stage
            .spec
            .retained(level_idx + 1)
            .expect("depth checked at build time")[self.counters[level_idx]]
    }

    fn refresh_from(&mut self, from: usize) {
        for k in from..self.counters.len() {
            let d = self.digit(k);
            self.prefix[k + 1] = &self.prefix[k] + &self.weights[k] * d;
        }
    }
}

impl Iterator for LeftNumerators<'_> {
    type Item = BigUint;

    fn next(&mut self) -> Option<BigUint> {
        if self.done {
            return None;
        }
        let n = self.counters.len();
        let out = self.prefix[n].clone();
        // advance the odometer, last level fastest
        let mut k = n;
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            let size = self.stage.spec.retained(k + 1).map_or(0, <[u32]>::len);
            self.counters[k] += 1;
            if self.counters[k] < size {
                self.refresh_from(k);
                break;
            }
            self.counters[k] = 0;
        }
        Some(out)
    }
}

pub struct Intervals<'a> {
    lefts: LeftNumerators<'a>,
    denom: BigInt,
}

impl<'a> Intervals<'a> {
    fn new(stage: &'a StageSet) -> Self {
        Self {
            lefts: LeftNumerators::new(stage),
            denom: BigInt::from(stage.scale.clone()),
        }
    }
}

impl Iterator for Intervals<'_> {
    type Item = Interval;

    fn next(&mut self) -> Option<Interval> {
        let l = BigInt::from(self.lefts.next()?);
        let r = &l + 1;
        Some(Interval::new(
            BigRational::new(l, self.denom.clone()),
            BigRational::new(r, self.denom.clone()),
        ))
    }
}

/// A finite address: one index per level into that level's sorted retained set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Address(pub Vec<usize>);

/// Left endpoint `sum d_k b^-k` of the addressed depth-`n` interval.
pub fn address_to_point(spec: &GridSpec, address: &Address) -> Result<BigRational> {
    spec.check_depth(address.0.len())?;
    let b = BigInt::from(spec.base());
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for (i, &idx) in address.0.iter().enumerate() {
        let level = i + 1;
        let set = spec.retained(level).expect("depth checked");
        let d = *set.get(idx).ok_or(Error::Address {
            level,
            index: idx,
            size: set.len(),
        })?;
        num = num * &b + d;
        den *= &b;
    }
    Ok(BigRational::new(num, den))
}
