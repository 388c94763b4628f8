//! Monte Carlo for probabilistic-retention constructions.
//!
//! Each surviving base-`b` interval independently keeps each candidate child
//! position with its own probability, which makes the survivor counts a
//! Galton-Watson process. Trials draw from ChaCha8 streams keyed by
//! `(seed, trial index)`, so results do not depend on scheduling.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// `log(sum of retention probabilities) / log(base)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpectedDimension {
    pub value: f64,
    /// Mean offspring at most 1: extinction is almost sure and `value <= 0`.
    pub subcritical: bool,
}

/// Predicted dimension `log(2p) / log 4` of the uniform two-position rule.
pub fn expected_dimension(p: f64) -> Result<ExpectedDimension> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::input(format!(
            "retention probability must be in (0, 1], got {p}"
        )));
    }
    Ok(predicted(&[p, p], 4))
}

fn predicted(probs: &[f64], base: u32) -> ExpectedDimension {
    let mean: f64 = probs.iter().sum();
    ExpectedDimension {
        value: mean.ln() / f64::from(base).ln(),
        subcritical: mean <= 1.0,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RetentionConfig {
    pub base: u32,
    /// `(digit position, retention probability)` per candidate child.
    pub positions: Vec<(u32, f64)>,
    pub depth: usize,
    pub trials: usize,
    pub seed: u64,
}

impl RetentionConfig {
    /// Base 4, positions 1 and 3 each kept with probability `p`.
    pub fn uniform(p: f64, depth: usize, trials: usize, seed: u64) -> Self {
        Self::biased(p, p, depth, trials, seed)
    }

    /// Base 4 with separate probabilities for positions 1 and 3.
    pub fn biased(p1: f64, p3: f64, depth: usize, trials: usize, seed: u64) -> Self {
        Self {
            base: 4,
            positions: vec![(1, p1), (3, p3)],
            depth,
            trials,
            seed,
        }
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.positions.iter().map(|&(_, p)| p).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.base < 2 {
            return Err(Error::input("base must be at least 2"));
        }
        if self.positions.is_empty() || self.positions.len() >= self.base as usize {
            return Err(Error::input(
                "need at least one and fewer than `base` candidate positions",
            ));
        }
        for &(d, p) in &self.positions {
            if d >= self.base {
                return Err(Error::input(format!(
                    "position {d} is not below base {}",
                    self.base
                )));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::input(format!(
                    "probability {p} for position {d} is not in [0, 1]"
                )));
            }
        }
        if self.depth == 0 {
            return Err(Error::input("depth must be at least 1"));
        }
        if self.trials == 0 {
            return Err(Error::input("trials must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub trial: usize,
    /// `N_0 ..= N_depth`, with `N_0 = 1`.
    pub survivor_counts: Vec<u64>,
    pub extinct: bool,
    /// `log N_depth / (depth log base)`, absent after extinction.
    pub dim_estimate: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialAggregate {
    /// Common retention probability when every position shares one.
    pub p: Option<f64>,
    pub probabilities: Vec<f64>,
    pub depth: usize,
    pub trials: usize,
    pub seed: u64,
    pub extinction_rate: f64,
    /// Mean and sample standard deviation over surviving trials only.
    pub mean_dim: Option<f64>,
    pub std_dim: Option<f64>,
    pub predicted_dim: f64,
    pub subcritical: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialReport {
    pub aggregate: TrialAggregate,
    pub outcomes: Vec<TrialOutcome>,
}

impl TrialReport {
    /// `trial,extinct,dim_estimate,survivor_counts` with counts `;`-joined.
    pub fn write_trials_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["trial", "extinct", "dim_estimate", "survivor_counts"])?;
        for o in &self.outcomes {
            let counts: Vec<String> = o.survivor_counts.iter().map(u64::to_string).collect();
            w.write_record([
                o.trial.to_string(),
                o.extinct.to_string(),
                o.dim_estimate.map(|d| d.to_string()).unwrap_or_default(),
                counts.join(";"),
            ])?;
        }
        w.flush().map_err(|e| Error::Serialize(e.to_string()))?;
        Ok(())
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn run_trial(config: &RetentionConfig, trial: usize) -> TrialOutcome {
    let mut rng = trial_rng(config.seed, trial);
    let mut counts = Vec::with_capacity(config.depth + 1);
    counts.push(1u64);
    let mut alive = 1u64;
    for _ in 0..config.depth {
        let mut next = 0u64;
        for _ in 0..alive {
            for &(_, p) in &config.positions {
                if rng.gen_bool(p) {
                    next += 1;
                }
            }
        }
        alive = next;
        counts.push(alive);
    }
    let extinct = alive == 0;
    let dim_estimate = (!extinct)
        .then(|| (alive as f64).ln() / (config.depth as f64 * f64::from(config.base).ln()));
    TrialOutcome {
        trial,
        survivor_counts: counts,
        extinct,
        dim_estimate,
    }
}

pub fn run_trials(config: &RetentionConfig) -> Result<TrialReport> {
    config.validate()?;
    let outcomes: Vec<TrialOutcome> = (0..config.trials)
        .into_par_iter()
        .map(|i| run_trial(config, i))
        .collect();

    let dims: Vec<f64> = outcomes.iter().filter_map(|o| o.dim_estimate).collect();
    let extinct = outcomes.len() - dims.len();
    let mean_dim = (!dims.is_empty()).then(|| dims.iter().sum::<f64>() / dims.len() as f64);
    let std_dim = mean_dim.map(|m| {
        if dims.len() < 2 {
            0.0
        } else {
            (dims.iter().map(|d| (d - m) * (d - m)).sum::<f64>() / (dims.len() - 1) as f64).sqrt()
        }
    });
    let probs = config.probabilities();
    let p = probs.iter().all(|&x| x == probs[0]).then_some(probs[0]);
    let prediction = predicted(&probs, config.base);
    Ok(TrialReport {
        aggregate: TrialAggregate {
            p,
            probabilities: probs,
            depth: config.depth,
            trials: config.trials,
            seed: config.seed,
            extinction_rate: extinct as f64 / config.trials as f64,
            mean_dim,
            std_dim,
            predicted_dim: prediction.value,
            subcritical: prediction.subcritical,
        },
        outcomes,
    })
}
