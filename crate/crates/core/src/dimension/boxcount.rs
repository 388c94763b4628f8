use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{DimensionEstimate, SamplePoint};
use crate::error::{Error, Result};
use crate::exact::StageSet;

/// Number of half-open grid boxes `[j e, (j+1) e)` met by the stage.
///
/// A box counts when it shares positive length with some stage interval, so
/// intervals that merely touch a grid line do not pull in the neighbouring box.
pub fn box_count(stage: &StageSet, epsilon: &BigRational) -> Result<u64> {
    if !epsilon.is_positive() {
        return Err(Error::input(format!(
            "box size must be positive, got {epsilon}"
        )));
    }
    let p = BigUint::try_from(epsilon.numer().clone()).expect("positive");
    let q = BigUint::try_from(epsilon.denom().clone()).expect("positive");
    let scale = BigUint::from(stage.spec().base()).pow(stage.depth() as u32);
    // interval [L/B, (L+1)/B] meets boxes floor(Lq/(Bp)) ..= ceil((L+1)q/(Bp)) - 1
    let den = &scale * &p;
    let mut count = BigUint::zero();
    let mut covered_to: Option<BigUint> = None; // exclusive upper box index seen so far
    for left in stage.left_numerators() {
        let first = (&left * &q) / &den;
        let last_excl = Integer::div_ceil(&((&left + 1u32) * &q), &den);
        let start = match &covered_to {
            Some(c) if *c > first => c.clone(),
            _ => first,
        };
        if last_excl > start {
            count += &last_excl - &start;
            covered_to = Some(last_excl);
        }
    }
    count
        .to_u64()
        .ok_or_else(|| Error::input("box count does not fit in 64 bits"))
}

/// Scales `b^-1, ..., b^-k_max`.
pub fn aligned_scales(base: u32, k_max: usize) -> Vec<BigRational> {
    (1..=k_max)
        .map(|k| BigRational::new(BigInt::one(), BigInt::from(base).pow(k as u32)))
        .collect()
}

/// Least-squares slope of `log N(e)` against `log(1/e)`.
pub fn box_dimension_fit(stage: &StageSet, scales: &[BigRational]) -> Result<DimensionEstimate> {
    let mut scales = scales.to_vec();
    scales.sort_by(|a, b| b.cmp(a));
    scales.dedup();
    if scales.len() < 3 {
        return Err(Error::input(format!(
            "box-counting fit needs at least 3 distinct scales, got {}",
            scales.len()
        )));
    }
    let samples = scales
        .into_iter()
        .map(|eps| {
            let count = box_count(stage, &eps)?;
            Ok(SamplePoint::new(eps, count))
        })
        .collect::<Result<Vec<_>>>()?;
    let xs: Vec<f64> = samples.iter().map(|s| s.log_inv_eps).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.log_count).collect();
    let (slope, r2) = least_squares(&xs, &ys);
    Ok(DimensionEstimate::boxcount(slope, r2, samples))
}

/// Returns `(slope, r^2)`. A zero-variance response gives `r^2 = 1`.
pub(crate) fn least_squares(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 {
        1.0
    } else {
        (sxy * sxy) / (sxx * syy)
    };
    (slope, r2)
}

/// `epsilon,count,log_inv_eps,log_count`, one row per sample.
pub fn write_samples_csv<W: Write>(samples: &[SamplePoint], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["epsilon", "count", "log_inv_eps", "log_count"])?;
    for s in samples {
        w.write_record([
            format!("{:e}", s.epsilon_f64()),
            s.count.to_string(),
            s.log_inv_eps.to_string(),
            s.log_count.to_string(),
        ])?;
    }
    w.flush().map_err(|e| Error::Serialize(e.to_string()))?;
    Ok(())
}
