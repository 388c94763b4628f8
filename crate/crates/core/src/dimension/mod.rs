//! Similarity dimension from the Hutchinson equation, box-counting
//! regression over exact stages, and multifractal spectra of weighted
//! self-similar measures.

mod boxcount;
mod multifractal;
mod similarity;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

pub use boxcount::{aligned_scales, box_count, box_dimension_fit, write_samples_csv};
pub use multifractal::{
    multifractal_spectrum, q_range, MomentExponent, MultifractalPoint, DEFAULT_DIFF_STEP,
};
pub use similarity::{
    equal_ratio_cross_check, similarity_dimension, ClosedFormCheck, ROOT_TOLERANCE,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DimensionMethod {
    Similarity,
    Boxcount,
}

/// One `(epsilon, N(epsilon))` observation with its log coordinates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplePoint {
    #[serde(serialize_with = "ser_ratio")]
    pub epsilon: BigRational,
    pub count: u64,
    pub log_inv_eps: f64,
    pub log_count: f64,
}

fn ser_ratio<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exact::ratio_string(r))
}

impl SamplePoint {
    pub fn new(epsilon: BigRational, count: u64) -> Self {
        let log_inv_eps = ln_ratio(epsilon.denom()) - ln_ratio(epsilon.numer());
        Self {
            epsilon,
            count,
            log_inv_eps,
            log_count: (count as f64).ln(),
        }
    }

    pub fn epsilon_f64(&self) -> f64 {
        self.epsilon.to_f64().unwrap_or(0.0)
    }
}

// ln of a big integer without overflowing f64
fn ln_ratio(n: &num_bigint::BigInt) -> f64 {
    let bits = n.bits();
    if bits < 1000 {
        n.to_f64().expect("fits").ln()
    } else {
        let shift = bits - 53;
        (n >> shift).to_f64().expect("fits").ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// `residual` is `|closed form - bisection|` (or the Hutchinson residual)
/// for similarity estimates and `r^2` for box-counting fits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionEstimate {
    pub method: DimensionMethod,
    pub value: f64,
    pub residual: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sample_points: Vec<SamplePoint>,
}

impl DimensionEstimate {
    pub(crate) fn similarity(value: f64, residual: f64) -> Self {
        Self {
            method: DimensionMethod::Similarity,
            value,
            residual,
            sample_points: Vec::new(),
        }
    }

    pub(crate) fn boxcount(value: f64, r2: f64, sample_points: Vec<SamplePoint>) -> Self {
        Self {
            method: DimensionMethod::Boxcount,
            value,
            residual: r2,
            sample_points,
        }
    }
}
