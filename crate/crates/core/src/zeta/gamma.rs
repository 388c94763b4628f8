use astro_float::BigFloat;
use num_rational::BigRational;
use num_traits::Signed;

use super::bernoulli::bernoulli;
use super::hp::{HpReal, Working};
use crate::error::{Error, Result};
use crate::exact::ratio_string;

const STIRLING_TERMS: usize = 30;

/// `Gamma(x)` for `x > 0` by upward recurrence into the Stirling regime.
///
/// With `z = x + m >= max(30, digits)` the 30-term Stirling series for
/// `ln Gamma(z)` is accurate far beyond the working precision, and
/// `Gamma(x) = Gamma(z) / (x (x+1) ... (x+m-1))`.
pub fn gamma_real(x: &BigRational, precision_digits: u32) -> Result<HpReal> {
    if !x.is_positive() {
        return Err(Error::Domain(format!(
            "Gamma is only evaluated for x > 0, got {}",
            ratio_string(x)
        )));
    }
    let w = Working::new(precision_digits.max(20));
    let xf = w.rational(x);
    let g = gamma_bf(&w, &xf, precision_digits);
    Ok(w.wrap(g, precision_digits))
}

pub(crate) fn gamma_bf(w: &Working, x: &BigFloat, digits: u32) -> BigFloat {
    let target = f64::from(digits.max(30));
    let mut z = x.clone();
    let mut shift_product = w.int(1);
    // x is positive, so the comparison against a small float is safe
    while w.wrap(z.clone(), 20).to_f64() < target {
        shift_product = w.mul(&shift_product, &z);
        z = w.add(&z, &w.int(1));
    }
    let ln_gamma_z = stirling_ln_gamma(w, &z);
    w.div(&w.exp(&ln_gamma_z), &shift_product)
}

fn stirling_ln_gamma(w: &Working, z: &BigFloat) -> BigFloat {
    let half = w.div(&w.int(1), &w.int(2));
    let ln_z = w.ln(z);
    let two_pi = w.mul(&w.pi(), &w.int(2));
    let mut acc = w.sub(&w.mul(&w.sub(z, &half), &ln_z), z);
    acc = w.add(&acc, &w.mul(&half, &w.ln(&two_pi)));
    let z_sq = w.mul(z, z);
    let mut z_pow = z.clone(); // z^(2k-1)
    for k in 1..=STIRLING_TERMS {
        let b = w.rational(bernoulli(2 * k).expect("table covers Stirling terms"));
        let den = w.mul(&z_pow, &w.int((2 * k * (2 * k - 1)) as u64));
        acc = w.add(&acc, &w.div(&b, &den));
        z_pow = w.mul(&z_pow, &z_sq);
    }
    acc
}
