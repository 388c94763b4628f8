use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::bernoulli::bernoulli;
use super::hp::{HpReal, Working};
use crate::error::{Error, Result};
use crate::exact::ratio_string;

pub const MAX_CORRECTIONS: u32 = 30;
pub const MIN_PRECISION_DIGITS: u32 = 20;
pub const DEFAULT_PRECISION_DIGITS: u32 = 50;

/// Cutoff `N`, Bernoulli correction count `K`, and working precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZetaParams {
    pub terms: u64,
    pub corrections: u32,
    pub precision_digits: u32,
}

impl Default for ZetaParams {
    fn default() -> Self {
        Self {
            terms: 10_000,
            corrections: 10,
            precision_digits: DEFAULT_PRECISION_DIGITS,
        }
    }
}

impl ZetaParams {
    pub fn new(terms: u64, corrections: u32, precision_digits: u32) -> Self {
        Self {
            terms,
            corrections,
            precision_digits,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.terms < 2 {
            return Err(Error::input(format!(
                "terms N must be at least 2, got {}",
                self.terms
            )));
        }
        if !(1..=MAX_CORRECTIONS).contains(&self.corrections) {
            return Err(Error::input(format!(
                "correction count K must be in 1..={MAX_CORRECTIONS}, got {}",
                self.corrections
            )));
        }
        if self.precision_digits < MIN_PRECISION_DIGITS {
            return Err(Error::input(format!(
                "precision must be at least {MIN_PRECISION_DIGITS} digits, got {}",
                self.precision_digits
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaValue {
    #[serde(serialize_with = "ser_ratio")]
    pub s: BigRational,
    pub value: HpReal,
    pub terms_n: u64,
    pub correction_k: u32,
    /// Magnitude of the first omitted correction term.
    pub error_bound: f64,
    pub precision_digits: u32,
}

fn ser_ratio<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(r))
}

/// Natural logs of `1..n` built from logs of primes via smallest prime
/// factors, so only `pi(n)` logarithms are actually evaluated.
fn log_table(w: &Working, n: usize) -> Vec<astro_float::BigFloat> {
    let mut spf = vec![0usize; n];
    let mut logs = vec![w.int(0); n];
    for i in 2..n {
        if spf[i] == 0 {
            let mut j = i;
            while j < n {
                if spf[j] == 0 {
                    spf[j] = i;
                }
                j += i;
            }
            logs[i] = w.ln(&w.int(i as u64));
        } else {
            let p = spf[i];
            logs[i] = w.add(&logs[p], &logs[i / p]);
        }
    }
    logs
}

pub(crate) fn check_domain(s: &BigRational) -> Result<()> {
    if s.is_one() {
        return Err(Error::Pole);
    }
    if !s.is_positive() {
        return Err(Error::Domain(format!(
            "s = {} is not positive; use the functional equation for the left half-plane",
            ratio_string(s)
        )));
    }
    Ok(())
}

/// `zeta(s)` for real `s > 0`, `s != 1`:
///
/// ```text
/// sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
///   + sum_{k=1..K} B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
/// ```
pub fn zeta_euler_maclaurin(s: &BigRational, params: ZetaParams) -> Result<ZetaValue> {
    check_domain(s)?;
    params.validate()?;
    let n_terms = usize::try_from(params.terms)
        .map_err(|_| Error::input("terms N does not fit in memory"))?;
    let w = Working::new(params.precision_digits);
    let value = em_sum(&w, s, n_terms, params.corrections)?;
    Ok(ZetaValue {
        s: s.clone(),
        value: w.wrap(value.0, params.precision_digits),
        terms_n: params.terms,
        correction_k: params.corrections,
        error_bound: value.1,
        precision_digits: params.precision_digits,
    })
}

fn em_sum(
    w: &Working,
    s_exact: &BigRational,
    n: usize,
    k_max: u32,
) -> Result<(astro_float::BigFloat, f64)> {
    let s = w.rational(s_exact);
    let neg_s = s.neg();
    let logs = log_table(w, n + 1);

    let mut sum = w.int(1);
    for log_k in logs.iter().take(n).skip(2) {
        let t = w.exp(&w.mul(&neg_s, log_k));
        sum = w.add(&sum, &t);
    }

    let big_n = w.int(n as u64);
    let n_pow_neg_s = w.exp(&w.mul(&neg_s, &logs[n]));
    // N^(1-s)/(s-1)
    let s_minus_1 = w.rational(&(s_exact - BigRational::one()));
    let integral = w.div(&w.mul(&n_pow_neg_s, &big_n), &s_minus_1);
    sum = w.add(&sum, &integral);
    // N^-s / 2
    sum = w.add(&sum, &w.div(&n_pow_neg_s, &w.int(2)));

    // running factor s(s+1)...(s+2k-2) * N^(-s-2k+1) / (2k)!
    let n_sq = w.mul(&big_n, &big_n);
    let mut factor = w.div(&w.mul(&s, &n_pow_neg_s), &w.mul(&big_n, &w.int(2)));
    let mut error_bound = 0.0;
    for k in 1..=k_max + 1 {
        let b = bernoulli(2 * k as usize).expect("K bounded by table size");
        let term = w.mul(&factor, &w.rational(b));
        if k == k_max + 1 {
            error_bound = w.wrap(term.abs(), 20).to_f64();
            break;
        }
        sum = w.add(&sum, &term);
        // advance to k+1: multiply by (s+2k-1)(s+2k) / ((2k+1)(2k+2) N^2)
        let kk = 2 * u64::from(k);
        let a = w.add(&s, &w.int(kk - 1));
        let c = w.add(&s, &w.int(kk));
        let num = w.mul(&w.mul(&factor, &a), &c);
        let den = w.mul(&n_sq, &w.int((kk + 1) * (kk + 2)));
        factor = w.div(&num, &den);
    }
    Ok((sum, error_bound))
}

/// Convenience for `s` given as `f64`-free text such as `"0.5"` or `"2/3"`.
pub fn zeta_at(s: &str, params: ZetaParams) -> Result<ZetaValue> {
    let s = crate::rational::parse_rational(s)
        .ok_or_else(|| Error::input(format!("cannot parse `{s}` as a real number")))?;
    zeta_euler_maclaurin(&s, params)
}

pub(crate) fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}
