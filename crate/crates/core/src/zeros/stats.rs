use serde::Serialize;

use super::digitize::DigitSequence;
use crate::error::{Error, Result};

/// Upper 5% point of the chi-square distribution with 3 degrees of freedom.
pub const CHI2_3DF_CRITICAL_05: f64 = 7.8147;
pub const MIN_STATS_LENGTH: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DigitStats {
    pub n: usize,
    pub counts: [u64; 4],
    pub chi_square: f64,
    pub df: u32,
    pub critical_value: f64,
    pub reject_at_05: bool,
}

pub fn digit_stats(digits: &DigitSequence) -> Result<DigitStats> {
    digit_stats_of(&digits.digits())
}

/// Pearson goodness-of-fit against the uniform law on `{0, 1, 2, 3}`.
pub fn digit_stats_of(digits: &[u8]) -> Result<DigitStats> {
    if digits.len() < MIN_STATS_LENGTH {
        return Err(Error::InsufficientData(format!(
            "digit statistics need at least {MIN_STATS_LENGTH} digits, got {}",
            digits.len()
        )));
    }
    let mut counts = [0u64; 4];
    for &d in digits {
        let slot = counts
            .get_mut(usize::from(d))
            .ok_or_else(|| Error::input(format!("digit {d} is not base 4")))?;
        *slot += 1;
    }
    let expected = digits.len() as f64 / 4.0;
    let chi_square = counts
        .iter()
        .map(|&o| {
            let diff = o as f64 - expected;
            diff * diff / expected
        })
        .sum::<f64>();
    Ok(DigitStats {
        n: digits.len(),
        counts,
        chi_square,
        df: 3,
        critical_value: CHI2_3DF_CRITICAL_05,
        reject_at_05: chi_square > CHI2_3DF_CRITICAL_05,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn perfectly_uniform() {
        let s = digit_stats_of(&[0, 1, 2, 3, 0, 1, 2, 3]).unwrap();
        assert_eq!(s.chi_square, 0.0);
        assert!(!s.reject_at_05);
        assert_eq!(s.counts, [2, 2, 2, 2]);
    }

    #[test]
    fn all_zeros() {
        // O = (8,0,0,0), E = 2: (36 + 4 + 4 + 4) / 2
        let s = digit_stats_of(&[0; 8]).unwrap();
        assert_eq!(s.chi_square, 24.0);
        assert!(s.reject_at_05);
    }

    #[test]
    fn too_short() {
        assert!(matches!(
            digit_stats_of(&[0, 1, 2]),
            Err(Error::InsufficientData(_))
        ));
        assert!(digit_stats_of(&[0, 1, 2, 3, 4, 1, 2, 3]).is_err());
    }

    #[test]
    fn permutation_invariant() {
        let mut d = vec![0u8, 3, 3, 1, 2, 2, 2, 0, 1, 3, 3, 3];
        let a = digit_stats_of(&d).unwrap();
        d.reverse();
        d.rotate_left(5);
        assert_eq!(a, digit_stats_of(&d).unwrap());
    }

    #[test]
    fn calibration_on_uniform_digits() {
        let accepted = (0..100u64)
            .filter(|&seed| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let digits: Vec<u8> = (0..10_000).map(|_| rng.gen_range(0..4)).collect();
                !digit_stats_of(&digits).unwrap().reject_at_05
            })
            .count();
        assert!(accepted >= 94, "accepted {accepted} of 100");
    }
}
