use num_traits::ToPrimitive;
use serde::Serialize;

use super::similarity::decreasing_root;
use crate::error::{Error, Result};
use crate::exact::GeneralIfsSpec;

/// Default central-difference step for `alpha = -d tau / d q`.
pub const DEFAULT_DIFF_STEP: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MultifractalPoint {
    pub q: f64,
    pub tau: f64,
    pub alpha: f64,
    pub f: f64,
}

/// Moment exponent of a weighted self-similar measure: the root of
/// `sum p_i^q r_i^tau = 1`.
#[derive(Debug, Clone)]
pub struct MomentExponent {
    log_p: Vec<f64>,
    log_r: Vec<f64>,
}

impl MomentExponent {
    pub fn new(ifs: &GeneralIfsSpec) -> Result<Self> {
        let weights = ifs.weights().ok_or_else(|| {
            Error::input(format!(
                "`{}` has no weights; the multifractal spectrum needs a probability per map",
                ifs.label()
            ))
        })?;
        let log_p = weights
            .iter()
            .map(|w| w.to_f64().expect("weight in (0, 1]").ln())
            .collect();
        let log_r = ifs
            .ratios()
            .iter()
            .map(|r| r.to_f64().expect("ratio in (0, 1)").ln())
            .collect();
        Ok(Self { log_p, log_r })
    }

    pub fn tau(&self, q: f64) -> Result<f64> {
        let f = |t: f64| {
            self.log_p
                .iter()
                .zip(&self.log_r)
                .map(|(lp, lr)| (q * lp + t * lr).exp())
                .sum::<f64>()
                - 1.0
        };
        decreasing_root(f, -1.0, 1.0)
    }
}

/// `(q, tau(q), alpha(q), f(alpha))` for every `q` in the grid, with
/// `alpha = -tau'(q)` from a central difference of width `2 * step` and
/// `f = q alpha + tau`.
pub fn multifractal_spectrum(
    ifs: &GeneralIfsSpec,
    q_grid: &[f64],
    step: f64,
) -> Result<Vec<MultifractalPoint>> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::input(format!(
            "difference step must be positive, got {step}"
        )));
    }
    let exponent = MomentExponent::new(ifs)?;
    q_grid
        .iter()
        .map(|&q| {
            let tau = exponent.tau(q)?;
            let alpha = -(exponent.tau(q + step)? - exponent.tau(q - step)?) / (2.0 * step);
            Ok(MultifractalPoint {
                q,
                tau,
                alpha,
                f: q * alpha + tau,
            })
        })
        .collect()
}

/// Evenly spaced grid `from, from + step, ..., to` (inclusive up to rounding).
pub fn q_range(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if step.is_nan() || step <= 0.0 || to < from {
        return Err(Error::input("q range needs from <= to and a positive step"));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| from + i as f64 * step).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimension::similarity_dimension;
    use crate::exact::{make_named_spec, make_pess_spec, AffineMap};
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn binomial_ifs() -> GeneralIfsSpec {
        GeneralIfsSpec::new(
            vec![
                AffineMap::weighted(q(1, 2), q(0, 1), q(1, 3)),
                AffineMap::weighted(q(1, 2), q(1, 2), q(2, 3)),
            ],
            "binomial",
        )
        .unwrap()
    }

    #[test]
    fn pess_is_monofractal() {
        let ifs = make_pess_spec().to_ifs().unwrap();
        let grid = q_range(-5.0, 5.0, 0.5).unwrap();
        assert_eq!(grid.len(), 21);
        for p in multifractal_spectrum(&ifs, &grid, DEFAULT_DIFF_STEP).unwrap() {
            assert!((p.tau - (1.0 - p.q) / 2.0).abs() < 1e-12, "{p:?}");
            assert!((p.alpha - 0.5).abs() < 1e-9, "{p:?}");
            assert!((p.f - 0.5).abs() < 1e-9, "{p:?}");
        }
    }

    #[test]
    fn tau_at_zero_and_one() {
        for ifs in [
            binomial_ifs(),
            make_named_spec("mod6").unwrap().to_ifs().unwrap(),
        ] {
            let e = MomentExponent::new(&ifs).unwrap();
            let s = similarity_dimension(&ifs.ratios()).unwrap().value;
            assert!((e.tau(0.0).unwrap() - s).abs() < 1e-12);
            assert!(e.tau(1.0).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn binomial_measure_closed_form() {
        // tau(q) = log2(p1^q + p2^q) for ratios 1/2
        let ifs = binomial_ifs();
        let pts =
            multifractal_spectrum(&ifs, &[-3.0, -1.0, 0.0, 2.0, 4.0], DEFAULT_DIFF_STEP).unwrap();
        for p in pts {
            let closed = ((1.0f64 / 3.0).powf(p.q) + (2.0f64 / 3.0).powf(p.q)).log2();
            assert!((p.tau - closed).abs() < 1e-12, "{p:?}");
            assert!((p.f - (p.q * p.alpha + p.tau)).abs() < 1e-15);
        }
    }

    #[test]
    fn equal_weights_collapse_to_similarity_dimension() {
        for name in ["cantor13", "classic-cantor", "mod6", "mod8"] {
            let ifs = make_named_spec(name).unwrap().to_ifs().unwrap();
            let s = similarity_dimension(&ifs.ratios()).unwrap().value;
            for p in
                multifractal_spectrum(&ifs, &q_range(-4.0, 4.0, 1.0).unwrap(), DEFAULT_DIFF_STEP)
                    .unwrap()
            {
                assert!(
                    (p.alpha - s).abs() < 1e-9 && (p.f - s).abs() < 1e-9,
                    "{name} {p:?}"
                );
            }
        }
    }

    #[test]
    fn tau_is_convex() {
        let ifs = binomial_ifs();
        let e = MomentExponent::new(&ifs).unwrap();
        let grid = q_range(-6.0, 6.0, 0.25).unwrap();
        let taus: Vec<f64> = grid.iter().map(|&q| e.tau(q).unwrap()).collect();
        for w in taus.windows(3) {
            assert!(w[0] - 2.0 * w[1] + w[2] >= -1e-9);
        }
    }

    #[test]
    fn missing_weights_rejected() {
        let ifs = GeneralIfsSpec::new(vec![AffineMap::new(q(1, 4), q(0, 1))], "nw").unwrap();
        assert!(matches!(
            multifractal_spectrum(&ifs, &[0.0], DEFAULT_DIFF_STEP),
            Err(Error::Input(_))
        ));
    }
}
