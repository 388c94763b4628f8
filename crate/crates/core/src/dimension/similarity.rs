use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use super::DimensionEstimate;
use crate::error::{Error, Result};

/// Absolute tolerance the Hutchinson root must reach.
pub const ROOT_TOLERANCE: f64 = 1e-12;

/// Root of a strictly decreasing function by bisection.
///
/// The bracket starts at `[lo, hi]` and is widened by doubling its width in
/// whichever direction the sign test demands. Iteration continues until the
/// bracket stops shrinking in `f64`, which is well below [`ROOT_TOLERANCE`].
pub(crate) fn decreasing_root(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut widen = 0;
    while f(hi) > 0.0 {
        let w = hi - lo;
        lo = hi;
        hi += 2.0 * w;
        widen += 1;
        if widen > 200 || !hi.is_finite() {
            return Err(Error::Domain(
                "no sign change found above the bracket".into(),
            ));
        }
    }
    while f(lo) < 0.0 {
        let w = hi - lo;
        hi = lo;
        lo -= 2.0 * w;
        widen += 1;
        if widen > 200 || !lo.is_finite() {
            return Err(Error::Domain(
                "no sign change found below the bracket".into(),
            ));
        }
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = f(mid);
        if v == 0.0 {
            return Ok(mid);
        }
        if v > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    debug_assert!(hi - lo <= ROOT_TOLERANCE);
    Ok(0.5 * (lo + hi))
}

fn ratio_f64(r: &BigRational) -> Result<f64> {
    if !r.is_positive() || *r >= BigRational::one() {
        return Err(Error::input(format!("ratio {r} is not in (0, 1)")));
    }
    r.to_f64()
        .ok_or_else(|| Error::input(format!("ratio {r} is not representable")))
}

/// Unique `s >= 0` with `sum r_i^s = 1`.
///
/// For equal ratios the closed form `log N / log(1/r)` is returned and the
/// bisection root is kept as a cross-check; `residual` holds their gap.
/// Otherwise `residual` is `|sum r_i^s - 1|` at the returned root.
pub fn similarity_dimension(ratios: &[BigRational]) -> Result<DimensionEstimate> {
    if ratios.is_empty() {
        return Err(Error::input(
            "similarity dimension needs at least one ratio",
        ));
    }
    let rs = ratios.iter().map(ratio_f64).collect::<Result<Vec<_>>>()?;
    let logs: Vec<f64> = rs.iter().map(|r| r.ln()).collect();
    if rs.len() == 1 {
        return Ok(DimensionEstimate::similarity(0.0, 0.0));
    }
    let hutchinson = |s: f64| logs.iter().map(|l| (s * l).exp()).sum::<f64>() - 1.0;
    let root = decreasing_root(hutchinson, 0.0, 1.0)?;
    if ratios.iter().all(|r| r == &ratios[0]) {
        let closed = (rs.len() as f64).ln() / -logs[0];
        return Ok(DimensionEstimate::similarity(closed, (closed - root).abs()));
    }
    Ok(DimensionEstimate::similarity(root, hutchinson(root).abs()))
}

/// Closed form and bisection side by side, for equal-ratio systems.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClosedFormCheck {
    pub closed_form: f64,
    pub bisection: f64,
}

pub fn equal_ratio_cross_check(n: usize, ratio: &BigRational) -> Result<ClosedFormCheck> {
    let r = ratio_f64(ratio)?;
    if n < 2 {
        return Err(Error::input("cross-check needs at least two maps"));
    }
    let closed_form = (n as f64).ln() / -r.ln();
    let bisection = decreasing_root(|s| n as f64 * r.powf(s) - 1.0, 0.0, 1.0)?;
    Ok(ClosedFormCheck {
        closed_form,
        bisection,
    })
}
