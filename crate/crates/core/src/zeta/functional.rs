use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::euler_maclaurin::{zeta_euler_maclaurin, ZetaParams};
use super::gamma::gamma_bf;
use super::hp::{HpReal, Working};
use crate::error::{Error, Result};
use crate::exact::ratio_string;

#[derive(Debug, Clone, Serialize)]
pub struct FunctionalEquationCheck {
    #[serde(serialize_with = "ser_ratio")]
    pub s: BigRational,
    /// `zeta(s)` evaluated directly.
    pub direct: HpReal,
    /// `chi(s) zeta(1 - s)` with `chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s)`.
    pub reflected: HpReal,
    pub chi: HpReal,
    pub residual: f64,
}

fn ser_ratio<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(r))
}

/// `|zeta(s) - chi(s) zeta(1-s)|` for `s` in `(0, 1)`, both zeta values from
/// Euler-Maclaurin with the same parameters.
pub fn functional_equation_residual(
    s: &BigRational,
    params: ZetaParams,
) -> Result<FunctionalEquationCheck> {
    if !(s.is_positive() && *s < BigRational::one()) {
        return Err(Error::Domain(format!(
            "the functional-equation check needs s in (0, 1), got {}",
            ratio_string(s)
        )));
    }
    let reflect = BigRational::one() - s;
    let direct = zeta_euler_maclaurin(s, params)?;
    let mirror = zeta_euler_maclaurin(&reflect, params)?;

    let digits = params.precision_digits;
    let w = Working::new(digits);
    let sf = w.rational(s);
    let one_minus_s = w.rational(&reflect);
    let pi = w.pi();
    let two_pow_s = w.exp(&w.mul(&sf, &w.ln(&w.int(2))));
    let pi_pow = w.exp(&w.mul(&w.sub(&sf, &w.int(1)), &w.ln(&pi)));
    let sine = w.sin(&w.div(&w.mul(&pi, &sf), &w.int(2)));
    let gamma = gamma_bf(&w, &one_minus_s, digits);
    let chi = w.mul(&w.mul(&two_pow_s, &pi_pow), &w.mul(&sine, &gamma));
    let reflected = w.mul(&chi, mirror.value.as_bigfloat());

    let reflected = w.wrap(reflected, digits);
    let residual = direct.value.abs_diff_f64(&reflected);
    Ok(FunctionalEquationCheck {
        s: s.clone(),
        direct: direct.value,
        reflected,
        chi: w.wrap(chi, digits),
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn residual_is_tiny_inside_the_strip() {
        let p = ZetaParams::new(500, 10, 40);
        for s in [q(3, 10), q(1, 2), q(7, 10), q(1, 10), q(9, 10)] {
            let c = functional_equation_residual(&s, p).unwrap();
            assert!(c.residual < 1e-10, "s = {s}: {}", c.residual);
        }
    }

    #[test]
    fn chi_of_one_half_is_one() {
        let c = functional_equation_residual(&q(1, 2), ZetaParams::new(200, 10, 40)).unwrap();
        assert!((c.chi.to_f64() - 1.0).abs() < 1e-30);
    }

    #[test]
    fn outside_the_strip_is_rejected() {
        let p = ZetaParams::new(100, 5, 30);
        assert!(matches!(
            functional_equation_residual(&q(0, 1), p),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            functional_equation_residual(&q(1, 1), p),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            functional_equation_residual(&q(3, 2), p),
            Err(Error::Domain(_))
        ));
    }
}
