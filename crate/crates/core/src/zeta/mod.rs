//! Riemann zeta at real arguments by Euler-Maclaurin summation, a real
//! Gamma function, and the functional-equation consistency check.

mod bernoulli;
mod euler_maclaurin;
mod functional;
mod gamma;
mod hp;

pub use bernoulli::{bernoulli, MAX_INDEX as BERNOULLI_MAX_INDEX};
pub use euler_maclaurin::{
    zeta_at, zeta_euler_maclaurin, ZetaParams, ZetaValue, DEFAULT_PRECISION_DIGITS,
    MAX_CORRECTIONS, MIN_PRECISION_DIGITS,
};
pub use functional::{functional_equation_residual, FunctionalEquationCheck};
pub use gamma::gamma_real;
pub use hp::HpReal;

pub(crate) use euler_maclaurin::half;
