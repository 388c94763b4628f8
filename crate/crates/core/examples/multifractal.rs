//! tau(q), alpha(q) and f(alpha) for weighted similarity systems.

use fraczeta::dimension::{multifractal_spectrum, q_range, DEFAULT_DIFF_STEP};
use fraczeta::exact::{make_pess_spec, AffineMap, GeneralIfsSpec};
use num_rational::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() -> fraczeta::Result<()> {
    let grid = q_range(-5.0, 5.0, 1.0)?;

    println!("pess with equal weights (monofractal):");
    for p in multifractal_spectrum(&make_pess_spec().to_ifs()?, &grid, DEFAULT_DIFF_STEP)? {
        println!(
            "  q {:>5}  tau {:>8.4}  alpha {:.9}  f {:.9}",
            p.q, p.tau, p.alpha, p.f
        );
    }

    let binomial = GeneralIfsSpec::new(
        vec![
            AffineMap::weighted(q(1, 4), q(1, 4), q(1, 4)),
            AffineMap::weighted(q(1, 4), q(3, 4), q(3, 4)),
        ],
        "pess-biased",
    )?;
    println!("pess with weights 1/4, 3/4:");
    for p in multifractal_spectrum(&binomial, &grid, DEFAULT_DIFF_STEP)? {
        println!(
            "  q {:>5}  tau {:>8.4}  alpha {:.6}  f {:.6}",
            p.q, p.tau, p.alpha, p.f
        );
    }
    Ok(())
}
