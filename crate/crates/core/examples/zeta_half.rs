//! zeta(1/2) by Euler-Maclaurin summation, its convergence in N, and the
//! functional equation inside the critical strip.

use fraczeta::zeta::{functional_equation_residual, gamma_real, zeta_at, ZetaParams};
use num_rational::BigRational;

fn main() -> fraczeta::Result<()> {
    let z = zeta_at("1/2", ZetaParams::new(10_000, 10, 50))?;
    println!("zeta(1/2) = {}", z.value);
    println!("first omitted correction: {:e}", z.error_bound);

    for n in [10, 100, 1000] {
        let z = zeta_at("1/2", ZetaParams::new(n, 10, 60))?;
        println!(
            "N = {n:>5}: {}  (bound {:e})",
            z.value.to_sig_string(40),
            z.error_bound
        );
    }

    println!(
        "zeta(2) = {}",
        zeta_at("2", ZetaParams::new(1000, 10, 40))?.value
    );
    println!(
        "Gamma(1/2) = {}",
        gamma_real(&BigRational::new(1.into(), 2.into()), 40)?
    );

    for s in ["0.3", "0.5", "0.7"] {
        let s = fraczeta::rational::parse_rational(s).expect("literal");
        let check = functional_equation_residual(&s, ZetaParams::new(2000, 10, 40))?;
        println!(
            "functional equation at s = {s}: residual {:e}",
            check.residual
        );
    }
    Ok(())
}
