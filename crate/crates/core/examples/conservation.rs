//! iota(P_ess) + iota(Z_F) from a single zeta(1/2) evaluation, plus the axiom
//! checks that can be asserted on the catalog.

use fraczeta::cardinality::{axiom_suite, conservation_report};
use fraczeta::zeros::{bundled_zeros, digit_stats, digitize};
use fraczeta::zeta::ZetaParams;

fn main() -> fraczeta::Result<()> {
    let params = ZetaParams::new(10_000, 10, 60);
    let digits = digitize(&bundled_zeros(), 50, 1e-6)?;
    let report = conservation_report(params)?.with_digit_stats(digit_stats(&digits)?);
    println!("iota(P_ess) = {}", report.iota_pess);
    println!("iota(Z_F)   = {}", report.iota_zf);
    println!(
        "sum         = {} (exactly zero: {})",
        report.sum, report.sum_is_zero
    );
    println!("{}", report.caveat);

    for c in axiom_suite(params)?.checks {
        println!("{} {:?}: {}", c.axiom, c.status, c.detail);
    }
    Ok(())
}
