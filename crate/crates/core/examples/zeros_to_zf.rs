//! Digitizes the bundled zeta zeros, tests digit uniformity, and builds the
//! zero-driven set Z_F in standard and shuffled order.

use fraczeta::dimension::{aligned_scales, box_dimension_fit};
use fraczeta::exact::{build_stage, make_zf_spec};
use fraczeta::zeros::{bundled_zeros, digit_stats, digitize, reorder, ReorderMode};

fn main() -> fraczeta::Result<()> {
    let table = bundled_zeros();
    let digits = digitize(&table, 50, 1e-6)?;
    for e in digits.entries.iter().take(6) {
        println!("gamma_{:<3} = {:<36} a = {}", e.n, e.gamma, e.a);
    }
    let text: String = digits.digits().iter().map(u8::to_string).collect();
    println!("digits: {text}");
    let stats = digit_stats(&digits)?;
    println!(
        "counts {:?}, chi-square {:.3}, reject uniformity at 5%: {}",
        stats.counts, stats.chi_square, stats.reject_at_05
    );

    for (label, t) in [
        ("standard", table.clone()),
        ("shuffled (seed 7)", reorder(&table, ReorderMode::Random, 7)),
    ] {
        let spec = make_zf_spec(&digitize(&t, 50, 1e-6)?)?;
        let stage = build_stage(&spec, 12)?;
        let fit = box_dimension_fit(&stage, &aligned_scales(4, 12))?;
        println!(
            "Z_F {label}: stage 12 has {} intervals, box dimension {}",
            stage.interval_count(),
            fit.value
        );
    }
    Ok(())
}
