//! Box-counting regression on exact stages, at aligned and unaligned scales.

use fraczeta::dimension::{aligned_scales, box_count, box_dimension_fit, write_samples_csv};
use fraczeta::exact::{build_stage, make_named_spec};
use num_rational::BigRational;

fn main() -> fraczeta::Result<()> {
    let pess = build_stage(&make_named_spec("pess")?, 12)?;
    let fit = box_dimension_fit(&pess, &aligned_scales(4, 12))?;
    println!("pess depth 12: slope {} r^2 {}", fit.value, fit.residual);
    write_samples_csv(&fit.sample_points, std::io::stdout().lock())?;

    let cantor = build_stage(&make_named_spec("classic-cantor")?, 10)?;
    let scales: Vec<BigRational> = (1..=6)
        .map(|k| BigRational::new(1.into(), (5i64.pow(k)).into()))
        .collect();
    let fit = box_dimension_fit(&cantor, &scales)?;
    println!(
        "classic Cantor on base-5 boxes: slope {:.4} r^2 {:.6}",
        fit.value, fit.residual
    );

    let eps = BigRational::new(1.into(), 10.into());
    println!(
        "pess boxes of size 1/10 at depth 12: {}",
        box_count(&pess, &eps)?
    );
    Ok(())
}
