//! Exact stages of the base-4 set keeping digits 1 and 3.
//!
//! `cargo run --example construct_pess -- 4`

use fraczeta::exact::{address_to_point, build_stage, make_pess_spec, nesting_check, Address};

fn main() -> fraczeta::Result<()> {
    let depth: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let spec = make_pess_spec();
    for n in 0..=depth {
        let stage = build_stage(&spec, n)?;
        println!(
            "stage {n}: {} intervals of length {}, total length {}",
            stage.interval_count(),
            stage.interval_length(),
            stage.total_length()
        );
    }
    let stage = build_stage(&spec, depth)?;
    for iv in stage.intervals().take(8) {
        println!("  [{}, {}]", iv.left, iv.right);
    }
    println!(
        "nested through depth {depth}: {}",
        nesting_check(&spec, depth)?
    );
    let x = address_to_point(&spec, &Address(vec![0, 1, 1, 0]))?;
    println!("address 0.1.1.0 -> {x}");
    stage.write_csv(std::io::stdout().lock(), 16)?;
    Ok(())
}
