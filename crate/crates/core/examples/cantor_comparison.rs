//! Similarity dimensions of the built-in digit sets, and the lexicographic
//! comparison of P_ess against C_1/3.

use fraczeta::cardinality::{catalog_entry, compare, compare_extended};
use fraczeta::dimension::similarity_dimension;
use fraczeta::exact::{make_named_spec, self_similarity_check, NAMED_SETS};
use fraczeta::zeta::ZetaParams;

fn main() -> fraczeta::Result<()> {
    for name in NAMED_SETS {
        let spec = make_named_spec(name)?;
        let dim = similarity_dimension(&spec.ratios()?)?;
        let selfsim = self_similarity_check(&spec, 6)?;
        println!(
            "{name:>15}: {spec}  dimension {:.15}  self-similar to depth 6: {}",
            dim.value, selfsim.holds
        );
    }

    let params = ZetaParams::default();
    let pess = catalog_entry("pess", params)?;
    let c13 = catalog_entry("cantor13", params)?;
    let r = compare(&pess.cardinality, &c13.cardinality);
    println!("\nI(P_ess) = {}", pess.cardinality);
    println!("I(C_1/3) = {}", c13.cardinality);
    for step in &r.trace {
        println!(
            "  {}: {} vs {} -> {}",
            step.component, step.left, step.right, step.outcome
        );
    }
    println!("result: {}", r.outcome);
    println!(
        "componentwise: {}",
        compare_extended(&pess.cardinality, &c13.cardinality)?
    );
    Ok(())
}
