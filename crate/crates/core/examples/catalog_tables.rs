//! The informational-cardinality catalog as text tables and JSON.

use fraczeta::cardinality::{catalog, table1_text, table2_text};
use fraczeta::zeta::ZetaParams;

fn main() -> fraczeta::Result<()> {
    let cat = catalog(ZetaParams::default())?;
    println!("{}", table1_text(&cat));
    println!("{}", table2_text(&cat)?);
    for e in &cat {
        println!(
            "{:<14} {}  provenance {:?}",
            e.name, e.cardinality, e.cardinality.provenance
        );
    }
    println!("{}", serde_json::to_string_pretty(&cat[0])?);
    Ok(())
}
