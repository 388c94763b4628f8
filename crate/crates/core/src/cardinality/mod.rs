//! Informational cardinality `(alpha, delta, iota)`: lexicographic and
//! componentwise comparison, the built-in catalog, the conservation report
//! and the axiom checks.

mod catalog;
mod conservation;
mod info;
mod render;

pub use catalog::{catalog, catalog_entry, CatalogEntry, Structure, CATALOG_NAMES};
pub use conservation::{
    axiom_suite, conservation_report, AxiomCheck, AxiomReport, AxiomStatus, ConservationReport,
    CONSERVATION_CAVEAT,
};
pub use info::{
    compare, compare_extended, CompareMethod, CompareResult, Comparison, ComponentProvenance,
    ComponentStep, Delta, Dominance, InfoCardinality, LogRatio, Provenance, COMPARE_TOLERANCE,
};
pub use render::{table1_rows, table1_text, table2_rows, table2_text, Table1Row, Table2Row};
