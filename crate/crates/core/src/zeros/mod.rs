//! Zeta-zero ingestion, base-4 digitization, reordering, and digit
//! uniformity statistics.

mod digitize;
mod stats;
mod table;

pub use digitize::{
    digitize, pi_to, DigitEntry, DigitSequence, DEFAULT_BOUNDARY_TOL, MAX_DIGITIZE_PRECISION,
    MIN_DIGITIZE_PRECISION, PI_100,
};
pub use stats::{digit_stats, digit_stats_of, DigitStats, CHI2_3DF_CRITICAL_05, MIN_STATS_LENGTH};
pub use table::{
    bundled_zeros, parse_zero_file, parse_zero_text, reorder, reorder_by_weights, ReorderMode,
    ZeroOrdering, ZeroOrdinate, ZeroSource, ZeroTable, FIRST_100_ZEROS,
};
