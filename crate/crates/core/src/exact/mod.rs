//! Exact construction of digit-restricted fractal stages and general
//! iterated-function-system steps over arbitrary-precision rationals.

mod grid;
mod ifs;
mod stage;

pub use grid::{
    make_named_spec, make_pess_spec, make_zf_spec, zf_spec_from_digits, GridSpec, Levels,
    NAMED_SETS,
};
pub use ifs::{
    apply_ifs_step, nesting_check, self_similarity_check, AffineMap, GeneralIfsSpec, IfsStep,
    SelfSimilarityReport,
};
pub(crate) use stage::ratio_string;
pub use stage::{
    address_to_point, build_stage, Address, IndexedInterval, Interval, Intervals, LeftNumerators,
    StageExport, StageSet, DEFAULT_ENUMERATION_CAP,
};
