//! Brute-force ground truth for the structured computations.

mod enumerate;
mod slice;
mod suite;

pub use enumerate::CandidateSpace;
pub use slice::{
    compare_slices, exhaustive_null_slice, generators_from_slice, ideal_slice, random_ideal_members, Decider,
    IdealSlice, Mismatch, NullSlice, SliceReport, MISMATCH_SAMPLE,
};
pub use suite::{
    default_bound, random_lifts, verify_suite, CheckReport, CheckStatus, SuiteOptions, SuiteReport, DEFAULT_LIFT_COUNT,
    DEFAULT_PI_CAP, DEFAULT_SLICE_CAP,
};
