//! Measurements on finished runs.

mod density;
mod evens;
mod jumps;
mod patterns;
mod periodicity;
mod progressions;
mod quasi;

pub use density::{density_profile, DensityProfile, DEFAULT_TAIL_FRACTION};
pub use evens::{
    check_initial_segment_v2n, conjectured_v_evens, default_even_bound, even_terms, scan_fourth_even_term,
    scan_v_even_list, v2n_initial_segment, verify_even_theorem, EvenVerdict, FalsificationReport,
};
pub use jumps::{detect_quasi_regular, linear_fit, JumpStructure, DEFAULT_JUMP_FACTOR};
pub use patterns::{check_pattern_2_1_mod16, mod16_members, mod16_pattern_report, mod16_unrepresented, Mod16PatternReport};
pub use periodicity::{canonical_rotation, detect_regularity, differences, PeriodicityReport};
pub use progressions::{max_ap_length, ApRun};
pub use quasi::{
    mod_histogram, quasiperiod_scan, near_comb, residue_histogram, tv_from_uniform, QuasiperiodReport, DEFAULT_BINS, MIN_TERMS,
    TRANSIENT_CUT,
};
