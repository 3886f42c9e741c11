//! Ulam-type sets in the quarter plane and their link to `V(a,b)` and `U(a,b)`.
//!
//! A point `(i, j)` stands for the integer `i a + j b`. Inside the box
//! `0 <= i < b`, `0 <= j < a` this correspondence preserves every additive
//! relation, so the one-dimensional sequence and the lattice set agree there.

mod freiman;
mod set;
mod structure;

pub use freiman::{
    check_no_multiples, check_u_box_interior, check_u_even_prediction, check_v_even_count, check_v_initial,
    freiman_box_check, predicted_u_even_counts, predicted_v_initial, v_even_count_bound, BoxEquivalenceReport,
    Family, Mismatch, UEvenPrediction,
};
pub use set::{generate_lattice, LatticeSet, Point};
pub use structure::{
    check_w_modified, check_w_ulam, in_w_modified, in_w_ulam, w_modified_mismatches, w_ulam_mismatches,
    StructureMismatch,
};
