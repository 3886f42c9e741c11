//! Arithmetic in `GF(2)[t]/(t^n + t + 1)` and the identities it carries.

mod checks;
mod families;
mod poly;

pub use checks::{
    check_pq_duality, check_q_r_link, check_r_basic, check_s_family, check_sierpinski,
    check_third_even_term, p2kn_closed_form, second_rep_witness, CheckResult, DualityReport,
    IdentityFailure, SecondRepWitness,
};
pub use families::{
    is_power_of_two, p2kn_block_form, p_k, pascal_mod2_dump, q_j, r_k, r_rows, s_l, table_dump,
    two_adic_split,
};
pub use poly::Gf2Poly;
