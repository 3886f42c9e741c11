use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::seq::{generate, Rule};

/// Comparison of `Z_(2,1)(1,b)` against the residue-class pattern for
/// `b ≡ 3 mod 16`, over the class `3 mod 4` up to `bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mod16PatternReport {
    pub b: u64,
    pub bound: u64,
    pub unexpected_members: Vec<u64>,
    pub missing_members: Vec<u64>,
    pub unexpected_unrepresented: Vec<u64>,
    pub missing_unrepresented: Vec<u64>,
}

impl Mod16PatternReport {
    pub fn holds(&self) -> bool {
        self.unexpected_members.is_empty()
            && self.missing_members.is_empty()
            && self.unexpected_unrepresented.is_empty()
            && self.missing_unrepresented.is_empty()
    }
}

/// Predicted members of class `3 mod 4`.
pub fn mod16_members(b: u64) -> BTreeSet<u64> {
    let mut s: BTreeSet<u64> = (b..=2 * b - 3).step_by(4).collect();
    s.extend((2 * b + 5..=3 * b - 6).step_by(8));
    s.extend([9 * b - 36, 9 * b - 16, 11 * b - 42]);
    s
}

/// Predicted non-generator values of class `3 mod 4` without a representation.
pub fn mod16_unrepresented(b: u64) -> BTreeSet<u64> {
    let mut s: BTreeSet<u64> = (3..=b - 4).step_by(4).collect();
    s.extend((9 * b - 12..=11 * b - 46).step_by(4));
    s
}

pub fn mod16_pattern_report(b: u64) -> Result<Mod16PatternReport> {
    if b % 16 != 3 || b < 35 {
        return invalid(format!("need b ≡ 3 mod 16 and b >= 35, got {b}"));
    }
    let bound = 12 * b;
    let run = generate(&Rule::weighted(&[2, 1])?, &[1, b], bound)?;
    let class = |v: &u64| v % 4 == 3;
    let members: BTreeSet<u64> = run.terms().iter().copied().filter(class).collect();
    let unrepresented: BTreeSet<u64> =
        (3..=bound).step_by(4).filter(|&v| v != b && !run.contains(v) && run.rep_count(v) == 0).collect();
    let want_members = mod16_members(b);
    let want_unrep = mod16_unrepresented(b);
    Ok(Mod16PatternReport {
        b,
        bound,
        unexpected_members: members.difference(&want_members).copied().collect(),
        missing_members: want_members.difference(&members).copied().collect(),
        unexpected_unrepresented: unrepresented.difference(&want_unrep).copied().collect(),
        missing_unrepresented: want_unrep.difference(&unrepresented).copied().collect(),
    })
}

/// Generates `Z_(2,1)(1,b)` to `12b` and checks both lists for class `3 mod 4`.
pub fn check_pattern_2_1_mod16(b: u64) -> Result<bool> {
    Ok(mod16_pattern_report(b)?.holds())
}
