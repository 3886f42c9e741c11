use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::gf2::is_power_of_two;
use crate::seq::{generate, Rule, SequenceRun};

pub fn even_terms(run: &SequenceRun) -> Vec<u64> {
    run.terms().iter().copied().filter(|t| t % 2 == 0).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum EvenVerdict {
    /// Exactly `{2, 2n}` and `n - 1` is not a power of two.
    TwoEvens { evens: Vec<u64> },
    /// `{2, 2n, 2n^2 + 2}` present and `n - 1` is a power of two.
    ThreeEvensAtLeast { evens: Vec<u64> },
    Violation { evens: Vec<u64>, offending: Option<u64>, reason: String },
}

impl EvenVerdict {
    pub fn evens(&self) -> &[u64] {
        match self {
            Self::TwoEvens { evens } | Self::ThreeEvensAtLeast { evens } | Self::Violation { evens, .. } => evens,
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, Self::Violation { .. })
    }
}

pub fn default_even_bound(n: u64) -> u64 {
    4 * n * n + 16
}

fn require_odd(n: u64) -> Result<()> {
    if n < 5 || n.is_multiple_of(2) {
        return invalid(format!("n must be odd and at least 5, got {n}"));
    }
    Ok(())
}

/// Generates `V(2,n)` up to `bound` and classifies its even terms.
pub fn verify_even_theorem(n: u64, bound: u64) -> Result<EvenVerdict> {
    require_odd(n)?;
    if bound < default_even_bound(n) {
        return invalid(format!("bound {bound} is below 4n^2+16 = {}", default_even_bound(n)));
    }
    let run = generate(&Rule::v(), &[2, n], bound)?;
    let evens = even_terms(&run);
    let third = 2 * n * n + 2;
    let verdict = if is_power_of_two((n - 1) as usize) {
        if [2, 2 * n, third].iter().all(|e| evens.contains(e)) {
            EvenVerdict::ThreeEvensAtLeast { evens }
        } else {
            EvenVerdict::Violation {
                offending: None,
                reason: format!("expected 2, {}, {third} among the even terms", 2 * n),
                evens,
            }
        }
    } else if evens == [2, 2 * n] {
        EvenVerdict::TwoEvens { evens }
    } else {
        let offending = evens.iter().copied().find(|&e| e != 2 && e != 2 * n);
        EvenVerdict::Violation { offending, reason: format!("expected exactly 2 and {}", 2 * n), evens }
    };
    Ok(verdict)
}

/// The explicit initial segment `V(2,n) ∩ [2, 5n+2]`.
pub fn v2n_initial_segment(n: u64) -> Vec<u64> {
    let mut s = BTreeSet::from([2, 2 * n, 5 * n + 2]);
    s.extend((n..2 * n).step_by(2));
    s.extend((2 * n + 1..=3 * n - 2).step_by(2));
    s.extend((3 * n + 2..=5 * n - 4).step_by(4));
    s.into_iter().collect()
}

pub fn check_initial_segment_v2n(n: u64) -> Result<bool> {
    require_odd(n)?;
    let run = generate(&Rule::v(), &[2, n], 5 * n + 2)?;
    Ok(run.terms() == v2n_initial_segment(n))
}

/// Outcome of a bounded search for counterexamples. It never proves anything.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FalsificationReport {
    pub claim: String,
    pub bound: u64,
    /// Even terms present but not predicted.
    pub extra: Vec<u64>,
    /// Predicted terms at most `bound` that were not generated.
    pub missing: Vec<u64>,
}

impl FalsificationReport {
    pub fn counterexample_found(&self) -> bool {
        !self.extra.is_empty() || !self.missing.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.counterexample_found() {
            format!("{}: counterexample at bound {} (extra {:?}, missing {:?})", self.claim, self.bound, self.extra, self.missing)
        } else {
            format!("{}: no counterexample up to {}", self.claim, self.bound)
        }
    }
}

fn compare_evens(claim: String, bound: u64, evens: &[u64], predicted: &[u64]) -> FalsificationReport {
    let got: BTreeSet<u64> = evens.iter().copied().collect();
    let want: BTreeSet<u64> = predicted.iter().copied().filter(|&e| e <= bound).collect();
    FalsificationReport {
        claim,
        bound,
        extra: got.difference(&want).copied().collect(),
        missing: want.difference(&got).copied().collect(),
    }
}

/// Looks for a fourth even term of `V(2,n)` when `n - 1` is a power of two.
pub fn scan_fourth_even_term(n: u64, bound: u64) -> Result<FalsificationReport> {
    require_odd(n)?;
    if !is_power_of_two((n - 1) as usize) {
        return invalid(format!("n - 1 = {} is not a power of two", n - 1));
    }
    let run = generate(&Rule::v(), &[2, n], bound)?;
    let claim = format!("V(2,{n}) has exactly the even terms 2, 2n, 2n^2+2");
    Ok(compare_evens(claim, bound, &even_terms(&run), &[2, 2 * n, 2 * n * n + 2]))
}

/// Conjectured complete even-term lists of `V(a,b)` for `a` in `4..=16` even,
/// as `(coefficient of b, constant)` pairs.
pub fn conjectured_v_evens(a: u64) -> Option<&'static [(u64, i64)]> {
    let list: &'static [(u64, i64)] = match a {
        4 => &[(0, 4), (2, 0), (4, 4), (12, -4)],
        6 => &[(0, 6), (2, 0), (4, 6)],
        8 => &[(0, 8), (2, 0), (4, 8), (8, 8), (24, -8)],
        10 => &[(0, 10), (2, 0), (4, 10), (8, 10)],
        12 => &[(0, 12), (2, 0), (4, 12), (8, 12), (12, 12), (20, 12), (28, -12), (38, 48)],
        14 => &[(0, 14), (2, 0), (4, 14), (8, 14), (12, 14), (22, 14), (30, -14)],
        16 => &[(0, 16), (2, 0), (4, 16), (8, 16), (12, 16), (16, 16), (24, 16), (32, 16), (44, -16), (44, 16)],
        _ => return None,
    };
    Some(list)
}

/// Compares the even terms of `V(a,b)` up to `bound` with the conjectured list.
pub fn scan_v_even_list(a: u64, b: u64, bound: u64) -> Result<FalsificationReport> {
    let Some(list) = conjectured_v_evens(a) else {
        return invalid(format!("no conjectured list for a = {a}"));
    };
    if b.is_multiple_of(2) || b <= 2 * a || num_integer::gcd(a, b) != 1 {
        return invalid(format!("need b odd, coprime to a and above 2a, got a = {a}, b = {b}"));
    }
    let predicted: Vec<u64> = list.iter().map(|&(m, c)| (m * b) as i64 + c).map(|v| v as u64).collect();
    let run = generate(&Rule::v(), &[a, b], bound)?;
    Ok(compare_evens(format!("V({a},{b}) even terms"), bound, &even_terms(&run), &predicted))
}
