use serde::Serialize;

use crate::error::{invalid, Result};
use crate::seq::SequenceRun;

/// An eventually periodic difference sequence: from term index `transient`
/// on, `terms[i + period] - terms[i] == fundamental_difference`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityReport {
    pub transient: usize,
    pub period: usize,
    pub fundamental_difference: u64,
    /// One period of differences, rotated to its lexicographically smallest form.
    pub pattern: Vec<u64>,
    pub confirmed_periods: usize,
}

impl PeriodicityReport {
    pub fn density(&self) -> f64 {
        self.period as f64 / self.fundamental_difference as f64
    }

    /// Whether `pattern` equals `other` up to rotation.
    pub fn pattern_matches(&self, other: &[u64]) -> bool {
        other.len() == self.pattern.len() && canonical_rotation(other) == self.pattern
    }
}

pub fn differences(terms: &[u64]) -> Vec<u64> {
    terms.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Lexicographically smallest rotation.
pub fn canonical_rotation(xs: &[u64]) -> Vec<u64> {
    let n = xs.len();
    let rotation = |s: usize| xs[s..].iter().chain(&xs[..s]);
    let best = (0..n).min_by(|&a, &b| rotation(a).cmp(rotation(b))).unwrap_or(0);
    rotation(best).copied().collect()
}

/// Finds the smallest period `N` whose repetition reaches the end of the run
/// and, for that `N`, the earliest start.
///
/// A candidate is accepted when the periodic stretch holds at least
/// `min_confirm` full periods and covers at least half of the differences,
/// so that a short coincidental repeat at the very end is not mistaken for
/// the period.
pub fn detect_regularity(run: &SequenceRun, min_confirm: usize) -> Result<Option<PeriodicityReport>> {
    if min_confirm < 3 {
        return invalid(format!("min_confirm must be at least 3, got {min_confirm}"));
    }
    let terms = run.terms();
    if terms.len() < 3 {
        return invalid(format!("need at least 3 terms, got {}", terms.len()));
    }
    Ok(detect_in_differences(&differences(terms), min_confirm))
}

fn detect_in_differences(d: &[u64], min_confirm: usize) -> Option<PeriodicityReport> {
    let m = d.len();
    for period in 1..=m / min_confirm {
        // Earliest start: one past the last index that breaks the repetition.
        let start = (0..m - period).rev().find(|&i| d[i] != d[i + period]).map_or(0, |i| i + 1);
        let stretch = m - start;
        if stretch < min_confirm * period || 2 * stretch < m {
            continue;
        }
        let pattern = &d[start..start + period];
        return Some(PeriodicityReport {
            transient: start,
            period,
            fundamental_difference: pattern.iter().sum(),
            pattern: canonical_rotation(pattern),
            confirmed_periods: stretch / period,
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{generate, Rule};
    use proptest::prelude::*;

    #[test]
    fn rotation_examples() {
        assert_eq!(canonical_rotation(&[22, 1, 2]), [1, 2, 22]);
        assert_eq!(canonical_rotation(&[2, 22, 1]), [1, 2, 22]);
        assert_eq!(canonical_rotation(&[3, 1, 1, 2, 1, 1]), [1, 1, 2, 1, 1, 3]);
        assert_eq!(canonical_rotation(&[5]), [5]);
    }

    proptest! {
        #[test]
        fn rotation_is_minimal(xs in proptest::collection::vec(0u64..4, 1..12), r in 0usize..12) {
            let n = xs.len();
            let c = canonical_rotation(&xs);
            let rotated: Vec<u64> = (0..n).map(|i| xs[(i + r) % n]).collect();
            prop_assert_eq!(canonical_rotation(&rotated), c.clone());
            for s in 0..n {
                let rot: Vec<u64> = (0..n).map(|i| xs[(i + s) % n]).collect();
                prop_assert!(c <= rot);
            }
        }

        #[test]
        fn planted_period_is_found(
            prefix in proptest::collection::vec(1u64..50, 0..20),
            pattern in proptest::collection::vec(1u64..5, 1..8),
            reps in 20usize..30,
        ) {
            let mut d = prefix.clone();
            for _ in 0..reps {
                d.extend_from_slice(&pattern);
            }
            let rep = detect_in_differences(&d, 3).expect("period present");
            prop_assert!(rep.period <= pattern.len());
            prop_assert_eq!(pattern.len() % rep.period, 0);
            prop_assert!(rep.transient <= prefix.len());
        }
    }

    #[test]
    fn odd_numbers() {
        let run = generate(&Rule::v(), &[1, 2], 400).unwrap();
        let rep = detect_regularity(&run, 3).unwrap().unwrap();
        assert_eq!((rep.period, rep.fundamental_difference), (1, 2));
        assert_eq!(rep.transient, 2);
    }

    #[test]
    fn triple_sequence_period() {
        let run = generate(&Rule::weighted(&[1, 1, 1]).unwrap(), &[1, 2, 3], 2000).unwrap();
        let rep = detect_regularity(&run, 3).unwrap().unwrap();
        assert_eq!((rep.period, rep.fundamental_difference), (3, 25));
        assert!(rep.pattern_matches(&[22, 1, 2]));
        assert!((rep.density() - 3.0 / 25.0).abs() < 1e-12);
    }

    #[test]
    fn trailing_coincidence_is_ignored() {
        let mut d = vec![7, 1, 9, 2, 8, 3, 6, 4, 5, 11, 13, 17, 19, 23];
        d.extend([1, 1, 1]);
        assert_eq!(detect_in_differences(&d, 3), None);
    }

    #[test]
    fn argument_checks() {
        let run = generate(&Rule::v(), &[1, 2], 3).unwrap();
        assert!(detect_regularity(&run, 2).is_err());
        let short = generate(&Rule::ulam(), &[5], 100).unwrap();
        assert!(detect_regularity(&short, 3).is_err());
    }
}
