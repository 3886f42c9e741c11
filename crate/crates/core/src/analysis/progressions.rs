use serde::Serialize;

use crate::seq::SequenceRun;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ApRun {
    pub length: usize,
    /// First term of the earliest longest progression; `None` when no term
    /// exceeds the start bound.
    pub start: Option<u64>,
}

/// Longest progression `c, c+d, ..., c+(L-1)d` inside the run with
/// `c > start_min`.
pub fn max_ap_length(run: &SequenceRun, difference: u64, start_min: u64) -> ApRun {
    assert!(difference >= 1, "difference must be positive");
    let terms = run.terms();
    let first = terms.partition_point(|&t| t <= start_min);
    let mut len_at = vec![0usize; terms.len()];
    let mut best = ApRun { length: 0, start: None };
    for i in first..terms.len() {
        let t = terms[i];
        let prev = t
            .checked_sub(difference)
            .filter(|&p| p > start_min)
            .and_then(|p| terms[first..i].binary_search(&p).ok())
            .map_or(0, |j| len_at[first + j]);
        len_at[i] = prev + 1;
        if len_at[i] > best.length {
            best = ApRun { length: len_at[i], start: Some(t - (len_at[i] as u64 - 1) * difference) };
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{generate, Rule};

    #[test]
    fn progression_examples() {
        let run = generate(&Rule::ulam(), &[2, 5], 20_000).unwrap();
        assert!(max_ap_length(&run, 2, 12).length <= 6);
        let run = generate(&Rule::ulam(), &[3, 8], 20_000).unwrap();
        assert!(max_ap_length(&run, 11, 33).length <= 3);
        let run = generate(&Rule::v(), &[1, 2], 100).unwrap();
        assert_eq!(max_ap_length(&run, 1000, 0).length, 1);
    }

    #[test]
    fn odd_numbers_form_one_long_progression() {
        let run = generate(&Rule::v(), &[1, 2], 101).unwrap();
        assert_eq!(max_ap_length(&run, 2, 2), ApRun { length: 50, start: Some(3) });
        assert_eq!(max_ap_length(&run, 2, 0), ApRun { length: 51, start: Some(1) });
        assert_eq!(max_ap_length(&run, 2, 500), ApRun { length: 0, start: None });
    }
}
