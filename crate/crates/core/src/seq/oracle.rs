use serde::Serialize;

use super::rule::Rule;
use crate::error::{invalid, Result};

/// Every tuple realizing `value` under a rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepWitness {
    pub value: u64,
    pub tuples: Vec<Vec<u64>>,
}

/// Exact representation count of `z` over `terms` by exhaustive enumeration of
/// all k-tuples, with the list of tuples found.
///
/// A tuple is kept when its weighted sum is `z`, it honours distinctness, and
/// (for unordered counting) the summands in equal-coefficient slots are in
/// nondecreasing order so each multiset is seen once.
pub fn count_representations_oracle(terms: &[u64], rule: &Rule, z: u64) -> (u64, RepWitness) {
    let mut tuples = Vec::new();
    let mut current = Vec::with_capacity(rule.arity());
    enumerate(terms, rule, z, 0, &mut current, &mut tuples);
    let witness = RepWitness { value: z, tuples };
    (witness.tuples.len() as u64, witness)
}

/// The greedy sequence rebuilt from scratch with [`count_representations_oracle`]
/// deciding every admission.
pub fn oracle_replay(rule: &Rule, initials: &[u64], value_limit: u64) -> Result<Vec<u64>> {
    if initials.is_empty() || initials.windows(2).any(|w| w[0] >= w[1]) {
        return invalid("initials must be nonempty and strictly increasing");
    }
    let mut terms = initials.to_vec();
    for z in initials[initials.len() - 1] + 1..=value_limit {
        if !rule.is_excluded(z) && count_representations_oracle(&terms, rule, z).0 == 1 {
            terms.push(z);
        }
    }
    Ok(terms)
}

fn enumerate(terms: &[u64], rule: &Rule, z: u64, partial: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    let co = rule.coefficients();
    let slot = current.len();
    if slot == co.len() {
        if partial == z && acceptable(rule, current) {
            out.push(current.clone());
        }
        return;
    }
    if slot + 1 == co.len() {
        // The last summand is forced.
        let rest = z - partial;
        if rest.is_multiple_of(co[slot]) && terms.binary_search(&(rest / co[slot])).is_ok() {
            current.push(rest / co[slot]);
            enumerate(terms, rule, z, z, current, out);
            current.pop();
        }
        return;
    }
    for &x in terms {
        let sum = partial + co[slot] * x;
        if sum > z {
            break;
        }
        current.push(x);
        enumerate(terms, rule, z, sum, current, out);
        current.pop();
    }
}

fn acceptable(rule: &Rule, tuple: &[u64]) -> bool {
    let co = rule.coefficients();
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if rule.distinct_summands() && tuple[i] == tuple[j] {
                return false;
            }
            if !rule.ordered_counting() && co[i] == co[j] && tuple[i] > tuple[j] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_counted_cases() {
        let (n, w) = count_representations_oracle(&[1, 2, 3], &Rule::v(), 4);
        assert_eq!(n, 2);
        assert_eq!(w.tuples, vec![vec![1, 3], vec![2, 2]]);

        let (n, _) = count_representations_oracle(&[1, 2], &Rule::ulam(), 4);
        assert_eq!(n, 0);

        let z21 = Rule::weighted(&[2, 1]).unwrap();
        let (n, w) = count_representations_oracle(&[1, 3, 5], &z21, 7);
        assert_eq!(n, 2);
        assert_eq!(w.tuples, vec![vec![1, 5], vec![3, 1]]);
    }

    #[test]
    fn no_representation() {
        let (n, w) = count_representations_oracle(&[2, 3], &Rule::ulam(), 100);
        assert_eq!(n, 0);
        assert!(w.tuples.is_empty());
    }

    #[test]
    fn witness_tuples_sum_to_value() {
        let rule = Rule::weighted(&[1, 1, 1]).unwrap();
        let terms = [1, 2, 3, 6, 9, 10];
        let (n, w) = count_representations_oracle(&terms, &rule, 15);
        assert_eq!(n as usize, w.tuples.len());
        for t in &w.tuples {
            assert_eq!(t.iter().sum::<u64>(), 15);
            assert!(t[0] < t[1] && t[1] < t[2]);
        }
        assert_eq!(w.tuples, vec![vec![2, 3, 10]]);
    }
}
