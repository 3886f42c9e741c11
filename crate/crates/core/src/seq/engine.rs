use serde::Serialize;

use super::rule::Rule;
use crate::error::{invalid, Result};

/// Largest value limit accepted by the engine.
pub const MAX_VALUE_LIMIT: u64 = 1 << 48;

/// A finished greedy run: the terms plus the saturating representation table
/// the admissions were decided from.
///
/// `rep_count(v)` is `min(#representations of v over terms < v, 2)` for every
/// `v` above the initial generators that is not excluded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceRun {
    rule: Rule,
    initials: Vec<u64>,
    value_limit: u64,
    terms: Vec<u64>,
    #[serde(skip)]
    rep_counts: Vec<u8>,
    #[serde(skip)]
    members: Vec<u64>,
}

impl SequenceRun {
    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    pub fn initials(&self) -> &[u64] {
        &self.initials
    }

    pub fn value_limit(&self) -> u64 {
        self.value_limit
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_initial(&self) -> u64 {
        *self.initials.last().expect("initials are nonempty")
    }

    /// Saturated representation count (0, 1 or 2 meaning "two or more").
    pub fn rep_count(&self, v: u64) -> u8 {
        self.rep_counts.get(v as usize).copied().unwrap_or(0)
    }

    pub fn rep_counts(&self) -> &[u8] {
        &self.rep_counts
    }

    pub fn contains(&self, v: u64) -> bool {
        v <= self.value_limit && bit(&self.members, v)
    }

    /// Grows the run to `new_value_limit`; the result equals a fresh
    /// [`generate`] at the larger limit.
    pub fn extend(&self, new_value_limit: u64) -> Result<SequenceRun> {
        if new_value_limit <= self.value_limit {
            return invalid(format!(
                "new limit {new_value_limit} must exceed the current limit {}",
                self.value_limit
            ));
        }
        check_limit(new_value_limit)?;
        let mut engine = Engine::new(self.rule.clone(), new_value_limit);
        for &t in &self.terms {
            engine.admit(t);
        }
        // Generic rules fill counts lazily, so carry the examined prefix over.
        engine.rep[..self.rep_counts.len()].copy_from_slice(&self.rep_counts);
        engine.scan(self.value_limit + 1);
        Ok(engine.finish(self.initials.clone()))
    }
}

/// Generates the greedy sequence for `rule` from `initials` up to
/// `value_limit`.
///
/// Every integer in `(max(initials), value_limit]` is examined in increasing
/// order and admitted iff it is not excluded and has exactly one
/// representation over the terms already admitted.
pub fn generate(rule: &Rule, initials: &[u64], value_limit: u64) -> Result<SequenceRun> {
    let Some(&max_initial) = initials.last() else {
        return invalid("initials must be nonempty");
    };
    if initials[0] == 0 {
        return invalid("initials must be positive");
    }
    if initials.windows(2).any(|w| w[0] >= w[1]) {
        return invalid(format!("initials must be strictly increasing: {initials:?}"));
    }
    if value_limit < max_initial {
        return invalid(format!("value limit {value_limit} is below the largest initial {max_initial}"));
    }
    check_limit(value_limit)?;
    let mut engine = Engine::new(rule.clone(), value_limit);
    for &t in initials {
        engine.admit(t);
    }
    engine.scan(max_initial + 1);
    Ok(engine.finish(initials.to_vec()))
}

fn check_limit(limit: u64) -> Result<()> {
    if limit > MAX_VALUE_LIMIT {
        return invalid(format!("value limit {limit} exceeds 2^48"));
    }
    Ok(())
}

enum Kernel {
    /// Two slots with coefficients `(p, q)`.
    Pair { p: u64, q: u64 },
    /// Three equal coefficients `c`, unordered; `pair_sums[s]` is the saturated
    /// number of admissible pairs of terms summing to `s`.
    EqualTriple { c: u64, pair_sums: Vec<u8> },
    /// Anything else: count at examination time by bounded enumeration.
    Generic,
}

struct Engine {
    rule: Rule,
    limit: u64,
    rep: Vec<u8>,
    terms: Vec<u64>,
    members: Vec<u64>,
    kernel: Kernel,
}

#[inline]
fn bump(slot: &mut u8, by: u8) {
    *slot = (*slot + by).min(2);
}

#[inline]
fn bit(words: &[u64], v: u64) -> bool {
    words
        .get((v >> 6) as usize)
        .is_some_and(|w| (w >> (v & 63)) & 1 == 1)
}

impl Engine {
    fn new(rule: Rule, limit: u64) -> Self {
        let co = rule.coefficients();
        let kernel = match co.len() {
            2 => Kernel::Pair { p: co[0], q: co[1] },
            3 if rule.is_symmetric() && !rule.ordered_counting() => Kernel::EqualTriple {
                c: co[0],
                pair_sums: vec![0; (limit / co[0]) as usize + 1],
            },
            _ => Kernel::Generic,
        };
        Self {
            rule,
            limit,
            rep: vec![0; limit as usize + 1],
            terms: Vec::new(),
            members: vec![0; (limit as usize >> 6) + 1],
            kernel,
        }
    }

    fn scan(&mut self, from: u64) {
        for v in from..=self.limit {
            if self.rule.is_excluded(v) {
                continue;
            }
            if matches!(self.kernel, Kernel::Generic) {
                self.rep[v as usize] = self.count_generic(v);
            }
            if self.rep[v as usize] == 1 {
                self.admit(v);
            }
        }
    }

    /// Records `t` as a term and adds every representation whose largest
    /// summand is `t`. All existing terms are smaller than `t`.
    fn admit(&mut self, t: u64) {
        let limit = self.limit;
        let distinct = self.rule.distinct_summands();
        let ordered = self.rule.ordered_counting();
        let Engine { kernel, rep, terms, .. } = self;
        match kernel {
            Kernel::Pair { p, q } if p == q => {
                let p = *p;
                let mult = if ordered { 2 } else { 1 };
                if let Some(cap) = (limit / p).checked_sub(t) {
                    for &s in terms.iter().take_while(|&&s| s <= cap) {
                        bump(&mut rep[(p * (t + s)) as usize], mult);
                    }
                    if !distinct && t <= cap {
                        bump(&mut rep[(2 * p * t) as usize], 1);
                    }
                }
            }
            Kernel::Pair { p, q } => {
                let (p, q) = (*p, *q);
                for (lead, tail) in [(p, q), (q, p)] {
                    let Some(base) = lead.checked_mul(t).filter(|&b| b <= limit) else { continue };
                    let room = (limit - base) / tail;
                    for &s in terms.iter().take_while(|&&s| s <= room) {
                        bump(&mut rep[(base + tail * s) as usize], 1);
                    }
                }
                if !distinct {
                    if let Some(v) = (p + q).checked_mul(t).filter(|&v| v <= limit) {
                        bump(&mut rep[v as usize], 1);
                    }
                }
            }
            Kernel::EqualTriple { c, pair_sums } => {
                let c = *c;
                let cap = pair_sums.len() as u64 - 1;
                let add_pairs = |pair_sums: &mut Vec<u8>| {
                    for &s in terms.iter().take_while(|&&s| t + s <= cap) {
                        bump(&mut pair_sums[(t + s) as usize], 1);
                    }
                    if !distinct && 2 * t <= cap {
                        bump(&mut pair_sums[(2 * t) as usize], 1);
                    }
                };
                // With repeats allowed the triples (s, t, t) and (t, t, t)
                // need t's own pairs in the table first.
                if !distinct {
                    add_pairs(pair_sums);
                }
                if t < cap {
                    let room = (cap - t) as usize;
                    for (s, &m) in pair_sums[..=room].iter().enumerate() {
                        if m != 0 {
                            bump(&mut rep[(c * (t + s as u64)) as usize], m);
                        }
                    }
                }
                if distinct {
                    add_pairs(pair_sums);
                }
            }
            Kernel::Generic => {}
        }
        self.push(t);
    }

    fn push(&mut self, t: u64) {
        self.terms.push(t);
        self.members[(t >> 6) as usize] |= 1 << (t & 63);
    }

    fn count_generic(&self, v: u64) -> u8 {
        let mut chosen = Vec::with_capacity(self.rule.arity());
        let mut count = 0u8;
        self.count_slots(0, v, &mut chosen, &mut count);
        count
    }

    fn count_slots(&self, slot: usize, remaining: u64, chosen: &mut Vec<u64>, count: &mut u8) {
        if *count >= 2 {
            return;
        }
        let co = self.rule.coefficients();
        let a = co[slot];
        // Within a run of equal coefficients, unordered counting takes the
        // summands in nondecreasing order.
        let floor = if slot > 0 && !self.rule.ordered_counting() && co[slot - 1] == a {
            chosen[slot - 1]
        } else {
            0
        };
        let admissible = |x: u64, chosen: &[u64]| -> bool {
            x >= floor && !(self.rule.distinct_summands() && chosen.contains(&x))
        };
        if slot + 1 == co.len() {
            if remaining.is_multiple_of(a) {
                let x = remaining / a;
                if x > 0 && bit(&self.members, x) && admissible(x, chosen) {
                    *count += 1;
                }
            }
            return;
        }
        let tail_min: u64 = co[slot + 1..].iter().sum();
        for &x in &self.terms {
            let used = a * x;
            if used + tail_min > remaining {
                break;
            }
            if !admissible(x, chosen) {
                continue;
            }
            chosen.push(x);
            self.count_slots(slot + 1, remaining - used, chosen, count);
            chosen.pop();
            if *count >= 2 {
                return;
            }
        }
    }

    fn finish(self, initials: Vec<u64>) -> SequenceRun {
        SequenceRun {
            rule: self.rule,
            initials,
            value_limit: self.limit,
            terms: self.terms,
            rep_counts: self.rep,
            members: self.members,
        }
    }
}
