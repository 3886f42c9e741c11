use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// The additive law `z = a_1 x_1 + ... + a_k x_k` that decides admission.
///
/// A representation of `z` is a tuple of terms `(x_1, ..., x_k)` with the
/// weighted sum `z`. When `distinct_summands` is set the `x_i` must be pairwise
/// distinct. Without `ordered_counting`, two tuples that differ only by
/// permuting slots with equal coefficients are the same representation, so
/// `(1,1)` counts unordered pairs while `(2,1)` always counts `2x+y` and
/// `2y+x` separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    coefficients: Vec<u64>,
    distinct_summands: bool,
    ordered_counting: bool,
    excluded_values: BTreeSet<u64>,
}

impl Rule {
    pub fn new(coefficients: Vec<u64>, distinct_summands: bool, ordered_counting: bool) -> Result<Self> {
        if coefficients.len() < 2 {
            return invalid(format!("a rule needs at least two coefficients, got {}", coefficients.len()));
        }
        if coefficients.contains(&0) {
            return invalid("coefficients must be positive");
        }
        Ok(Self {
            coefficients,
            distinct_summands,
            ordered_counting,
            excluded_values: BTreeSet::new(),
        })
    }

    /// Sum of two distinct earlier terms, counted as unordered pairs.
    pub fn ulam() -> Self {
        Self::new(vec![1, 1], true, false).expect("static rule")
    }

    /// Sum of two not necessarily distinct earlier terms.
    pub fn v() -> Self {
        Self::new(vec![1, 1], false, false).expect("static rule")
    }

    /// The `(a_1,...,a_k)` law with distinct summands. Asymmetric laws count
    /// ordered tuples.
    pub fn weighted(coefficients: &[u64]) -> Result<Self> {
        let symmetric = coefficients.windows(2).all(|w| w[0] == w[1]);
        Self::new(coefficients.to_vec(), true, !symmetric)
    }

    pub fn with_excluded(mut self, values: impl IntoIterator<Item = u64>) -> Self {
        self.excluded_values.extend(values);
        self
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn arity(&self) -> usize {
        self.coefficients.len()
    }

    pub fn distinct_summands(&self) -> bool {
        self.distinct_summands
    }

    pub fn ordered_counting(&self) -> bool {
        self.ordered_counting
    }

    pub fn excluded_values(&self) -> &BTreeSet<u64> {
        &self.excluded_values
    }

    pub fn is_excluded(&self, v: u64) -> bool {
        !self.excluded_values.is_empty() && self.excluded_values.contains(&v)
    }

    pub fn is_symmetric(&self) -> bool {
        self.coefficients.windows(2).all(|w| w[0] == w[1])
    }
}

/// Parses `ulam`, `v`, or `z:a1,a2,...`.
impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "ulam" | "u" => return Ok(Self::ulam()),
            "v" => return Ok(Self::v()),
            _ => {}
        }
        let Some(list) = s.strip_prefix("z:").or_else(|| s.strip_prefix("Z:")) else {
            return invalid(format!("unknown rule `{s}` (expected ulam, v or z:a1,a2,...)"));
        };
        let coefficients = list
            .split(',')
            .map(|c| c.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidArgument(format!("bad coefficient list `{list}`: {e}")))?;
        Self::weighted(&coefficients)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients == [1, 1] && !self.ordered_counting {
            return f.write_str(if self.distinct_summands { "ulam" } else { "v" });
        }
        let list: Vec<String> = self.coefficients.iter().map(u64::to_string).collect();
        write!(f, "z:{}", list.join(","))?;
        if !self.distinct_summands {
            f.write_str(" (repeats allowed)")?;
        }
        Ok(())
    }
}
