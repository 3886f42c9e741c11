//! File formats: JSON run records and plain CSV.
//!
//! Term files are headerless, one term per line. Report tables carry a header
//! row.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::seq::{generate, Rule, SequenceRun};

/// A stored run. `report` holds whatever analysis was attached to it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub rule: String,
    pub initials: Vec<u64>,
    pub value_limit: u64,
    pub terms: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<serde_json::Value>,
}

impl RunRecord {
    pub fn from_run(run: &SequenceRun) -> Self {
        Self {
            rule: run.rule().to_string(),
            initials: run.initials().to_vec(),
            value_limit: run.value_limit(),
            terms: run.terms().to_vec(),
            report: None,
        }
    }

    pub fn with_report(mut self, report: impl Serialize) -> Result<Self> {
        self.report = Some(serde_json::to_value(report).map_err(|e| crate::Error::InvalidArgument(e.to_string()))?);
        Ok(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("run records always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).or_else(|e| invalid(format!("malformed run record: {e}")))
    }

    /// Regenerates the run from its rule, initials and limit.
    pub fn replay(&self) -> Result<SequenceRun> {
        let rule: Rule = self.rule.parse()?;
        generate(&rule, &self.initials, self.value_limit)
    }
}

pub fn terms_csv(terms: &[u64]) -> String {
    let mut out = String::with_capacity(terms.len() * 8);
    for t in terms {
        let _ = writeln!(out, "{t}");
    }
    out
}

pub fn parse_terms_csv(text: &str) -> Result<Vec<u64>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.parse::<u64>().or_else(|_| invalid(format!("not a term: {l:?}"))))
        .collect()
}

/// `bin_center,count` rows.
pub fn histogram_csv(rows: &[(f64, u64)]) -> String {
    let mut out = String::from("bin_center,count\n");
    for (center, count) in rows {
        let _ = writeln!(out, "{center},{count}");
    }
    out
}

/// `index,ratio` rows.
pub fn density_csv(series: &[(usize, f64)]) -> String {
    let mut out = String::from("index,ratio\n");
    for (index, ratio) in series {
        let _ = writeln!(out, "{index},{ratio}");
    }
    out
}
