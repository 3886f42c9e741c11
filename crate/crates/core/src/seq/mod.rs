//! Greedy generation of additive sequences.

mod engine;
mod oracle;
mod rule;

pub use engine::{generate, SequenceRun, MAX_VALUE_LIMIT};
pub use oracle::{count_representations_oracle, oracle_replay, RepWitness};
pub use rule::Rule;
