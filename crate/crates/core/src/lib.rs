//! Greedy additive integer sequences and the structure they carry.
//!
//! The [`seq`] module generates Ulam, V and generalized `(a_1,...,a_k)`
//! sequences with an incremental saturating representation counter, plus a
//! brute-force oracle used to cross-check it. [`gf2`] implements arithmetic in
//! `GF(2)[t]/(t^n + t + 1)` together with the Pascal/Sierpinski identities that
//! govern `V(2,n)`. [`analysis`] measures runs (even terms, periodicity,
//! densities, quasiperiods, progressions) and [`lattice`] builds the
//! two-dimensional Ulam sets that mirror `V(a,b)` and `U(a,b)` through a
//! Freiman map.

pub mod analysis;
pub mod error;
pub mod gf2;
pub mod io;
pub mod lattice;
pub mod seq;

pub use error::{Error, Result};
pub use gf2::Gf2Poly;
pub use lattice::{LatticeSet, Point};
pub use seq::{generate, RepWitness, Rule, SequenceRun};
