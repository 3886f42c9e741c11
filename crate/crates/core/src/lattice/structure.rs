//! Closed-form descriptions of the two lattice sets generated from `(1,0), (0,1)`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::set::{generate_lattice, LatticeSet, Point};
use crate::error::{invalid, Result};
use crate::seq::{generate, Rule, SequenceRun};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureMismatch {
    pub point: Point,
    pub generated: bool,
    pub predicted: bool,
}

fn axes() -> [Point; 2] {
    [Point::new(1, 0), Point::new(0, 1)]
}

/// Membership in the modified set (repeats allowed, `(2,0)` excluded).
/// `v12` must contain `V(1,2)` at least up to `p.y`.
pub fn in_w_modified(p: Point, v12: &SequenceRun) -> bool {
    let Point { x, y } = p;
    (x, y) == (1, 0)
        || (x, y) == (3, 5)
        || y == 1
        || (y == 3 && x % 2 == 0)
        || (x == 0 && v12.contains(y))
        || (x == 1 && y % 4 == 0)
        || (x == 2 && matches!(y % 8, 1 | 3))
        || (x >= 5 && x % 2 == 1 && y >= 5 && y % 4 == 1)
}

/// Membership in the Ulam set with distinct summands and no exclusions.
pub fn in_w_ulam(p: Point) -> bool {
    let Point { x, y } = p;
    x == 1 || y == 1 || (x >= 3 && y >= 3 && x % 2 == 1 && y % 2 == 1)
}

pub(crate) fn w_modified(l1_bound: u64) -> Result<LatticeSet> {
    generate_lattice(&axes(), &BTreeSet::from([Point::new(2, 0)]), false, l1_bound)
}

pub(crate) fn w_ulam(l1_bound: u64) -> Result<LatticeSet> {
    generate_lattice(&axes(), &BTreeSet::new(), true, l1_bound)
}

fn compare(set: &LatticeSet, bound: u64, predicate: impl Fn(Point) -> bool) -> Vec<StructureMismatch> {
    let mut out = Vec::new();
    for layer in 1..=bound {
        for x in 0..=layer {
            let point = Point::new(x, layer - x);
            let generated = set.contains(point);
            let predicted = predicate(point);
            if generated != predicted {
                out.push(StructureMismatch { point, generated, predicted });
            }
        }
    }
    out
}

pub fn w_modified_mismatches(bound: u64) -> Result<Vec<StructureMismatch>> {
    if bound < 20 {
        return invalid(format!("bound must be at least 20, got {bound}"));
    }
    let v12 = generate(&Rule::v(), &[1, 2], bound.max(3))?;
    Ok(compare(&w_modified(bound)?, bound, |p| in_w_modified(p, &v12)))
}

pub fn check_w_modified(bound: u64) -> Result<bool> {
    Ok(w_modified_mismatches(bound)?.is_empty())
}

pub fn w_ulam_mismatches(bound: u64) -> Result<Vec<StructureMismatch>> {
    if bound < 10 {
        return invalid(format!("bound must be at least 10, got {bound}"));
    }
    Ok(compare(&w_ulam(bound)?, bound, in_w_ulam))
}

pub fn check_w_ulam(bound: u64) -> Result<bool> {
    Ok(w_ulam_mismatches(bound)?.is_empty())
}
