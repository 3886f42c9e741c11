use std::collections::{BTreeSet, HashSet};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: u64,
    pub y: u64,
}

impl Point {
    pub const fn new(x: u64, y: u64) -> Self {
        Self { x, y }
    }

    pub fn l1(self) -> u64 {
        self.x + self.y
    }

    fn checked_sub(self, other: Point) -> Option<Point> {
        Some(Point::new(self.x.checked_sub(other.x)?, self.y.checked_sub(other.y)?))
    }
}

impl From<(u64, u64)> for Point {
    fn from((x, y): (u64, u64)) -> Self {
        Self::new(x, y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeSet {
    members: BTreeSet<Point>,
    generators: Vec<Point>,
    exclusions: BTreeSet<Point>,
    l1_bound: u64,
    distinct_summands: bool,
}

impl LatticeSet {
    pub fn contains(&self, p: impl Into<Point>) -> bool {
        self.members.contains(&p.into())
    }

    pub fn members(&self) -> &BTreeSet<Point> {
        &self.members
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    pub fn exclusions(&self) -> &BTreeSet<Point> {
        &self.exclusions
    }

    pub fn l1_bound(&self) -> u64 {
        self.l1_bound
    }

    pub fn distinct_summands(&self) -> bool {
        self.distinct_summands
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `x,y` header followed by one member per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for p in &self.members {
            let _ = writeln!(out, "{},{}", p.x, p.y);
        }
        out
    }
}

/// Builds the set layer by layer in L1 norm.
///
/// Both summands of a representation are nonzero, so they lie in strictly
/// lower layers and the order of candidates inside a layer does not matter.
/// Generators are members unconditionally; excluded points never are.
pub fn generate_lattice(
    generators: &[Point],
    exclusions: &BTreeSet<Point>,
    distinct_summands: bool,
    l1_bound: u64,
) -> Result<LatticeSet> {
    if generators.iter().any(|p| p.l1() == 0) {
        return invalid("the zero vector cannot be a generator");
    }
    let gen_set: HashSet<Point> = generators.iter().copied().collect();
    if gen_set.len() != generators.len() {
        return invalid("generators must be distinct");
    }
    let mut members: HashSet<Point> = HashSet::new();
    let mut below: Vec<Point> = Vec::new();
    for layer in 1..=l1_bound {
        let mut admitted = Vec::new();
        for x in (0..=layer).rev() {
            let z = Point::new(x, layer - x);
            if gen_set.contains(&z) {
                admitted.push(z);
                continue;
            }
            if exclusions.contains(&z) {
                continue;
            }
            if representations(z, &below, &members, distinct_summands) == 1 {
                admitted.push(z);
            }
        }
        members.extend(admitted.iter().copied());
        below.extend(admitted);
    }
    Ok(LatticeSet {
        members: members.into_iter().collect(),
        generators: generators.to_vec(),
        exclusions: exclusions.clone(),
        l1_bound,
        distinct_summands,
    })
}

/// Unordered representations of `z` over earlier members, saturated at 2.
fn representations(z: Point, below: &[Point], members: &HashSet<Point>, distinct: bool) -> u32 {
    let mut count = 0;
    for &p in below {
        // Visit each unordered pair once, from its lexicographically smaller half.
        let Some(q) = z.checked_sub(p) else { continue };
        if p > q || !members.contains(&q) || (distinct && p == q) {
            continue;
        }
        count += 1;
        if count >= 2 {
            break;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axes() -> [Point; 2] {
        [Point::new(1, 0), Point::new(0, 1)]
    }

    #[test]
    fn generation_examples() {
        let excl = BTreeSet::from([Point::new(2, 0)]);
        let w = generate_lattice(&axes(), &excl, false, 12).unwrap();
        assert!(w.contains((3, 5)) && !w.contains((2, 0)));
        let u = generate_lattice(&axes(), &BTreeSet::new(), true, 12).unwrap();
        assert!(u.contains((3, 3)) && !u.contains((2, 2)));
        let first = generate_lattice(&axes(), &BTreeSet::new(), true, 1).unwrap();
        assert_eq!(first.members().iter().copied().collect::<Vec<_>>(), [Point::new(0, 1), Point::new(1, 0)]);
    }

    #[test]
    fn bad_generators() {
        assert!(generate_lattice(&[Point::new(0, 0)], &BTreeSet::new(), true, 3).is_err());
        assert!(generate_lattice(&[Point::new(1, 0), Point::new(1, 0)], &BTreeSet::new(), true, 3).is_err());
    }

    #[test]
    fn csv_dump() {
        let s = generate_lattice(&axes(), &BTreeSet::new(), true, 1).unwrap();
        assert_eq!(s.to_csv(), "x,y\n0,1\n1,0\n");
    }

    #[test]
    fn members_have_unique_representations() {
        let u = generate_lattice(&axes(), &BTreeSet::new(), true, 16).unwrap();
        let members: HashSet<Point> = u.members().iter().copied().collect();
        let below: Vec<Point> = u.members().iter().copied().collect();
        for &z in u.members() {
            if !axes().contains(&z) {
                assert_eq!(representations(z, &below, &members, true), 1, "{z:?}");
            }
        }
    }
}
