//! Transport between the lattice sets and `V(a,b)`, `U(a,b)` through
//! `(i, j) -> i a + j b`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::gcd;
use serde::{Deserialize, Serialize};

use super::set::Point;
use super::structure::{w_modified, w_ulam};
use crate::analysis::even_terms;
use crate::error::{invalid, Error, Result};
use crate::seq::{generate, Rule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Ulam,
    V,
}

impl Family {
    pub fn rule(self) -> Rule {
        match self {
            Self::Ulam => Rule::ulam(),
            Self::V => Rule::v(),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ulam" | "u" => Ok(Self::Ulam),
            "v" => Ok(Self::V),
            other => invalid(format!("unknown family {other:?}, expected ulam or v")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Ulam => "ulam",
            Self::V => "v",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub i: u64,
    pub j: u64,
    pub value: u64,
    pub lattice: bool,
    pub sequence: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoxEquivalenceReport {
    pub a: u64,
    pub b: u64,
    pub family: Family,
    /// Points compared, i.e. box points with `0 < i a + j b <= a b`.
    pub compared: usize,
    pub mismatches: Vec<Mismatch>,
}

impl BoxEquivalenceReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn require_coprime(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 || gcd(a, b) != 1 {
        return invalid(format!("a and b must be coprime positive integers, got ({a}, {b})"));
    }
    Ok(())
}

fn require_v_regime(a: u64, b: u64) -> Result<()> {
    require_coprime(a, b)?;
    if !a.is_multiple_of(2) || b.is_multiple_of(2) || b <= 2 * a {
        return invalid(format!("need a even and b > 2a odd, got ({a}, {b})"));
    }
    Ok(())
}

/// Compares the lattice set with the generated sequence on the box `[0,b) x [0,a)`.
pub fn freiman_box_check(a: u64, b: u64, family: Family) -> Result<BoxEquivalenceReport> {
    match family {
        Family::V => require_v_regime(a, b)?,
        Family::Ulam => {
            require_coprime(a, b)?;
            if a >= b {
                return invalid(format!("need a < b, got ({a}, {b})"));
            }
        }
    }
    let limit = a * b;
    let lattice = match family {
        Family::V => w_modified(a + b)?,
        Family::Ulam => w_ulam(a + b)?,
    };
    let run = generate(&family.rule(), &[a, b], limit)?;
    let mut compared = 0;
    let mut mismatches = Vec::new();
    for i in 0..b {
        for j in 0..a {
            let value = i * a + j * b;
            if value == 0 || value > limit {
                continue;
            }
            compared += 1;
            let in_lattice = lattice.contains(Point::new(i, j));
            let in_sequence = run.contains(value);
            if in_lattice != in_sequence {
                mismatches.push(Mismatch { i, j, value, lattice: in_lattice, sequence: in_sequence });
            }
        }
    }
    Ok(BoxEquivalenceReport { a, b, family, compared, mismatches })
}

/// The explicit description of `V(a,b) ∩ [0, ab]`.
pub fn predicted_v_initial(a: u64, b: u64) -> Result<BTreeSet<u64>> {
    require_v_regime(a, b)?;
    let limit = a * b;
    let v12 = generate(&Rule::v(), &[1, 2], a.max(3))?;
    let mut out = BTreeSet::from([a, 5 * b + 3 * a]);
    for n in 0..=limit / a {
        out.insert(b + n * a);
        if n % 2 == 0 {
            out.insert(3 * b + n * a);
        }
    }
    for n in 1..=limit / b {
        if v12.contains(n) {
            out.insert(n * b);
        }
        if n == 1 || n % 4 == 0 {
            out.insert(n * b + a);
        }
        if matches!(n % 8, 1 | 3) {
            out.insert(n * b + 2 * a);
        }
    }
    for n in (5..=limit / a).step_by(2) {
        for m in (5..=limit / b).step_by(4) {
            out.insert(m * b + n * a);
        }
    }
    out.insert(a);
    out.retain(|&v| v < limit);
    Ok(out)
}

/// Compares [`predicted_v_initial`] with generated `V(a,b)` up to `ab`.
pub fn check_v_initial(a: u64, b: u64) -> Result<bool> {
    let predicted = predicted_v_initial(a, b)?;
    let run = generate(&Rule::v(), &[a, b], a * b)?;
    Ok(run.terms().iter().copied().eq(predicted))
}

/// Lower bound `2 + floor(a/4)` on the number of even terms of `V(a,b)`.
pub fn v_even_count_bound(a: u64) -> usize {
    2 + (a / 4) as usize
}

/// Counts the even terms of `V(a,b)` up to `4ab` against [`v_even_count_bound`].
pub fn check_v_even_count(a: u64, b: u64) -> Result<bool> {
    require_v_regime(a, b)?;
    let run = generate(&Rule::v(), &[a, b], 4 * a * b)?;
    Ok(even_terms(&run).len() >= v_even_count_bound(a))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UEvenPrediction {
    pub count_lower_bound: usize,
    /// `e, e + 2o, ..., e + (e - 2) o` for the even generator `e` and odd `o`:
    /// every even term up to `window`.
    pub evens_leq_ab: BTreeSet<u64>,
    /// `max(ab, e + (e - 2) o)`. The list overshoots `ab` when `b` is even and `b > 2a`.
    pub window: u64,
    /// The even term just past `ab`: `a + ab` or `b + ab`.
    pub beyond: u64,
}

pub fn predicted_u_even_counts(a: u64, b: u64) -> Result<UEvenPrediction> {
    require_coprime(a, b)?;
    if a.is_multiple_of(2) == b.is_multiple_of(2) {
        return invalid(format!("exactly one of a, b must be even, got ({a}, {b})"));
    }
    let (even, odd) = if a.is_multiple_of(2) { (a, b) } else { (b, a) };
    let evens: BTreeSet<u64> = (0..even).step_by(2).map(|k| even + k * odd).collect();
    Ok(UEvenPrediction {
        count_lower_bound: 1 + (even / 2) as usize,
        window: (a * b).max(*evens.last().expect("even >= 2")),
        evens_leq_ab: evens,
        beyond: even + a * b,
    })
}

/// Generates `U(a,b)` past `ab` and checks the predicted even terms.
pub fn check_u_even_prediction(a: u64, b: u64) -> Result<bool> {
    let prediction = predicted_u_even_counts(a, b)?;
    let run = generate(&Rule::ulam(), &[a.min(b), a.max(b)], prediction.beyond.max(prediction.window))?;
    let evens = even_terms(&run);
    let low: BTreeSet<u64> = evens.iter().copied().filter(|&e| e <= prediction.window).collect();
    Ok(low == prediction.evens_leq_ab && run.contains(prediction.beyond) && evens.len() >= prediction.count_lower_bound)
}

/// `k a` and `l b` are not in `U(a,b)` for `2 <= k <= b`, `2 <= l <= a`.
pub fn check_no_multiples(a: u64, b: u64) -> Result<bool> {
    require_coprime(a, b)?;
    if a == 1 || a >= b {
        return invalid(format!("need 1 < a < b, got ({a}, {b})"));
    }
    let run = generate(&Rule::ulam(), &[a, b], a * b)?;
    Ok((2..=b).all(|k| !run.contains(k * a)) && (2..=a).all(|l| !run.contains(l * b)))
}

/// For `0 < i < a`, `0 < j < b`: `j a + i b` is in `U(a,b)` iff `j = 1`, `i = 1`
/// or both are odd.
pub fn check_u_box_interior(a: u64, b: u64) -> Result<bool> {
    require_coprime(a, b)?;
    if a >= b {
        return invalid(format!("need a < b, got ({a}, {b})"));
    }
    let run = generate(&Rule::ulam(), &[a, b], 2 * a * b)?;
    Ok((1..a).all(|i| {
        (1..b).all(|j| {
            let predicted = j == 1 || i == 1 || (i % 2 == 1 && j % 2 == 1);
            run.contains(j * a + i * b) == predicted
        })
    }))
}
