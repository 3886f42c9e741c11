//! Executable versions of the polynomial identities behind the even-term
//! theorem for `V(2,n)`. Each checker returns the first violation it finds
//! with enough coordinates to reproduce it.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::families::{
    is_power_of_two, p2kn_block_form, p_k, r_rows, require_odd_n, s_l, two_adic_split,
};
use super::poly::Gf2Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub check: &'static str,
    pub n: usize,
    pub index: Option<u64>,
    pub slot: Option<usize>,
    pub detail: String,
}

impl fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed for n={}", self.check, self.n)?;
        if let Some(k) = self.index {
            write!(f, ", index {k}")?;
        }
        if let Some(i) = self.slot {
            write!(f, ", slot {i}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

pub type CheckResult = std::result::Result<(), IdentityFailure>;

fn fail(check: &'static str, n: usize, index: Option<u64>, slot: Option<usize>, detail: impl Into<String>) -> IdentityFailure {
    IdentityFailure { check, n, index, slot, detail: detail.into() }
}

fn arg_failure(check: &'static str, n: usize, e: Error) -> IdentityFailure {
    fail(check, n, None, None, e.to_string())
}

/// `C(a, b) mod 2` by Lucas: odd iff the bits of `b` are a subset of `a`'s.
fn binom_parity(a: usize, b: usize) -> bool {
    b <= a && (b & !a) == 0
}

/// Pascal/Sierpinski structure of the `R` rows:
/// (a) `R_k(i) = C(k-1, i-1) mod 2` for `1 <= i, k <= n-1`;
/// (b) for every `k` with `2^(k+1) | n-1`,
///     `R_{2^k+m}(2^k+i) = R_{2^k+m}(i) = R_m(i)` for `1 <= i, m <= 2^k`;
/// (c) `R_{2^k}(j) = 1` for `1 <= j <= 2^k`.
pub fn check_sierpinski(n: usize) -> CheckResult {
    const NAME: &str = "sierpinski";
    require_odd_n(n).map_err(|e| arg_failure(NAME, n, e))?;
    let rows = r_rows(n, n - 1).map_err(|e| arg_failure(NAME, n, e))?;
    let r = |k: usize, i: usize| rows[k - 1].slot(i);
    for k in 1..n {
        for i in 1..n {
            if r(k, i) != binom_parity(k - 1, i - 1) {
                return Err(fail(NAME, n, Some(k as u64), Some(i), "R_k(i) differs from C(k-1,i-1) mod 2"));
            }
        }
    }
    let mut half = 1usize;
    while 2 * half < n && (n - 1).is_multiple_of(2 * half) {
        for m in 1..=half {
            for i in 1..=half {
                let (a, b, c) = (r(half + m, half + i), r(half + m, i), r(m, i));
                if a != b || b != c {
                    return Err(fail(NAME, n, Some((half + m) as u64), Some(i), format!("fractal identity broken at block size {half}")));
                }
            }
        }
        if let Some(j) = (1..=half).find(|&j| !r(half, j)) {
            return Err(fail(NAME, n, Some(half as u64), Some(j), "R_{2^k} is not all ones on its first 2^k slots"));
        }
        half *= 2;
    }
    Ok(())
}

/// Items (3)-(5) of the basic `R_k` properties for `2 <= k <= n-1`:
/// `R_k(1) = R_k(k) = 1`, `R_k(2) = R_k(k-1) = 1` exactly for even `k`, and
/// `R_k(i) = 0` for `i > k`.
pub fn check_r_basic(n: usize) -> CheckResult {
    const NAME: &str = "r-basic";
    require_odd_n(n).map_err(|e| arg_failure(NAME, n, e))?;
    let rows = r_rows(n, n - 1).map_err(|e| arg_failure(NAME, n, e))?;
    for k in 1..n {
        let row = &rows[k - 1];
        if !row.slot(1) || !row.slot(k) {
            return Err(fail(NAME, n, Some(k as u64), None, "end slots are not 1"));
        }
        if k >= 2 {
            let even = k % 2 == 0;
            if row.slot(2) != even || row.slot(k - 1) != even {
                return Err(fail(NAME, n, Some(k as u64), None, "second slots do not track parity of k"));
            }
        }
        if let Some(i) = (k + 1..=n).find(|&i| row.slot(i)) {
            return Err(fail(NAME, n, Some(k as u64), Some(i), "nonzero slot beyond k"));
        }
    }
    Ok(())
}

/// `R_k = Q_{1 + n(k-1)}` for `1 <= k <= n-1`, with `Q` advanced one factor of
/// `t` at a time.
pub fn check_q_r_link(n: usize) -> CheckResult {
    const NAME: &str = "q-r-link";
    require_odd_n(n).map_err(|e| arg_failure(NAME, n, e))?;
    let rows = r_rows(n, n - 1).map_err(|e| arg_failure(NAME, n, e))?;
    let mut q = Gf2Poly::one(n);
    let mut j = 1u64;
    for (idx, row) in rows.iter().enumerate() {
        let target = 1 + (n * idx) as u64;
        while j < target {
            q = q.mul_t();
            j += 1;
        }
        if &q != row {
            return Err(fail(NAME, n, Some(idx as u64 + 1), None, format!("R_k != Q_{target}")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub n: usize,
    pub steps: u64,
    pub q_range: u64,
    /// Pairs `(k, l)` with `P_k = Q_{l+1}` that were found and confirmed.
    pub matches: usize,
}

/// `P_k = Q_{l+1}  <=>  P_{k+1} = Q_l`, checked for `0 <= k < steps` against
/// every `Q_j` with `j <= n^2 + steps + 1`.
pub fn check_pq_duality(n: usize, steps: u64) -> std::result::Result<DualityReport, IdentityFailure> {
    const NAME: &str = "pq-duality";
    require_odd_n(n).map_err(|e| arg_failure(NAME, n, e))?;
    let q_range = (n * n) as u64 + steps + 1;
    let mut q_list = Vec::with_capacity(q_range as usize);
    let mut index: HashMap<Gf2Poly, Vec<u64>> = HashMap::new();
    let mut q = Gf2Poly::one(n);
    for j in 1..=q_range {
        index.entry(q.clone()).or_default().push(j);
        let next = q.mul_t();
        q_list.push(std::mem::replace(&mut q, next));
    }
    let q_at = |j: u64| &q_list[(j - 1) as usize];

    let step = Gf2Poly::from_exponents(n, [n as u64 - 1, 0]);
    let mut p = Gf2Poly::all_slots(n);
    let mut matches = 0;
    for k in 0..steps {
        let next = p.mul_unchecked(&step);
        if let Some(js) = index.get(&p) {
            for &j in js.iter().filter(|&&j| j >= 2) {
                if &next != q_at(j - 1) {
                    return Err(fail(NAME, n, Some(k), None, format!("P_k = Q_{j} but P_(k+1) != Q_{}", j - 1)));
                }
                matches += 1;
            }
        }
        if let Some(ls) = index.get(&next) {
            for &l in ls.iter().filter(|&&l| l < q_range) {
                if &p != q_at(l + 1) {
                    return Err(fail(NAME, n, Some(k), None, format!("P_(k+1) = Q_{l} but P_k != Q_{}", l + 1)));
                }
            }
        }
        p = next;
    }
    Ok(DualityReport { n, steps, q_range, matches })
}

/// When `n - 1 = 2^k`: `P_1 = R_{n-1}`, `P_{1+n(n-2)} = Q_1`,
/// `P_{2+n(n-2)} = 1 + t^(n-1)`, and no second representation of `2n^2 + 2`:
/// never both `R_l(n+1-i) = 1` and `R_{n-l}(i) = 1` for `1 <= i < n`,
/// `1 <= l <= n-1`.
pub fn check_third_even_term(n: usize) -> CheckResult {
    const NAME: &str = "third-even-term";
    require_odd_n(n).map_err(|e| arg_failure(NAME, n, e))?;
    if !is_power_of_two(n - 1) {
        return Err(fail(NAME, n, None, None, "n - 1 is not a power of two"));
    }
    let rows = r_rows(n, n - 1).map_err(|e| arg_failure(NAME, n, e))?;
    let p1 = p_k(n, 1).map_err(|e| arg_failure(NAME, n, e))?;
    if p1 != rows[n - 2] {
        return Err(fail(NAME, n, Some(1), None, "P_1 != R_(n-1)"));
    }
    let k0 = 1 + (n * (n - 2)) as u64;
    let pk = p1.mul_unchecked(&Gf2Poly::from_exponents(n, [n as u64 - 1, 0]).pow(k0 - 1));
    if pk != Gf2Poly::one(n) {
        return Err(fail(NAME, n, Some(k0), None, "P_(1+n(n-2)) != Q_1"));
    }
    let pk1 = pk.mul_unchecked(&Gf2Poly::from_exponents(n, [n as u64 - 1, 0]));
    if pk1 != Gf2Poly::from_exponents(n, [0, n as u64 - 1]) {
        return Err(fail(NAME, n, Some(k0 + 1), None, "P_(2+n(n-2)) != 1 + t^(n-1)"));
    }
    for l in 1..n {
        for i in 1..n {
            if rows[l - 1].slot(n + 1 - i) && rows[n - l - 1].slot(i) {
                return Err(fail(NAME, n, Some(l as u64), Some(i), "second representation of 2n^2+2"));
            }
        }
    }
    Ok(())
}

/// `S_l` structure for `n - 1 = 2^k m`, `m >= 3`: `S_l(1) = 0` for `l < 2^k`;
/// `S_l(1 + 2^k j + i) = C(l-1, i-1) mod 2` for `1 <= i, l <= 2^k`,
/// `0 <= j < m`; `S_{2^k}` is all ones; and `S_{2^k - j} = P_{jn}` for
/// `0 <= j < 2^k`.
pub fn check_s_family(n: usize) -> CheckResult {
    const NAME: &str = "s-family";
    require_odd_n(n).map_err(|e| arg_failure(NAME, n, e))?;
    let (k, m) = two_adic_split(n);
    let block = 1usize << k;
    let s: Vec<Gf2Poly> = (1..=block as u64)
        .map(|l| s_l(n, l))
        .collect::<Result<_>>()
        .map_err(|e| arg_failure(NAME, n, e))?;
    for l in 1..=block {
        let row = &s[l - 1];
        if l < block && row.slot(1) {
            return Err(fail(NAME, n, Some(l as u64), Some(1), "S_l(1) = 1 before l = 2^k"));
        }
        for j in 0..m {
            for i in 1..=block {
                let slot = 1 + block * j + i;
                if row.slot(slot) != binom_parity(l - 1, i - 1) {
                    return Err(fail(NAME, n, Some(l as u64), Some(slot), "block does not repeat R_l"));
                }
            }
        }
    }
    if s[block - 1] != Gf2Poly::all_slots(n) {
        return Err(fail(NAME, n, Some(block as u64), None, "S_{2^k} is not all ones"));
    }
    let shift = Gf2Poly::from_exponents(n, 1..n as u64);
    let mut p = Gf2Poly::all_slots(n);
    for j in 0..block {
        if p != s[block - j - 1] {
            return Err(fail(NAME, n, Some((j * n) as u64), None, format!("P_(jn) != S_{}", block - j)));
        }
        p = p.mul_unchecked(&shift);
    }
    Ok(())
}

/// `P_{2^k n}` by the recursion, checked against the block closed form.
pub fn p2kn_closed_form(n: usize) -> Result<Gf2Poly> {
    let closed = p2kn_block_form(n)?;
    let (k, _) = two_adic_split(n);
    let recursive = p_k(n, (1u64 << k) * n as u64)?;
    if recursive != closed {
        return Err(Error::CheckFailed(format!(
            "P_(2^k n) for n={n}: recursion gives {} but closed form gives {}",
            recursive.to_slots(),
            closed.to_slots()
        )));
    }
    Ok(recursive)
}

/// The second representation that rules out a third even term `x` of
/// `V(2,n)` when `n - 1 = 2^k m` with `m >= 3`:
/// `x = fixed_term + (x - fixed_term)` with
/// `fixed_term = (2^(k+1) + 3) n - 2^(k+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondRepWitness {
    pub n: usize,
    pub fixed_term: u64,
    /// Slot of `P_{2^k n}` whose entry is the membership of `fixed_term`.
    pub p_slot: usize,
    /// Slot of `R_{2^k + 1}` whose entry is the membership of `x - fixed_term`.
    pub r_slot: usize,
}

impl SecondRepWitness {
    /// The partner summand for a hypothetical even term `x`.
    pub fn complement(&self, x: u64) -> Option<u64> {
        x.checked_sub(self.fixed_term)
    }
}

/// Builds the witness and confirms both membership facts in the polynomial
/// calculus. `P_k` slot `i` encodes the odd value `n + 2k + 2(i-1)`, so
/// `fixed_term` sits at slot `n - 2^k + 1` of `P_{2^k n}`.
pub fn second_rep_witness(n: usize) -> Result<SecondRepWitness> {
    require_odd_n(n)?;
    if is_power_of_two(n - 1) {
        return Err(Error::InvalidArgument(format!("n - 1 = {} is a power of two", n - 1)));
    }
    let (k, _) = two_adic_split(n);
    let block = 1usize << k;
    let fixed_term = (2 * block as u64 + 3) * n as u64 - 2 * block as u64;
    let p_index = (block * n) as u64;
    let p_slot = n - block + 1;
    debug_assert_eq!(n as u64 + 2 * p_index + 2 * (p_slot as u64 - 1), fixed_term);

    let p = p2kn_closed_form(n)?;
    if !p.slot(p_slot) {
        return Err(Error::CheckFailed(format!("P_(2^k n)({p_slot}) = 0 for n={n}")));
    }
    let rows = r_rows(n, block + 1)?;
    let r_slot = block + 1;
    if !rows[block].slot(r_slot) || !rows[0].slot(1) {
        return Err(Error::CheckFailed(format!("R_(2^k+1)(2^k+1) = 0 for n={n}")));
    }
    Ok(SecondRepWitness { n, fixed_term, p_slot, r_slot })
}
