//! The polynomial families that track membership windows of `V(2,n)`.
//!
//! Vectors are read through [`Gf2Poly::slot`]. For odd `n >= 5`:
//! * `Q_1 = 1`, `Q_{j+1} = t Q_j`;
//! * `R_1 = 1`, `R_{k+1} = (t + 1) R_k`, which agrees with `Q_{1 + n(k-1)}`;
//! * `P_0 = (1, ..., 1)`, `P_{k+1} = (t^(n-1) + 1) P_k`;
//! * `S_1 = t + t^(2^k + 1) + ... + t^((m-1) 2^k + 1)`, `S_{l+1} = (t + 1) S_l`,
//!   where `n - 1 = 2^k m` with `m` odd.

use super::poly::Gf2Poly;
use crate::error::{invalid, Result};

pub(crate) fn require_odd_n(n: usize) -> Result<()> {
    if n < 5 || n.is_multiple_of(2) {
        return invalid(format!("n must be odd and at least 5, got {n}"));
    }
    Ok(())
}

/// Splits `n - 1 = 2^k m` with `m` odd; returns `(k, m)`.
pub fn two_adic_split(n: usize) -> (u32, usize) {
    let k = (n - 1).trailing_zeros();
    (k, (n - 1) >> k)
}

pub fn is_power_of_two(x: usize) -> bool {
    x != 0 && x & (x - 1) == 0
}

/// `R_k = (t + 1)^(k-1)`.
pub fn r_k(n: usize, k: u64) -> Result<Gf2Poly> {
    require_odd_n(n)?;
    if k < 1 {
        return invalid("R_k is defined for k >= 1");
    }
    Ok(Gf2Poly::from_exponents(n, [0, 1]).pow(k - 1))
}

/// The first `count` members `R_1, ..., R_count`, built by the recursion.
pub fn r_rows(n: usize, count: usize) -> Result<Vec<Gf2Poly>> {
    require_odd_n(n)?;
    let step = Gf2Poly::from_exponents(n, [0, 1]);
    let mut rows = Vec::with_capacity(count);
    let mut cur = Gf2Poly::one(n);
    for _ in 0..count {
        let next = cur.mul_unchecked(&step);
        rows.push(std::mem::replace(&mut cur, next));
    }
    Ok(rows)
}

/// `Q_j = t^(j-1)`.
pub fn q_j(n: usize, j: u64) -> Result<Gf2Poly> {
    require_odd_n(n)?;
    if j < 1 {
        return invalid("Q_j is defined for j >= 1");
    }
    Ok(Gf2Poly::monomial(n, j - 1))
}

/// `P_k`, computed by applying the recursion `k` times.
pub fn p_k(n: usize, k: u64) -> Result<Gf2Poly> {
    require_odd_n(n)?;
    let step = Gf2Poly::from_exponents(n, [n as u64 - 1, 0]);
    let mut p = Gf2Poly::all_slots(n);
    for _ in 0..k {
        p = p.mul_unchecked(&step);
    }
    Ok(p)
}

/// `S_l`; only defined when `n - 1` is not a power of two.
pub fn s_l(n: usize, l: u64) -> Result<Gf2Poly> {
    require_odd_n(n)?;
    if is_power_of_two(n - 1) {
        return invalid(format!("S_l needs n - 1 not a power of two, got n = {n}"));
    }
    if l < 1 {
        return invalid("S_l is defined for l >= 1");
    }
    let (k, m) = two_adic_split(n);
    let block = 1u64 << k;
    let s1 = Gf2Poly::from_exponents(n, (0..m as u64).map(|j| j * block + 1));
    Ok(s1.mul_unchecked(&Gf2Poly::from_exponents(n, [0, 1]).pow(l - 1)))
}

/// Closed form of `P_{2^k n}`: ones on the slots `j 2^k + 2 ..= (j + 1) 2^k + 1`
/// for even `j < m`, zeros elsewhere.
pub fn p2kn_block_form(n: usize) -> Result<Gf2Poly> {
    require_odd_n(n)?;
    if is_power_of_two(n - 1) {
        return invalid(format!("closed form needs n - 1 not a power of two, got n = {n}"));
    }
    let (k, m) = two_adic_split(n);
    let block = 1usize << k;
    let mut window = vec![false; n];
    for j in (0..m).step_by(2) {
        for slot in j * block + 2..=(j + 1) * block + 1 {
            window[slot - 1] = true;
        }
    }
    Ok(Gf2Poly::from_window(&window))
}

/// Rows of `0`/`1` characters, one polynomial per line.
pub fn table_dump(rows: &[Gf2Poly]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.to_slots());
        out.push('\n');
    }
    out
}

/// The first `count` rows of Pascal's triangle mod 2, built by the additive
/// rule and padded with zeros to `width` columns, in the layout of [`table_dump`].
pub fn pascal_mod2_dump(count: usize, width: usize) -> String {
    let mut out = String::new();
    let mut row = vec![false; width.max(1)];
    row[0] = true;
    for _ in 0..count {
        out.extend(row.iter().take(width).map(|&b| if b { '1' } else { '0' }));
        out.push('\n');
        for i in (1..row.len()).rev() {
            row[i] ^= row[i - 1];
        }
    }
    out
}
