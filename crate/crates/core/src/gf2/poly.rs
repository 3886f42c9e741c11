use std::fmt;

use crate::error::{invalid, Result};

/// An element of `GF(2)[t]/(t^n + t + 1)`, always stored reduced (degree < n).
///
/// Coefficients are packed 64 per word; bit `e` holds the coefficient of
/// `t^e`.
///
/// The vector form `(a_1, ..., a_n)` is a membership window. It maps to the
/// ring by `a_1 + a_n + a_2 t + ... + a_n t^(n-1)`, the basis in which one
/// step of the window recurrence is multiplication by `t`. Slot `i` therefore
/// reads coefficient `i - 1`, except slot 1, which reads `c_0 + c_(n-1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Poly {
    n: usize,
    words: Vec<u64>,
}

fn word_count(bits: usize) -> usize {
    bits.div_ceil(64)
}

impl Gf2Poly {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 3, "modulus degree must be at least 3");
        Self { n, words: vec![0; word_count(n)] }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0)
    }

    /// `t^e`, reduced.
    pub fn monomial(n: usize, e: u64) -> Self {
        if e < n as u64 {
            let mut p = Self::zero(n);
            p.set_coeff(e as usize, true);
            p
        } else {
            Self::monomial(n, 1).pow(e)
        }
    }

    /// Sum of `t^e` over the given exponents (exponents may exceed `n - 1`).
    pub fn from_exponents(n: usize, exponents: impl IntoIterator<Item = u64>) -> Self {
        let mut p = Self::zero(n);
        for e in exponents {
            p.add_assign_unchecked(&Self::monomial(n, e));
        }
        p
    }

    /// Parses the vector form, one `0`/`1` character per slot.
    pub fn from_slots(slots: &str) -> Result<Self> {
        let bits = slots
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => invalid(format!("unexpected character `{ch}` in slot string")),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.len() < 3 {
            return invalid("need at least three slots");
        }
        Ok(Self::from_window(&bits))
    }

    /// The element whose vector form is `window` (slot 1 first).
    pub fn from_window(window: &[bool]) -> Self {
        let n = window.len();
        let mut p = Self::zero(n);
        for (e, &b) in window.iter().enumerate() {
            p.set_coeff(e, b);
        }
        if window[n - 1] {
            p.set_coeff(0, !window[0]);
        }
        p
    }

    /// Vector form with every slot set.
    pub fn all_slots(n: usize) -> Self {
        Self::from_window(&vec![true; n])
    }

    /// `1 + t + ... + t^(len-1)`.
    pub fn ones_prefix(n: usize, len: usize) -> Self {
        let mut p = Self::zero(n);
        for e in 0..len.min(n) {
            p.set_coeff(e, true);
        }
        p
    }

    pub fn modulus_degree(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, e: usize) -> bool {
        e < self.n && (self.words[e / 64] >> (e % 64)) & 1 == 1
    }

    /// Entry `i` (1-based) of the vector form; slots outside `1..=n` read as 0.
    pub fn slot(&self, i: usize) -> bool {
        match i {
            0 => false,
            1 => self.coeff(0) ^ self.coeff(self.n - 1),
            _ => self.coeff(i - 1),
        }
    }

    pub fn window(&self) -> Vec<bool> {
        (1..=self.n).map(|i| self.slot(i)).collect()
    }

    fn set_coeff(&mut self, e: usize, value: bool) {
        let mask = 1u64 << (e % 64);
        if value {
            self.words[e / 64] |= mask;
        } else {
            self.words[e / 64] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&e| self.coeff(e))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return invalid(format!("modulus degree mismatch: {} vs {}", self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Schoolbook shift-XOR product followed by one folding step: the high
    /// half `H` (degree at most `n - 2`) contributes `(t + 1) H`.
    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.n;
        let mut acc = vec![0u64; word_count(2 * n)];
        for e in other.support() {
            xor_shifted(&mut acc, &self.words, e);
        }
        let mut high = vec![0u64; word_count(n) + 1];
        shift_right_into(&acc, n, &mut high);
        let mut out = Self::zero(n);
        let len = out.words.len();
        out.words.copy_from_slice(&acc[..len]);
        out.mask_top();
        let high_len = out.words.len();
        for (o, h) in out.words.iter_mut().zip(&high[..high_len]) {
            *o ^= h;
        }
        let mut shifted = vec![0u64; high_len + 1];
        xor_shifted(&mut shifted, &high[..high_len], 1);
        for (o, h) in out.words.iter_mut().zip(&shifted) {
            *o ^= h;
        }
        out.mask_top();
        out
    }

    fn mask_top(&mut self) {
        let rem = self.n % 64;
        if rem != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << rem) - 1;
        }
    }

    /// Multiplication by `t`: a one-bit shift with `t^n -> t + 1`.
    pub fn mul_t(&self) -> Self {
        let carry = self.coeff(self.n - 1);
        let mut out = Self::zero(self.n);
        let mut prev = 0u64;
        for (o, &w) in out.words.iter_mut().zip(&self.words) {
            *o = (w << 1) | prev;
            prev = w >> 63;
        }
        out.mask_top();
        if carry {
            out.words[0] ^= 0b11;
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// The vector form as `0`/`1` characters, slot 1 first.
    pub fn to_slots(&self) -> String {
        (1..=self.n).map(|i| if self.slot(i) { '1' } else { '0' }).collect()
    }

    /// Raw coefficients as `0`/`1` characters, constant term first.
    pub fn to_coeffs(&self) -> String {
        (0..self.n).map(|e| if self.coeff(e) { '1' } else { '0' }).collect()
    }
}

fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for (i, &w) in src.iter().enumerate() {
        if w == 0 {
            continue;
        }
        if let Some(d) = dst.get_mut(i + ws) {
            *d ^= w << bs;
        }
        if bs != 0 {
            if let Some(d) = dst.get_mut(i + ws + 1) {
                *d ^= w >> (64 - bs);
            }
        }
    }
}

fn shift_right_into(src: &[u64], shift: usize, dst: &mut [u64]) {
    let (ws, bs) = (shift / 64, shift % 64);
    for (i, d) in dst.iter_mut().enumerate() {
        let lo = src.get(i + ws).copied().unwrap_or(0);
        let hi = src.get(i + ws + 1).copied().unwrap_or(0);
        *d = if bs == 0 { lo } else { (lo >> bs) | (hi << (64 - bs)) };
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly(n={}, {})", self.n, self.to_coeffs())
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}
