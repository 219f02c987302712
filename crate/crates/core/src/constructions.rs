//! Explicit binary word families.
//!
//! - `aabb(ab)^{p-2}` for prime `p`: A-primitive of length `2p`.
//! - `w_n = aabb(ab)^{(Q_n-4)/2}` with `Q_n = 2·p_1⋯p_n`: has the A-primitive
//!   roots `aabb(ab)^{p_m-2}` for every `m ≤ n`.
//! - `z_n`: built from the sorted multiples closure `t_1 < … < t_m = n` of the
//!   middle antichain D(n) as `a^{t_1} b^{t_1} ∏ a^{t_i-t_{i-1}} b^{t_i-t_{i-1}}`;
//!   has an A-primitive root of length `2t` for every `t ∈ D(n)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::numtheory::{is_prime, multiples_closure, nth_prime};
use crate::parikh::Word;

const A: u32 = 0;
const B: u32 = 1;

/// Longest word the constructions will materialize.
pub const MAX_CONSTRUCTION_LENGTH: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `aabb(ab)^{p-2}`, parameter prime.
    Prop1,
    /// `w_n`, parameter `n ≥ 1`.
    Multiroot,
    /// `z_n`, parameter `n ≥ 2`.
    Antichain,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prop1" => Ok(Family::Prop1),
            "multiroot" => Ok(Family::Multiroot),
            "antichain" => Ok(Family::Antichain),
            other => Err(domain(format!(
                "unknown family {other:?} (expected prop1, multiroot or antichain)"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Prop1 => "prop1",
            Family::Multiroot => "multiroot",
            Family::Antichain => "antichain",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionSpec {
    pub family: Family,
    pub parameter: u64,
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Word> {
        match self.family {
            Family::Prop1 => prop1_word(self.parameter),
            Family::Multiroot => multiroot_word(self.parameter),
            Family::Antichain => antichain_word(self.parameter),
        }
    }
}

/// `aabb(ab)^m` for `m ≥ 0`.
fn aabb_ab_power(m: u64) -> Result<Word> {
    let len = 4 + 2 * m;
    if len > MAX_CONSTRUCTION_LENGTH {
        return Err(domain(format!("construction of length {len} is too long")));
    }
    let mut letters = Vec::with_capacity(len as usize);
    letters.extend_from_slice(&[A, A, B, B]);
    for _ in 0..m {
        letters.extend_from_slice(&[A, B]);
    }
    Word::new(letters, 2)
}

pub fn prop1_word(p: u64) -> Result<Word> {
    if !is_prime(p) {
        return Err(domain(format!("prop1 requires a prime parameter, got {p}")));
    }
    aabb_ab_power(p - 2)
}

/// `Q_n = 2·∏_{i ≤ n} p_i`.
pub fn primorial_length(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(domain("multiroot requires n >= 1"));
    }
    let mut q: u64 = 2;
    for i in 1..=n as usize {
        q = q
            .checked_mul(nth_prime(i)?)
            .filter(|&q| q <= MAX_CONSTRUCTION_LENGTH)
            .ok_or_else(|| domain(format!("multiroot word for n = {n} is too long")))?;
    }
    Ok(q)
}

pub fn multiroot_word(n: u64) -> Result<Word> {
    let q = primorial_length(n)?;
    aabb_ab_power((q - 4) / 2)
}

pub fn antichain_word(n: u64) -> Result<Word> {
    if n < 2 {
        return Err(domain(format!("antichain requires n >= 2, got {n}")));
    }
    if 2 * n > MAX_CONSTRUCTION_LENGTH {
        return Err(domain(format!("antichain word for n = {n} is too long")));
    }
    let closure = multiples_closure(n)?;
    let mut letters = Vec::with_capacity(2 * n as usize);
    let mut previous = 0;
    for t in closure {
        let gap = (t - previous) as usize;
        letters.extend(std::iter::repeat_n(A, gap));
        letters.extend(std::iter::repeat_n(B, gap));
        previous = t;
    }
    Word::new(letters, 2)
}

/// Membership in `M = { aabb(ab)^{p-2} : p prime }`.
pub fn is_in_m(w: &Word) -> bool {
    let l = w.letters();
    if l.len() < 4 || !l.len().is_multiple_of(2) || l[..4] != [A, A, B, B] {
        return false;
    }
    if !l[4..].chunks_exact(2).all(|pair| pair == [A, B]) {
        return false;
    }
    is_prime(l.len() as u64 / 2)
}
