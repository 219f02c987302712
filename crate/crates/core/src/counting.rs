//! Exact counts of primitive and A-primitive words.
//!
//! ψ_k(n) has the Möbius closed form. ψ_k^A(n) has none in general and is
//! counted by exhaustive enumeration under an explicit work budget; for `n = 1`
//! and prime `n` every primitive word is A-primitive, so ψ_k^A(n) = ψ_k(n).
//! Δ_k(n) = ψ_k(n) − ψ_k^A(n), with a closed form at prime powers summing over
//! Parikh vectors of the `p^{r-1}`-length blocks.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{domain, Error, Result};
use crate::numtheory::{divisors, is_prime, mobius};
use crate::parikh::Word;
use crate::primitivity::LinearDecider;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "ABELWORDS_BUDGET";

/// Default cap on weighted word evaluations (`k^n · n`).
pub const DEFAULT_BUDGET: u128 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Maximum `k^n · n` an enumeration may cost.
    pub budget: u128,
    /// Worker threads; `1` runs serially on the calling thread, `0` uses all
    /// available parallelism.
    pub threads: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            budget: DEFAULT_BUDGET,
            threads: 1,
        }
    }
}

impl EnumConfig {
    /// Default configuration with the budget taken from `ABELWORDS_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        let mut config = EnumConfig::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            config.budget = u128::from_str(raw.trim()).map_err(|_| {
                domain(format!(
                    "{BUDGET_ENV} must be a nonnegative integer, got {raw:?}"
                ))
            })?;
        }
        Ok(config)
    }
}

/// Weighted cost `k^n · n` of enumerating all words of length `n`; saturates.
pub fn enumeration_cost(k: u64, n: u64) -> u128 {
    u32::try_from(n)
        .ok()
        .and_then(|e| (k as u128).checked_pow(e))
        .and_then(|c| c.checked_mul(n as u128))
        .unwrap_or(u128::MAX)
}

fn check_args(k: u64, n: u64) -> Result<()> {
    if k == 0 {
        return Err(domain("alphabet size must be at least 1"));
    }
    if n == 0 {
        return Err(domain("word length must be at least 1"));
    }
    Ok(())
}

/// ψ_k(n) = Σ_{d | n} μ(d) k^{n/d}.
pub fn psi(k: u64, n: u64) -> Result<BigUint> {
    check_args(k, n)?;
    let base = BigInt::from(k);
    let mut total = BigInt::zero();
    for &d in divisors(n)?.values() {
        let mu = mobius(d)?;
        if mu != 0 {
            let exp = u32::try_from(n / d).map_err(|_| domain("exponent too large"))?;
            total += BigInt::from(mu) * base.pow(exp);
        }
    }
    total
        .to_biguint()
        .ok_or_else(|| Error::Internal(format!("negative psi({k}, {n})")))
}

/// ψ_k^A(n) when it follows from ψ_k(n): `n = 1` or `n` prime.
pub fn psi_a_closed_form(k: u64, n: u64) -> Result<Option<BigUint>> {
    check_args(k, n)?;
    if n == 1 || is_prime(n) {
        Ok(Some(psi(k, n)?))
    } else {
        Ok(None)
    }
}

/// ψ_k^A(n) by enumerating all `k^n` words in lexicographic order.
pub fn psi_a(k: u64, n: u64, config: &EnumConfig) -> Result<BigUint> {
    check_args(k, n)?;
    let cost = enumeration_cost(k, n);
    if cost > config.budget {
        return Err(Error::Budget {
            cost,
            budget: config.budget,
        });
    }
    let k = k as usize;
    let n = n as usize;
    let count = if config.threads == 1 {
        count_range(k, n, &[])?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| count_parallel(k, n))?
    };
    Ok(BigUint::from(count))
}

/// Splits the word space by a fixed-length leading prefix and counts each
/// lexicographic range independently.
fn count_parallel(k: usize, n: usize) -> Result<u64> {
    let target = 64 * rayon::current_num_threads();
    let mut prefix_len = 0;
    let mut ranges = 1usize;
    while prefix_len < n && ranges < target {
        prefix_len += 1;
        ranges *= k;
    }
    (0..ranges)
        .into_par_iter()
        .map(|code| {
            let mut prefix = vec![0u32; prefix_len];
            let mut c = code;
            for slot in prefix.iter_mut().rev() {
                *slot = (c % k) as u32;
                c /= k;
            }
            count_range(k, n, &prefix)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

/// Counts A-primitive words of length `n` that start with `prefix`, stepping
/// the remaining positions as an odometer.
fn count_range(k: usize, n: usize, prefix: &[u32]) -> Result<u64> {
    let mut decider = LinearDecider::new(n, k)?;
    let mut letters = vec![0u32; n];
    letters[..prefix.len()].copy_from_slice(prefix);
    let last = k as u32 - 1;
    let mut count = 0u64;
    loop {
        if decider.decide(&letters).is_a_primitive {
            count += 1;
        }
        let mut pos = n;
        loop {
            if pos == prefix.len() {
                return Ok(count);
            }
            pos -= 1;
            if letters[pos] < last {
                letters[pos] += 1;
                break;
            }
            letters[pos] = 0;
        }
    }
}

/// Δ_k(n) = ψ_k(n) − ψ_k^A(n), with ψ_k^A(n) enumerated.
pub fn delta(k: u64, n: u64, config: &EnumConfig) -> Result<BigUint> {
    let psi_value = psi(k, n)?;
    let psi_a_value = psi_a(k, n, config)?;
    difference(&psi_value, &psi_a_value, k, n)
}

fn difference(psi_value: &BigUint, psi_a_value: &BigUint, k: u64, n: u64) -> Result<BigUint> {
    if psi_a_value > psi_value {
        return Err(Error::Internal(format!(
            "psi_a({k}, {n}) = {psi_a_value} exceeds psi = {psi_value}"
        )));
    }
    Ok(psi_value - psi_a_value)
}

/// Δ_k(p^r) as a sum over all ordered Parikh vectors `(n_1, …, n_k)` of
/// length `m = p^{r-1}` of `C · (C^{p-1} − 1)`, `C` the multinomial `m; n_1…n_k`.
pub fn delta_prime_power(k: u64, p: u64, r: u32) -> Result<BigUint> {
    if k == 0 {
        return Err(domain("alphabet size must be at least 1"));
    }
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    if r < 2 {
        return Err(domain(format!("exponent must be at least 2, got {r}")));
    }
    let m = p
        .checked_pow(r - 1)
        .ok_or_else(|| domain("block length p^(r-1) overflows"))?;
    let exp = u32::try_from(p - 1).map_err(|_| domain("prime too large"))?;
    let mut total = BigUint::zero();
    sum_over_compositions(k, m, BigUint::one(), &mut |c: &BigUint| {
        total += c * (c.pow(exp) - BigUint::one());
    });
    Ok(total)
}

/// Calls `visit` with the multinomial coefficient of every ordered
/// `parts`-tuple of nonnegative integers summing to `remaining`, built as a
/// product of binomials `C(remaining, n_1) · C(remaining - n_1, n_2) · …`.
fn sum_over_compositions(
    parts: u64,
    remaining: u64,
    acc: BigUint,
    visit: &mut impl FnMut(&BigUint),
) {
    if parts == 1 {
        visit(&acc);
        return;
    }
    let mut binom = BigUint::one();
    for first in 0..=remaining {
        if first > 0 {
            // C(remaining, first) from C(remaining, first - 1)
            binom = binom * (remaining - first + 1) / first;
        }
        sum_over_compositions(parts - 1, remaining - first, &acc * &binom, visit);
    }
}

/// Classical primitivity: `w` is not `v^j` for any `j ≥ 2`.
pub fn is_primitive(w: &Word) -> Result<bool> {
    let n = w.len();
    if n == 0 {
        return Err(domain("the empty word is not classified"));
    }
    let letters = w.letters();
    for p in crate::numtheory::factorize(n as u64)?.primes() {
        let d = n / p as usize;
        if letters.chunks_exact(d).all(|block| block == &letters[..d]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub n: u64,
    pub psi: BigUint,
    pub psi_a: BigUint,
    pub delta: BigUint,
}

impl Serialize for CountRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut row = serializer.serialize_struct("CountRow", 4)?;
        row.serialize_field("n", &self.n)?;
        row.serialize_field("psi", &exact_number(&self.psi))?;
        row.serialize_field("psi_a", &exact_number(&self.psi_a))?;
        row.serialize_field("delta", &exact_number(&self.delta))?;
        row.end()
    }
}

/// JSON number carrying every digit of `v`.
pub(crate) fn exact_number(v: &BigUint) -> serde_json::Number {
    serde_json::Number::from_str(&v.to_string()).expect("decimal digits form a JSON number")
}

/// One row: ψ from the Möbius formula, ψ^A from the closed form when `n` is 1
/// or prime and by enumeration otherwise.
pub fn count_row(k: u64, n: u64, config: &EnumConfig) -> Result<CountRow> {
    let psi_value = psi(k, n)?;
    let psi_a_value = match psi_a_closed_form(k, n)? {
        Some(v) => v,
        None => psi_a(k, n, config)?,
    };
    let delta = difference(&psi_value, &psi_a_value, k, n)?;
    Ok(CountRow {
        n,
        psi: psi_value,
        psi_a: psi_a_value,
        delta,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub alphabet_size: u64,
    pub rows: Vec<CountRow>,
}

/// Rows `n = 1..=max_n` for alphabet size `k`.
pub fn figure1_table(k: u64, max_n: u64, config: &EnumConfig) -> Result<CountTable> {
    let rows = (1..=max_n)
        .map(|n| count_row(k, n, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(CountTable {
        alphabet_size: k,
        rows,
    })
}

impl CountTable {
    /// Header `n\tpsi\tpsi_a\tdelta`, one LF-terminated line per row.
    pub fn to_tsv(&self) -> String {
        render_tsv(&self.rows)
    }

    /// A JSON array of row objects on one line, followed by LF.
    pub fn to_json(&self) -> String {
        render_json(&self.rows)
    }
}

pub fn render_tsv(rows: &[CountRow]) -> String {
    let mut out = String::from("n\tpsi\tpsi_a\tdelta\n");
    for r in rows {
        writeln!(out, "{}\t{}\t{}\t{}", r.n, r.psi, r.psi_a, r.delta).unwrap();
    }
    out
}

pub fn render_json(rows: &[CountRow]) -> String {
    let mut out = serde_json::to_string(rows).expect("rows serialize");
    out.push('\n');
    out
}
