//! Integer arithmetic over the lengths of words: factorization by trial
//! division, the classical arithmetic functions, and the middle layer of the
//! divisor lattice.

use crate::error::{domain, Result};

/// Prime factorization `n = ∏ p_i^{α_i}`, primes strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    entries: Vec<(u64, u32)>,
}

impl Factorization {
    /// `(prime, exponent)` pairs in ascending prime order.
    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().map(|&(p, _)| p)
    }

    /// ω(n): number of distinct prime factors.
    pub fn omega(&self) -> u32 {
        self.entries.len() as u32
    }

    /// ω′(n): number of prime factors counted with multiplicity.
    pub fn omega_prime(&self) -> u32 {
        self.entries.iter().map(|&(_, e)| e).sum()
    }

    /// d(n) = ∏ (1 + α_i).
    pub fn num_divisors(&self) -> u64 {
        self.entries.iter().map(|&(_, e)| 1 + e as u64).product()
    }

    /// Greatest prime factor, `None` for the unit.
    pub fn gpf(&self) -> Option<u64> {
        self.entries.last().map(|&(p, _)| p)
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> u64 {
        self.entries.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Sorted, duplicate-free set of positive integers, typically divisors of some n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DivisorSet {
    values: Vec<u64>,
}

impl DivisorSet {
    fn from_unsorted(mut values: Vec<u64>) -> Self {
        values.sort_unstable();
        values.dedup();
        DivisorSet { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.values
    }
}

/// The arithmetic functions of an integer n ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arith {
    pub omega: u32,
    pub omega_prime: u32,
    pub num_divisors: u64,
    pub gpf: u64,
}

/// Factorizes `n` by repeatedly locating the least prime factor with trial
/// division up to `ceil(sqrt(n))`, extracting its full power, and restarting
/// on the cofactor. A cofactor left over when no divisor is found is prime.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(domain("cannot factorize 0"));
    }
    let mut n = n;
    let mut entries = Vec::new();
    loop {
        let mut p: u64 = 2;
        let mut found = false;
        // p <= ceil(sqrt(n))  <=>  (p - 1)^2 < n
        while !found && (p - 1) * (p - 1) < n {
            if n.is_multiple_of(p) {
                found = true;
                let mut e = 0;
                while n.is_multiple_of(p) {
                    n /= p;
                    e += 1;
                }
                entries.push((p, e));
            }
            p += 1;
        }
        if !found {
            break;
        }
    }
    if n != 1 {
        entries.push((n, 1));
    }
    Ok(Factorization { entries })
}

pub fn arith(n: u64) -> Result<Arith> {
    if n < 2 {
        return Err(domain(format!("arith requires n >= 2, got {n}")));
    }
    let f = factorize(n)?;
    Ok(Arith {
        omega: f.omega(),
        omega_prime: f.omega_prime(),
        num_divisors: f.num_divisors(),
        gpf: f.gpf().expect("n >= 2 has a prime factor"),
    })
}

/// Möbius function μ(n).
pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if f.entries.iter().any(|&(_, e)| e >= 2) {
        return Ok(0);
    }
    Ok(if f.omega() % 2 == 0 { 1 } else { -1 })
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// The i-th prime, 1-based (`nth_prime(1) == 2`), by incremental trial division.
pub fn nth_prime(i: usize) -> Result<u64> {
    if i == 0 {
        return Err(domain("primes are indexed from 1"));
    }
    let mut count = 0;
    let mut candidate = 1u64;
    while count < i {
        candidate += 1;
        if is_prime(candidate) {
            count += 1;
        }
    }
    Ok(candidate)
}

/// All divisors of `n`, ascending, including 1 and `n`.
pub fn divisors(n: u64) -> Result<DivisorSet> {
    let f = factorize(n)?;
    Ok(divisors_of(&f))
}

pub(crate) fn divisors_of(f: &Factorization) -> DivisorSet {
    let mut values = vec![1u64];
    for &(p, e) in &f.entries {
        let current = values.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..current {
                values.push(values[i] * pk);
            }
        }
    }
    DivisorSet::from_unsorted(values)
}

/// D(n): divisors whose exponent vector sums to `floor(ω′(n)/2)`.
///
/// Built by enumerating bounded exponent vectors directly rather than
/// filtering `divisors(n)`.
pub fn middle_antichain(n: u64) -> Result<DivisorSet> {
    if n < 2 {
        return Err(domain(format!("middle antichain requires n >= 2, got {n}")));
    }
    let f = factorize(n)?;
    let target = f.omega_prime() / 2;
    let mut out = Vec::new();
    collect_layer(f.entries(), target, 1, &mut out);
    Ok(DivisorSet::from_unsorted(out))
}

fn collect_layer(entries: &[(u64, u32)], remaining: u32, acc: u64, out: &mut Vec<u64>) {
    match entries.split_first() {
        None => {
            if remaining == 0 {
                out.push(acc);
            }
        }
        Some((&(p, alpha), rest)) => {
            // the tail can absorb at most this many
            let tail_capacity: u32 = rest.iter().map(|&(_, e)| e).sum();
            let lo = remaining.saturating_sub(tail_capacity);
            let hi = alpha.min(remaining);
            for beta in lo..=hi {
                collect_layer(rest, remaining - beta, acc * p.pow(beta), out);
            }
        }
    }
}

/// T(n): every multiple `k·d ≤ n` of an element `d` of D(n), ascending.
pub fn multiples_closure(n: u64) -> Result<Vec<u64>> {
    let layer = middle_antichain(n)?;
    let len = usize::try_from(n).map_err(|_| domain("n too large for multiples closure"))?;
    let mut hit = vec![false; len + 1];
    for &d in layer.values() {
        let d = d as usize;
        let mut m = d;
        while m <= len {
            hit[m] = true;
            m += d;
        }
    }
    Ok(hit
        .iter()
        .enumerate()
        .filter(|&(_, &h)| h)
        .map(|(i, _)| i as u64)
        .collect())
}

/// True iff no element divides a different element. Values must be positive.
pub fn is_division_free(set: &[u64]) -> bool {
    let mut values = set.to_vec();
    values.sort_unstable();
    values.dedup();
    debug_assert!(values.first().is_none_or(|&v| v > 0));
    for (i, &a) in values.iter().enumerate() {
        for &b in &values[i + 1..] {
            if b % a == 0 {
                return false;
            }
        }
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
