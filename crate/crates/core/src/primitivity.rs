//! Deciders for A-primitivity.
//!
//! Three routes with the same boolean contract:
//!
//! - [`is_a_primitive_oracle`] tests every proper divisor of `|w|`.
//! - [`is_a_primitive`] tests only the maximal proper divisors `n/p`, `p | n`
//!   prime. An A-root of length `r` implies an A-root of every length that is
//!   a multiple of `r` and divides `n`, and every proper divisor divides some
//!   `n/p`, so nothing is missed. O(n·ω(n)) after factoring.
//! - [`is_a_primitive_linear`] runs the same tests but first caches the Parikh
//!   vectors of the blocks of length `gpf(n)`; every `n/p` other than possibly
//!   `n/gpf(n)` is a multiple of `gpf(n)` and its blocks are sums of cached
//!   vectors. Since `ω(n)/gpf(n) ≤ 2/3` and `Σ_{p|n} p ≤ n`, the total is O(n).

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::numtheory::factorize;
use crate::parikh::{blocks_share_parikh, count_into, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimalityVerdict {
    pub is_a_primitive: bool,
    /// Length of an A-root of the word; present iff it is not A-primitive.
    pub witness_root_length: Option<usize>,
}

impl PrimalityVerdict {
    const PRIMITIVE: PrimalityVerdict = PrimalityVerdict {
        is_a_primitive: true,
        witness_root_length: None,
    };

    fn power_with_root(d: usize) -> Self {
        PrimalityVerdict {
            is_a_primitive: false,
            witness_root_length: Some(d),
        }
    }
}

/// Definition-chasing decider. The witness is the smallest A-root length.
pub fn is_a_primitive_oracle(w: &Word) -> Result<PrimalityVerdict> {
    let n = non_empty_len(w)?;
    let k = w.alphabet_size();
    let (mut reference, mut scratch) = (vec![0; k], vec![0; k]);
    for d in (1..n).filter(|d| n % d == 0) {
        if blocks_share_parikh(w.letters(), d, &mut reference, &mut scratch) {
            return Ok(PrimalityVerdict::power_with_root(d));
        }
    }
    Ok(PrimalityVerdict::PRIMITIVE)
}

/// Tests the maximal proper divisors `n/p` only.
pub fn is_a_primitive(w: &Word) -> Result<PrimalityVerdict> {
    let n = non_empty_len(w)?;
    if n == 1 {
        return Ok(PrimalityVerdict::PRIMITIVE);
    }
    let k = w.alphabet_size();
    let (mut reference, mut scratch) = (vec![0; k], vec![0; k]);
    let f = factorize(n as u64)?;
    for p in f.primes() {
        let d = n / p as usize;
        if blocks_share_parikh(w.letters(), d, &mut reference, &mut scratch) {
            return Ok(PrimalityVerdict::power_with_root(d));
        }
    }
    Ok(PrimalityVerdict::PRIMITIVE)
}

/// Linear-time decider over cached block Parikh vectors.
pub fn is_a_primitive_linear(w: &Word) -> Result<PrimalityVerdict> {
    let n = non_empty_len(w)?;
    let mut decider = LinearDecider::new(n, w.alphabet_size())?;
    Ok(decider.decide(w.letters()))
}

fn non_empty_len(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(domain("the empty word is not classified"));
    }
    Ok(w.len())
}

/// The linear-time decider for one fixed word length and alphabet size.
///
/// Construction factors the length and lays out the divisor plan; each
/// [`decide`](Self::decide) call reuses the buffers, so deciding many words of
/// the same length allocates nothing.
#[derive(Debug, Clone)]
pub struct LinearDecider {
    len: usize,
    alphabet_size: usize,
    gpf: usize,
    /// `n / gpf(n)` when `gpf(n)^2` does not divide `n`; tested directly.
    eager: Option<usize>,
    /// The remaining maximal divisors, all multiples of `gpf(n)`.
    cached: Vec<usize>,
    /// Parikh vectors of the length-`gpf` blocks, flattened `block * k + letter`.
    cache: Vec<usize>,
    reference: Vec<usize>,
    scratch: Vec<usize>,
}

impl LinearDecider {
    pub fn new(len: usize, alphabet_size: usize) -> Result<Self> {
        if len == 0 {
            return Err(domain("the empty word is not classified"));
        }
        if alphabet_size == 0 {
            return Err(domain("alphabet size must be at least 1"));
        }
        let k = alphabet_size;
        let mut plan = LinearDecider {
            len,
            alphabet_size,
            gpf: 1,
            eager: None,
            cached: Vec::new(),
            cache: Vec::new(),
            reference: vec![0; k],
            scratch: vec![0; k],
        };
        if len == 1 {
            return Ok(plan);
        }
        let f = factorize(len as u64)?;
        let gpf = f.gpf().expect("len >= 2") as usize;
        plan.gpf = gpf;
        plan.cached = f.primes().map(|p| len / p as usize).collect();
        if !(len / gpf).is_multiple_of(gpf) {
            let d = len / gpf;
            plan.cached.retain(|&c| c != d);
            plan.eager = Some(d);
        }
        if !plan.cached.is_empty() {
            plan.cache = vec![0; (len / gpf) * k];
        }
        Ok(plan)
    }

    pub fn word_length(&self) -> usize {
        self.len
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// Decides the word with the given letters.
    ///
    /// # Panics
    /// If `letters.len()` differs from the planned length or a letter lies
    /// outside the planned alphabet.
    pub fn decide(&mut self, letters: &[u32]) -> PrimalityVerdict {
        assert_eq!(letters.len(), self.len, "word length differs from the plan");
        if self.len == 1 {
            return PrimalityVerdict::PRIMITIVE;
        }
        if let Some(d) = self.eager {
            // A mismatch here already settles the answer, so the cache is
            // only built when this test passes.
            if blocks_share_parikh(letters, d, &mut self.reference, &mut self.scratch) {
                return PrimalityVerdict::power_with_root(d);
            }
        }
        if self.cached.is_empty() {
            return PrimalityVerdict::PRIMITIVE;
        }
        let k = self.alphabet_size;
        for (block, counts) in letters
            .chunks_exact(self.gpf)
            .zip(self.cache.chunks_exact_mut(k))
        {
            count_into(block, counts);
        }
        for i in 0..self.cached.len() {
            let d = self.cached[i];
            if self.cached_blocks_agree(d / self.gpf) {
                return PrimalityVerdict::power_with_root(d);
            }
        }
        PrimalityVerdict::PRIMITIVE
    }

    /// Whether all blocks made of `span` consecutive cached vectors agree.
    fn cached_blocks_agree(&mut self, span: usize) -> bool {
        let k = self.alphabet_size;
        let stride = span * k;
        let mut blocks = self.cache.chunks_exact(stride);
        let Some(first) = blocks.next() else {
            return true;
        };
        sum_vectors(first, k, &mut self.reference);
        for block in blocks {
            sum_vectors(block, k, &mut self.scratch);
            if self.scratch != self.reference {
                return false;
            }
        }
        true
    }
}

fn sum_vectors(flat: &[usize], k: usize, out: &mut [usize]) {
    out.iter_mut().for_each(|c| *c = 0);
    if k == 1 {
        out[0] = flat.iter().sum();
        return;
    }
    for v in flat.chunks_exact(k) {
        for (o, c) in out.iter_mut().zip(v) {
            *o += c;
        }
    }
}

/// Selector for the three deciders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Oracle,
    Fast,
    Linear,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Oracle, Algorithm::Fast, Algorithm::Linear];

    pub fn decide(self, w: &Word) -> Result<PrimalityVerdict> {
        match self {
            Algorithm::Oracle => is_a_primitive_oracle(w),
            Algorithm::Fast => is_a_primitive(w),
            Algorithm::Linear => is_a_primitive_linear(w),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Oracle => "oracle",
            Algorithm::Fast => "fast",
            Algorithm::Linear => "linear",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Algorithm::Oracle),
            "fast" => Ok(Algorithm::Fast),
            "linear" => Ok(Algorithm::Linear),
            other => Err(domain(format!("unknown algorithm {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parikh::has_a_root_of_length;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn all_words(n: usize, k: u32) -> impl Iterator<Item = Word> {
        let total = (k as u64).pow(n as u32);
        (0..total).map(move |mut code| {
            let letters = (0..n)
                .map(|_| {
                    let l = (code % k as u64) as u32;
                    code /= k as u64;
                    l
                })
                .collect();
            Word::new(letters, k as usize).unwrap()
        })
    }

    #[test]
    fn oracle_examples() {
        assert!(is_a_primitive_oracle(&w("aabbab")).unwrap().is_a_primitive);
        let v = is_a_primitive_oracle(&w("aabbabab")).unwrap();
        assert_eq!(v, PrimalityVerdict::power_with_root(4));
        assert!(is_a_primitive_oracle(&w("a")).unwrap().is_a_primitive);
        assert_eq!(
            is_a_primitive_oracle(&w("abababab"))
                .unwrap()
                .witness_root_length,
            Some(2)
        );
    }

    #[test]
    fn fast_examples() {
        assert!(is_a_primitive(&w("aabbab")).unwrap().is_a_primitive);
        assert!(!is_a_primitive(&w("aabbabab")).unwrap().is_a_primitive);
        assert!(!is_a_primitive(&w("aaaaaaaa")).unwrap().is_a_primitive);
    }

    #[test]
    fn linear_examples() {
        assert!(is_a_primitive_linear(&w("aabbab")).unwrap().is_a_primitive);
        assert!(
            is_a_primitive_linear(&w("bbababaa"))
                .unwrap()
                .is_a_primitive
        );
        assert!(
            !is_a_primitive_linear(&w("aabbabab"))
                .unwrap()
                .is_a_primitive
        );
        assert!(is_a_primitive_linear(&w("b")).unwrap().is_a_primitive);
        assert!(is_a_primitive_linear(&w("ab")).unwrap().is_a_primitive);
    }

    #[test]
    fn empty_word_is_rejected() {
        let empty = Word::new(vec![], 2).unwrap();
        for alg in Algorithm::ALL {
            assert!(matches!(alg.decide(&empty), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn conjugation_does_not_preserve_primitivity() {
        assert!(
            is_a_primitive_linear(&w("bbababaa"))
                .unwrap()
                .is_a_primitive
        );
        assert!(
            !is_a_primitive_linear(&w("aabbabab"))
                .unwrap()
                .is_a_primitive
        );
    }

    #[test]
    fn deciders_agree_on_small_words() {
        for (k, max_n) in [(1u32, 30usize), (2, 12), (3, 7), (4, 5)] {
            for n in 1..=max_n {
                let mut plan = LinearDecider::new(n, k as usize).unwrap();
                for word in all_words(n, k) {
                    let oracle = is_a_primitive_oracle(&word).unwrap();
                    let fast = is_a_primitive(&word).unwrap();
                    let linear = is_a_primitive_linear(&word).unwrap();
                    assert_eq!(oracle.is_a_primitive, fast.is_a_primitive, "{word}");
                    assert_eq!(oracle.is_a_primitive, linear.is_a_primitive, "{word}");
                    assert_eq!(plan.decide(word.letters()), linear);
                    for v in [oracle, fast, linear] {
                        assert_eq!(v.is_a_primitive, v.witness_root_length.is_none());
                        if let Some(d) = v.witness_root_length {
                            assert!(d < n);
                            assert!(has_a_root_of_length(&word, d).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn linear_handles_prime_and_square_gpf_lengths() {
        // n = 18: gpf 3 with 3^2 | 18, so every maximal divisor is cached
        let mut x = "aabbab".repeat(3);
        assert!(!is_a_primitive_linear(&w(&x)).unwrap().is_a_primitive);
        x.replace_range(0..2, "bb");
        assert_eq!(
            is_a_primitive_linear(&w(&x)).unwrap().is_a_primitive,
            is_a_primitive_oracle(&w(&x)).unwrap().is_a_primitive
        );
        // prime length: only the unary test applies
        assert!(!is_a_primitive_linear(&w("ccccccc")).unwrap().is_a_primitive);
        assert!(is_a_primitive_linear(&w("cccccca")).unwrap().is_a_primitive);
    }

    #[test]
    fn algorithm_names_round_trip() {
        for alg in Algorithm::ALL {
            assert_eq!(alg.name().parse::<Algorithm>().unwrap(), alg);
        }
        assert!("quadratic".parse::<Algorithm>().is_err());
    }

    proptest! {
        #[test]
        fn verdicts_are_deterministic(letters in prop::collection::vec(0u32..3, 1..60)) {
            let word = Word::new(letters, 3).unwrap();
            for alg in Algorithm::ALL {
                prop_assert_eq!(alg.decide(&word).unwrap(), alg.decide(&word).unwrap());
            }
        }

        #[test]
        fn powers_of_a_block_are_detected(
            block in prop::collection::vec(0u32..3, 1..8),
            reps in 2usize..6,
            seed in any::<u64>(),
        ) {
            // every block is a rotation of the first, so all share its Parikh vector
            let len = block.len();
            let mut letters = Vec::new();
            for r in 0..reps {
                let shift = (seed as usize).wrapping_add(r * 7) % len;
                letters.extend(block.iter().cycle().skip(shift).take(len));
            }
            let word = Word::new(letters, 3).unwrap();
            for alg in Algorithm::ALL {
                prop_assert!(!alg.decide(&word).unwrap().is_a_primitive);
            }
        }
    }
}
