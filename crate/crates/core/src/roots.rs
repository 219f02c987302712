//! All A-roots and A-primitive roots of a word.
//!
//! An A-root of `w` is a prefix `u` such that `w` splits into at least two
//! blocks of length `|u|`, each with Parikh vector `Ψ(u)`. Roots are
//! distinguished by length; the A-primitive ones have division-free lengths.

use crate::error::{domain, Result};
use crate::parikh::{has_a_root_of_length, Word};
use crate::primitivity::is_a_primitive_linear;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootProfile {
    pub word_length: usize,
    /// Proper divisors `d < n` at which the word is an Abelian power.
    pub a_root_lengths: Vec<usize>,
    /// The subset whose length-`d` prefix is itself A-primitive.
    pub a_primitive_root_lengths: Vec<usize>,
}

impl RootProfile {
    /// A word with no proper A-root is A-primitive.
    pub fn is_a_primitive(&self) -> bool {
        self.a_root_lengths.is_empty()
    }
}

/// Scans every proper divisor of `|w|`.
pub fn root_profile(w: &Word) -> Result<RootProfile> {
    let n = w.len();
    if n < 2 {
        return Err(domain(format!(
            "an Abelian power has at least two blocks; word length {n} is too short"
        )));
    }
    let mut a_root_lengths = Vec::new();
    let mut a_primitive_root_lengths = Vec::new();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        if has_a_root_of_length(w, d)? {
            a_root_lengths.push(d);
            if is_a_primitive_linear(&w.prefix(d))?.is_a_primitive {
                a_primitive_root_lengths.push(d);
            }
        }
    }
    Ok(RootProfile {
        word_length: n,
        a_root_lengths,
        a_primitive_root_lengths,
    })
}

/// The A-primitive roots themselves, shortest first.
pub fn a_primitive_roots(w: &Word) -> Result<Vec<Word>> {
    let profile = root_profile(w)?;
    Ok(profile
        .a_primitive_root_lengths
        .iter()
        .map(|&d| w.prefix(d))
        .collect())
}

pub fn count_distinct_a_primitive_roots(w: &Word) -> Result<usize> {
    Ok(root_profile(w)?.a_primitive_root_lengths.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{gcd, is_division_free, middle_antichain};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn profile_examples() {
        let p = root_profile(&w("aabbabababab")).unwrap();
        assert_eq!(p.a_primitive_root_lengths, vec![4, 6]);
        assert_eq!(p.a_root_lengths, vec![4, 6]);

        let p = root_profile(&w("aabbab")).unwrap();
        assert!(p.a_root_lengths.is_empty());
        assert!(p.a_primitive_root_lengths.is_empty());
        assert!(p.is_a_primitive());

        let p = root_profile(&w("aaaa")).unwrap();
        assert_eq!(p.a_root_lengths, vec![1, 2]);
        assert_eq!(p.a_primitive_root_lengths, vec![1]);
    }

    #[test]
    fn roots_examples() {
        let names = |s: &str| -> Vec<String> {
            a_primitive_roots(&w(s))
                .unwrap()
                .iter()
                .map(|r| r.to_string())
                .collect()
        };
        assert_eq!(names("aabbabababab"), vec!["aabb", "aabbab"]);
        assert_eq!(names("abab"), vec!["ab"]);
        assert_eq!(names("aabbabab"), vec!["aabb"]);
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            count_distinct_a_primitive_roots(&w("aabbabababab")).unwrap(),
            2
        );
        assert_eq!(count_distinct_a_primitive_roots(&w("aabbab")).unwrap(), 0);
        assert_eq!(count_distinct_a_primitive_roots(&w("aabbabab")).unwrap(), 1);
    }

    #[test]
    fn short_words_are_rejected() {
        assert!(root_profile(&w("a")).is_err());
        assert!(root_profile(&Word::new(vec![], 2).unwrap()).is_err());
    }

    #[test]
    fn profile_invariants_on_small_binary_words() {
        for n in 2..=12usize {
            let s = middle_antichain(n as u64).unwrap().len();
            for bits in 0u32..(1 << n) {
                let word = Word::new((0..n).map(|i| (bits >> i) & 1).collect(), 2).unwrap();
                let p = root_profile(&word).unwrap();
                let lens: Vec<u64> = p
                    .a_primitive_root_lengths
                    .iter()
                    .map(|&d| d as u64)
                    .collect();
                assert!(p
                    .a_primitive_root_lengths
                    .iter()
                    .all(|d| p.a_root_lengths.contains(d)));
                assert!(is_division_free(&lens));
                for (i, &a) in lens.iter().enumerate() {
                    for &b in &lens[i + 1..] {
                        assert!(gcd(a, b) >= 2, "{word}");
                    }
                }
                assert!(lens.len() <= s);
                assert_eq!(
                    p.is_a_primitive(),
                    is_a_primitive_linear(&word).unwrap().is_a_primitive
                );
                // upward closure within proper divisors
                for &d in &p.a_root_lengths {
                    for m in (d..n).step_by(d).filter(|m| n % m == 0) {
                        assert!(p.a_root_lengths.contains(&m), "{word}: {d} -> {m}");
                    }
                }
            }
        }
    }
}
