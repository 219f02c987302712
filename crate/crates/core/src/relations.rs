//! Block relations between words and Abelian commutation.
//!
//! `u ~_n x` holds when both words cut into length-`n` blocks that all share
//! one Parikh vector; `u ≃_n x` only asks parallel blocks to agree.
//!
//! `ux ~_n xu` holds exactly when the blocks `γ_1 … γ_r` of `ux` split at the
//! offset `c = |u| mod n` into `γ_i = α_i β_i` with all `α_i` sharing one
//! Parikh vector and all `β_i` sharing another. The blocks of `xu` are then
//! `β_i α_{i+1}` (indices mod `r`), and `u`, `x` are read off the sequence
//! `α_1 β_1 α_2 β_2 …` on either side of the cut.

use crate::error::{domain, Error, Result};
use crate::parikh::{count_into, has_a_root_of_length, parikh, Word};
use crate::primitivity::is_a_primitive_linear;

/// A factorization of `u` and `x` exhibiting `ux ~_n xu`.
///
/// `u = α_1 β_1 ⋯ α_{s-1} β_{s-1} α_s` and `x = β_s α_{s+1} β_{s+1} ⋯ α_r β_r`,
/// with `|α_i β_i| = n`. When `n` divides `|u|` the `β_i` are empty and
/// `α_i` are whole blocks. `s = r` occurs when `x` is the tail of the last
/// block (`|x| = n − |u| mod n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationWitness {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub alphas: Vec<Word>,
    pub betas: Vec<Word>,
}

impl CommutationWitness {
    /// Rebuilds `(u, x)` from the factors.
    pub fn reassemble(&self) -> (Word, Word) {
        let k = self
            .alphas
            .iter()
            .chain(&self.betas)
            .map(Word::alphabet_size)
            .max()
            .unwrap_or(1);
        let mut u = Vec::new();
        let mut x = Vec::new();
        for i in 0..self.r {
            // α_i goes to u for i < s (1-based i ≤ s); β_i goes to u for i < s - 1
            if i < self.s {
                u.extend_from_slice(self.alphas[i].letters());
            } else {
                x.extend_from_slice(self.alphas[i].letters());
            }
            if i + 1 < self.s {
                u.extend_from_slice(self.betas[i].letters());
            } else {
                x.extend_from_slice(self.betas[i].letters());
            }
        }
        (
            Word::new(u, k).expect("letters come from words over k"),
            Word::new(x, k).expect("letters come from words over k"),
        )
    }

    /// Checks the block-length, Parikh and reassembly conditions against `u`, `x`.
    pub fn validate(&self, u: &Word, x: &Word) -> std::result::Result<(), String> {
        if self.r == 0 || self.alphas.len() != self.r || self.betas.len() != self.r {
            return Err(format!("expected {} alphas and betas", self.r));
        }
        if self.s == 0 || self.s > self.r {
            return Err(format!("s = {} outside 1..={}", self.s, self.r));
        }
        if let Some(i) = (0..self.r).find(|&i| self.alphas[i].len() + self.betas[i].len() != self.n)
        {
            return Err(format!("|alpha_{0} beta_{0}| != {1}", i + 1, self.n));
        }
        let k = u.alphabet_size().max(x.alphabet_size());
        let psi = |w: &Word| {
            let mut c = vec![0; k];
            count_into(w.letters(), &mut c);
            c
        };
        let (a0, b0) = (psi(&self.alphas[0]), psi(&self.betas[0]));
        if self.alphas.iter().any(|a| psi(a) != a0) {
            return Err("alphas do not share a Parikh vector".into());
        }
        if self.betas.iter().any(|b| psi(b) != b0) {
            return Err("betas do not share a Parikh vector".into());
        }
        let (ru, rx) = self.reassemble();
        if ru.letters() != u.letters() || rx.letters() != x.letters() {
            return Err(format!("reassembles to ({ru}, {rx}) instead of ({u}, {x})"));
        }
        Ok(())
    }
}

fn check_pair(u: &Word, x: &Word, n: usize) -> Result<()> {
    if u.len() != x.len() {
        return Err(domain(format!(
            "words have different lengths {} and {}",
            u.len(),
            x.len()
        )));
    }
    if n == 0 || !u.len().is_multiple_of(n) {
        return Err(domain(format!(
            "block length {n} does not divide word length {}",
            u.len()
        )));
    }
    Ok(())
}

fn block_vectors(w: &Word, n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    w.letters().chunks_exact(n).map(move |block| {
        let mut c = vec![0; k];
        count_into(block, &mut c);
        c
    })
}

/// `u ~_n x`: every length-`n` block of either word has one common Parikh vector.
pub fn sim_n(u: &Word, x: &Word, n: usize) -> Result<bool> {
    check_pair(u, x, n)?;
    let k = u.alphabet_size().max(x.alphabet_size());
    let mut blocks = block_vectors(u, n, k).chain(block_vectors(x, n, k));
    let Some(first) = blocks.next() else {
        return Ok(true);
    };
    Ok(blocks.all(|b| b == first))
}

/// `u ≃_n x`: the i-th blocks of `u` and `x` share a Parikh vector for every i.
pub fn simeq_n(u: &Word, x: &Word, n: usize) -> Result<bool> {
    check_pair(u, x, n)?;
    let k = u.alphabet_size().max(x.alphabet_size());
    Ok(block_vectors(u, n, k)
        .zip(block_vectors(x, n, k))
        .all(|(a, b)| a == b))
}

/// Returns a validated witness iff `ux ~_n xu`.
pub fn commute_check(u: &Word, x: &Word, n: usize) -> Result<Option<CommutationWitness>> {
    if u.is_empty() || x.is_empty() {
        return Err(domain("commutation needs nonempty u and x"));
    }
    let total = u.len() + x.len();
    if n == 0 || !total.is_multiple_of(n) {
        return Err(domain(format!(
            "block length {n} does not divide |u| + |x| = {total}"
        )));
    }
    let ux = u.concat(x);
    let xu = x.concat(u);
    if !sim_n(&ux, &xu, n)? {
        return Ok(None);
    }
    let r = total / n;
    let offset = u.len() % n;
    let (cut, s) = if offset == 0 {
        (n, u.len() / n)
    } else {
        (offset, u.len() / n + 1)
    };
    let (alphas, betas) = (0..r)
        .map(|i| {
            let start = i * n;
            (
                ux.slice(start, start + cut),
                ux.slice(start + cut, start + n),
            )
        })
        .unzip();
    let witness = CommutationWitness {
        n,
        r,
        s,
        alphas,
        betas,
    };
    witness.validate(u, x).map_err(|e| {
        Error::Internal(format!(
            "commutation witness for u = {u}, x = {x}, n = {n} failed validation: {e}"
        ))
    })?;
    Ok(Some(witness))
}

/// When `ux ~_n xu` and the length-`n` prefix of `u` is an A-primitive root
/// of `u`, returns the length-`n` prefix of `x`, whose blocks then all carry
/// the root's Parikh vector. Returns `None` when `u` has no A-primitive root
/// of length `n` (including `n = |u|`).
pub fn shared_root_check(u: &Word, x: &Word, n: usize) -> Result<Option<Word>> {
    if u.is_empty() || x.is_empty() {
        return Err(domain("shared root check needs nonempty u and x"));
    }
    if n == 0 || !u.len().is_multiple_of(n) || !x.len().is_multiple_of(n) {
        return Err(domain(format!(
            "block length {n} must divide |u| = {} and |x| = {}",
            u.len(),
            x.len()
        )));
    }
    if commute_check(u, x, n)?.is_none() {
        return Err(domain(format!("ux and xu are not related by ~_{n}")));
    }
    if n == u.len() || !has_a_root_of_length(u, n)? {
        return Ok(None);
    }
    let root = u.prefix(n);
    if !is_a_primitive_linear(&root)?.is_a_primitive {
        return Ok(None);
    }
    let k = u.alphabet_size().max(x.alphabet_size());
    let target = parikh(&root.with_alphabet(k)?);
    if block_vectors(x, n, k).any(|b| b != target.counts()) {
        return Err(Error::Internal(format!(
            "x = {x} does not share the A-root {} of u = {u}",
            u.prefix(n)
        )));
    }
    Ok(Some(x.prefix(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn strs(ws: &[Word]) -> Vec<String> {
        ws.iter().map(Word::to_string).collect()
    }

    #[test]
    fn sim_examples() {
        assert!(sim_n(&w("abcacbabc"), &w("cbabcabca"), 3).unwrap());
        assert!(sim_n(&w("abab"), &w("abab"), 2).unwrap());
        assert!(!sim_n(&w("abaa"), &w("baaa"), 2).unwrap());
        assert!(!sim_n(&w("aabb"), &w("aabb"), 2).unwrap());
        assert!(sim_n(&w(""), &w(""), 3).unwrap());
        assert!(sim_n(&w("ab"), &w("abc"), 1).is_err());
        assert!(sim_n(&w("abc"), &w("abc"), 2).is_err());
        assert!(sim_n(&w("abc"), &w("abc"), 0).is_err());
    }

    #[test]
    fn simeq_examples() {
        assert!(simeq_n(&w("abaa"), &w("baaa"), 2).unwrap());
        assert!(simeq_n(&w("abcacbabc"), &w("cbabcabca"), 3).unwrap());
        assert!(!simeq_n(&w("ab"), &w("aa"), 2).unwrap());
        assert!(simeq_n(&w("ab"), &w("a"), 1).is_err());
    }

    #[test]
    fn commute_examples() {
        let wit = commute_check(&w("cbabc"), &w("abca"), 3).unwrap().unwrap();
        assert_eq!((wit.r, wit.s), (3, 2));
        assert_eq!(strs(&wit.alphas), vec!["cb", "bc", "bc"]);
        assert_eq!(strs(&wit.betas), vec!["a", "a", "a"]);

        let wit = commute_check(&w("ab"), &w("ab"), 2).unwrap().unwrap();
        assert!(wit.validate(&w("ab"), &w("ab")).is_ok());
        assert_eq!((wit.r, wit.s), (2, 1));

        assert!(commute_check(&w("baa"), &w("a"), 2).unwrap().is_none());
    }

    #[test]
    fn commute_boundary_cases() {
        // x fills the tail of the only block
        let wit = commute_check(&w("ab"), &w("a"), 3).unwrap().unwrap();
        assert_eq!((wit.r, wit.s), (1, 1));
        assert_eq!(strs(&wit.alphas), vec!["ab"]);
        assert_eq!(strs(&wit.betas), vec!["a"]);
        // block-aligned boundary
        let wit = commute_check(&w("abba"), &w("ba"), 2).unwrap().unwrap();
        assert_eq!((wit.r, wit.s), (3, 2));
        assert!(wit.betas.iter().all(Word::is_empty));
    }

    #[test]
    fn commute_errors() {
        assert!(commute_check(&w(""), &w("ab"), 2).is_err());
        assert!(commute_check(&w("ab"), &w(""), 2).is_err());
        assert!(commute_check(&w("ab"), &w("a"), 2).is_err());
        assert!(commute_check(&w("ab"), &w("a"), 0).is_err());
    }

    #[test]
    fn validate_rejects_tampering() {
        let (u, x) = (w("cbabc"), w("abca"));
        let mut wit = commute_check(&u, &x, 3).unwrap().unwrap();
        assert!(wit.validate(&u, &w("abcb")).is_err());
        wit.betas[1] = w("b");
        assert!(wit.validate(&u, &x).is_err());
        wit.s = 4;
        assert!(wit.validate(&u, &x).is_err());
    }

    #[test]
    fn shared_root_examples() {
        assert_eq!(
            shared_root_check(&w("abab"), &w("baba"), 2)
                .unwrap()
                .map(|r| r.to_string()),
            Some("ba".into())
        );
        assert!(matches!(
            shared_root_check(&w("cbabc"), &w("abca"), 3),
            Err(Error::Domain(_))
        ));
        assert_eq!(
            shared_root_check(&w("aa"), &w("aa"), 1)
                .unwrap()
                .map(|r| r.to_string()),
            Some("a".into())
        );
        // not commuting under ~_2
        assert!(shared_root_check(&w("aabb"), &w("ab"), 2).is_err());
        // u's 2-prefix is not an A-primitive root: "aa" is unary
        assert_eq!(shared_root_check(&w("aaaa"), &w("aa"), 2).unwrap(), None);
        // n = |u| is not a proper root
        assert_eq!(shared_root_check(&w("ab"), &w("ba"), 2).unwrap(), None);
    }
}
