//! Words over a k-letter ordered alphabet and their Parikh vectors.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// A finite word; letters are indices into an alphabet of `alphabet_size` symbols.
///
/// Textually the alphabet is `a..z`, so words parsed from strings have at most
/// 26 letters; the library itself accepts any alphabet size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
    alphabet_size: usize,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(domain("alphabet size must be at least 1"));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= alphabet_size) {
            return Err(domain(format!(
                "letter index {bad} outside alphabet of size {alphabet_size}"
            )));
        }
        Ok(Word {
            letters,
            alphabet_size,
        })
    }

    /// Builds a word whose alphabet is exactly the letters up to the largest one used.
    pub fn from_letters(letters: Vec<u32>) -> Self {
        let alphabet_size = letters.iter().max().map_or(1, |&m| m as usize + 1);
        Word {
            letters,
            alphabet_size,
        }
    }

    /// Parses `a..z` text with an explicit alphabet size.
    pub fn parse_with_alphabet(s: &str, alphabet_size: usize) -> Result<Self> {
        let w: Word = s.parse()?;
        w.with_alphabet(alphabet_size)
    }

    /// Re-declares the alphabet size, which must cover every letter present.
    pub fn with_alphabet(self, alphabet_size: usize) -> Result<Self> {
        Word::new(self.letters, alphabet_size)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The first `len` letters, over the same alphabet.
    pub fn prefix(&self, len: usize) -> Word {
        Word {
            letters: self.letters[..len].to_vec(),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word {
            letters: self.letters[start..end].to_vec(),
            alphabet_size: self.alphabet_size,
        }
    }

    /// `self · other`, over the larger of the two alphabets.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            alphabet_size: self.alphabet_size.max(other.alphabet_size),
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .bytes()
            .map(|b| match b {
                b'a'..=b'z' => Ok((b - b'a') as u32),
                _ => Err(domain(format!(
                    "invalid letter {:?}; words use lowercase a..z",
                    b as char
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_letters(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            if l < 26 {
                write!(f, "{}", (b'a' + l as u8) as char)?;
            } else {
                write!(f, "<{l}>")?;
            }
        }
        Ok(())
    }
}

/// Per-letter occurrence counts Ψ(w).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParikhVector {
    counts: Vec<usize>,
}

impl ParikhVector {
    pub fn zero(alphabet_size: usize) -> Self {
        ParikhVector {
            counts: vec![0; alphabet_size],
        }
    }

    pub fn from_counts(counts: Vec<usize>) -> Self {
        ParikhVector { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Total number of letters described.
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl Add for &ParikhVector {
    type Output = ParikhVector;

    fn add(self, rhs: &ParikhVector) -> ParikhVector {
        assert_eq!(self.counts.len(), rhs.counts.len(), "alphabet sizes differ");
        ParikhVector {
            counts: self
                .counts
                .iter()
                .zip(&rhs.counts)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn parikh(w: &Word) -> ParikhVector {
    let mut counts = vec![0; w.alphabet_size];
    count_into(&w.letters, &mut counts);
    ParikhVector { counts }
}

/// Parikh vectors of the consecutive length-`d` blocks of `w`.
pub fn block_parikhs(w: &Word, d: usize) -> Result<Vec<ParikhVector>> {
    check_block_length(w.len(), d)?;
    Ok(w.letters
        .chunks(d)
        .map(|block| {
            let mut counts = vec![0; w.alphabet_size];
            count_into(block, &mut counts);
            ParikhVector { counts }
        })
        .collect())
}

/// True iff every length-`d` block of `w` has the same Parikh vector.
///
/// `d == |w|` is a single block and answers true; callers looking for proper
/// roots pass `d < |w|`.
pub fn has_a_root_of_length(w: &Word, d: usize) -> Result<bool> {
    check_block_length(w.len(), d)?;
    let mut reference = vec![0; w.alphabet_size];
    let mut scratch = vec![0; w.alphabet_size];
    Ok(blocks_share_parikh(
        &w.letters,
        d,
        &mut reference,
        &mut scratch,
    ))
}

pub(crate) fn check_block_length(len: usize, d: usize) -> Result<()> {
    if d == 0 || len == 0 || !len.is_multiple_of(d) {
        return Err(domain(format!(
            "block length {d} does not divide word length {len}"
        )));
    }
    Ok(())
}

pub(crate) fn count_into(letters: &[u32], counts: &mut [usize]) {
    counts.iter_mut().for_each(|c| *c = 0);
    for &l in letters {
        counts[l as usize] += 1;
    }
}

/// Block-by-block comparison against the first block, stopping at the first
/// mismatch. `reference` and `scratch` are alphabet-sized buffers.
pub(crate) fn blocks_share_parikh(
    letters: &[u32],
    d: usize,
    reference: &mut [usize],
    scratch: &mut [usize],
) -> bool {
    let mut blocks = letters.chunks_exact(d);
    match blocks.next() {
        Some(first) => count_into(first, reference),
        None => return true,
    }
    for block in blocks {
        count_into(block, scratch);
        if scratch != reference {
            return false;
        }
    }
    true
}
