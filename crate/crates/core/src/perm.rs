//! Permutations of `{1..m}`, their inversion words, and permutation matrices.
//!
//! The inversion word of a permutation has `a_k` = the number of elements to
//! the left of `k` in the one-line word that are greater than `k`, for
//! `k = 1..m-1`; each `a_k` ranges over `0..=m-k` and the encoding is a
//! bijection onto such words.

use std::fmt;

use thiserror::Error;

use crate::asm::Asm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("word of length {m} is not a bijection on 1..={m}: value {value} at position {pos}")]
    NotBijective { m: usize, value: usize, pos: usize },

    #[error("inversion word entry a_{k} = {value} out of range 0..={max}")]
    EntryOutOfRange { k: usize, value: usize, max: usize },

    #[error("permutation must have at least one element")]
    Empty,
}

/// A permutation of `{1..m}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn from_word(word: Vec<usize>) -> Result<Self, PermError> {
        let m = word.len();
        if m == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; m + 1];
        for (pos, &v) in word.iter().enumerate() {
            if v < 1 || v > m || seen[v] {
                return Err(PermError::NotBijective { m, value: v, pos: pos + 1 });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(m: usize) -> Self {
        Permutation { word: (1..=m).collect() }
    }

    pub fn m(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Position of `value` in the word (i.e. the inverse permutation),
    /// 1-based.
    pub fn position_of(&self, value: usize) -> usize {
        self.word.iter().position(|&v| v == value).expect("value in range") + 1
    }

    /// Number of inversions: pairs `i < j` with `word[i] > word[j]`.
    pub fn inversions(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The inversion word `(a_1, ..., a_{m-1})`.
    pub fn inversion_word(&self) -> InversionWord {
        let m = self.m();
        let entries = (1..m)
            .map(|k| {
                let pos = self.word.iter().position(|&v| v == k).expect("bijective");
                self.word[..pos].iter().filter(|&&v| v > k).count()
            })
            .collect();
        InversionWord { entries }
    }

    /// The 0/1 matrix with `M[i][j] = 1` iff `word[j] = i` (1-based); always
    /// a valid alternating sign matrix without `-1` entries.
    pub fn matrix(&self) -> Asm {
        let m = self.m();
        let mut entries = vec![vec![0i64; m]; m];
        for (j0, &v) in self.word.iter().enumerate() {
            entries[v - 1][j0] = 1;
        }
        crate::asm::validate_asm(&entries).expect("permutation matrix is a valid ASM")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.word)
    }
}

/// The inversion word of a permutation of `{1..m}`; entry `a_k` satisfies
/// `0 <= a_k <= m - k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InversionWord {
    entries: Vec<usize>,
}

impl InversionWord {
    /// Validates the per-entry bounds; the word length is `m - 1`.
    pub fn new(entries: Vec<usize>) -> Result<Self, PermError> {
        let m = entries.len() + 1;
        for (k0, &a) in entries.iter().enumerate() {
            let k = k0 + 1;
            if a > m - k {
                return Err(PermError::EntryOutOfRange { k, value: a, max: m - k });
            }
        }
        Ok(InversionWord { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn m(&self) -> usize {
        self.entries.len() + 1
    }

    /// Total number of inversions, `sum a_k`.
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    /// The unique permutation with this inversion word: insert the values
    /// `m, m-1, ..., 1` in turn, placing `k` after `a_k` of the (larger)
    /// values already present.
    pub fn to_permutation(&self) -> Permutation {
        let m = self.m();
        let mut word: Vec<usize> = Vec::with_capacity(m);
        word.push(m);
        for k in (1..m).rev() {
            word.insert(self.entries[k - 1], k);
        }
        Permutation { word }
    }
}

impl fmt::Debug for InversionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InversionWord{:?}", self.entries)
    }
}

/// Advances `word` to the next permutation in lexicographic order, returning
/// `false` once the word is the last one. Test helper shared across modules.
#[cfg(test)]
pub(crate) fn next_permutation(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}
