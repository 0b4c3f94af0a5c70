//! Words over a finite alphabet of letters `1..=d`, optionally extended by the
//! time letter `0`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The set of admissible letters: `1..=dim`, or `0..=dim` when the time
/// coordinate is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    dim: usize,
    time: bool,
}

impl Alphabet {
    /// Spatial alphabet `{1..=dim}`.
    pub fn new(dim: usize) -> Self {
        Self { dim, time: false }
    }

    /// Time-augmented alphabet `{0..=dim}`.
    pub fn with_time(dim: usize) -> Self {
        Self { dim, time: true }
    }

    /// Number of spatial letters `d`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn has_time(&self) -> bool {
        self.time
    }

    /// Total number of letters (`d` or `d + 1`).
    pub fn size(&self) -> usize {
        self.dim + usize::from(self.time)
    }

    /// Smallest letter: 0 with time, 1 otherwise.
    pub fn first_letter(&self) -> u8 {
        if self.time {
            0
        } else {
            1
        }
    }

    pub fn contains(&self, letter: u8) -> bool {
        let l = letter as usize;
        l <= self.dim && (self.time || l >= 1)
    }

    /// Position of a letter within `0..size()`.
    pub fn index_of(&self, letter: u8) -> usize {
        (letter - self.first_letter()) as usize
    }

    pub fn letter_at(&self, index: usize) -> u8 {
        index as u8 + self.first_letter()
    }

    pub fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.size()).map(move |i| self.letter_at(i))
    }

    /// The same spatial letters with the time letter added.
    pub fn augmented(&self) -> Self {
        Self::with_time(self.dim)
    }

    pub fn check_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: *self,
                right: *other,
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.time {
            write!(f, "{{0..{}}}", self.dim)
        } else {
            write!(f, "{{1..{}}}", self.dim)
        }
    }
}

/// A finite sequence of letters indexing one iterated integral.
///
/// Ordering is length first, then lexicographic, which is the canonical
/// order used for iteration and serialization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(l: u8) -> Self {
        Self(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Fails on the first letter outside `alphabet`.
    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        match self.0.iter().find(|&&l| !alphabet.contains(l)) {
            Some(&letter) => Err(Error::LetterOutOfRange {
                letter,
                alphabet: *alphabet,
            }),
            None => Ok(()),
        }
    }

    /// Index of the word among all words of its length, in base `size`
    /// with the first letter most significant.
    pub fn dense_index(&self, alphabet: &Alphabet) -> usize {
        let base = alphabet.size();
        self.0
            .iter()
            .fold(0, |acc, &l| acc * base + alphabet.index_of(l))
    }

    pub fn from_dense_index(mut index: usize, len: usize, alphabet: &Alphabet) -> Word {
        let base = alphabet.size();
        let mut v = vec![0u8; len];
        for slot in v.iter_mut().rev() {
            *slot = alphabet.letter_at(index % base);
            index /= base;
        }
        Word(v)
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Self {
        Word(v.to_vec())
    }
}

impl<const N: usize> From<[u8; N]> for Word {
    fn from(v: [u8; N]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

/// All words of length `len` over `alphabet`, in canonical order.
pub fn words_of_length(alphabet: &Alphabet, len: usize) -> impl Iterator<Item = Word> + '_ {
    let count = alphabet.size().pow(len as u32);
    (0..count).map(move |i| Word::from_dense_index(i, len, alphabet))
}
