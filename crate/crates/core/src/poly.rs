//! Exact polynomials in non-commuting variables, the dual space in which
//! invariants live.
//!
//! A [`Polynomial`] is a finite table `word -> rational` over a fixed
//! [`Alphabet`]. Zero coefficients are never stored, and iteration follows
//! the canonical (length, then lexicographic) word order, which also fixes
//! the serialized text form:
//!
//! ```text
//! +1*[1,2] -1*[2,1]
//! +3/2*[] -1/3*[1,2,2,1]
//! ```

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::word::{Alphabet, Word};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Rational>,
}

impl Polynomial {
    pub fn zero(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1` (the empty word).
    pub fn one(alphabet: Alphabet) -> Self {
        Self::monomial(alphabet, Word::empty(), Rational::one())
    }

    /// `coef * word`. Panics if the word uses letters outside the alphabet.
    pub fn monomial(alphabet: Alphabet, word: impl Into<Word>, coef: Rational) -> Self {
        let word = word.into();
        word.validate(&alphabet)
            .expect("monomial letter outside alphabet");
        let mut p = Self::zero(alphabet);
        p.add_term(word, coef);
        p
    }

    /// Builds a polynomial from `(word, coefficient)` pairs, collecting like
    /// terms and validating every letter.
    pub fn from_terms<I, W>(alphabet: Alphabet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (W, Rational)>,
        W: Into<Word>,
    {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            let w = w.into();
            w.validate(&alphabet)?;
            p.add_term(w, c);
        }
        Ok(p)
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms<I, W>(alphabet: Alphabet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (W, i64)>,
        W: Into<Word>,
    {
        Self::from_terms(
            alphabet,
            terms
                .into_iter()
                .map(|(w, c)| (w, Rational::from_integer(c.into()))),
        )
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coefficient(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    /// Length of the longest word; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.terms.keys().all(|w| w.len() == n)
    }

    pub(crate) fn add_term(&mut self, word: Word, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coef);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.alphabet);
        }
        Self {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Same terms, reinterpreted over a larger alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self> {
        Self::from_terms(
            alphabet,
            self.terms.iter().map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    /// Concatenation product, extended bilinearly.
    pub fn concat_product(&self, other: &Self) -> Result<Self> {
        self.alphabet.check_same(&other.alphabet)?;
        let mut out = Self::zero(self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// Shuffle product: all order-preserving interleavings of each pair of
    /// words, extended bilinearly.
    pub fn shuffle_product(&self, other: &Self) -> Result<Self> {
        self.alphabet.check_same(&other.alphabet)?;
        let mut out = Self::zero(self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let c = a * b;
                for w in shuffle_words(u.letters(), v.letters()) {
                    out.add_term(w, c.clone());
                }
            }
        }
        Ok(out)
    }

    /// Keeps exactly the words of length `n`.
    pub fn project_level(&self, n: usize) -> Self {
        Self {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Letter-wise linear action `x_i -> sum_j A[j][i] x_j`.
    ///
    /// The matrix acts on the spatial letters; a time letter `0`, if present
    /// in the alphabet, is left fixed.
    pub fn apply_matrix(&self, a: &SquareMatrix<Rational>) -> Result<Self> {
        if a.dim() != self.alphabet.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.alphabet.dim(),
                got: a.dim(),
            });
        }
        // images[i] lists (letter j, A[j][i]) for every spatial letter i
        let mut images: Vec<Vec<(u8, Rational)>> = vec![Vec::new(); self.alphabet.dim() + 1];
        images[0] = vec![(0, Rational::one())];
        for (i, image) in images.iter_mut().enumerate().skip(1) {
            for j in 1..=self.alphabet.dim() {
                let v = a.get(j - 1, i - 1);
                if !v.is_zero() {
                    image.push((j as u8, v.clone()));
                }
            }
        }

        let mut out = Self::zero(self.alphabet);
        for (w, c) in &self.terms {
            let mut partial: Vec<(Vec<u8>, Rational)> =
                vec![(Vec::with_capacity(w.len()), c.clone())];
            for &letter in w.letters() {
                let img = &images[letter as usize];
                let mut next = Vec::with_capacity(partial.len() * img.len());
                for (prefix, pc) in &partial {
                    for (j, v) in img {
                        let mut p = prefix.clone();
                        p.push(*j);
                        next.push((p, pc * v));
                    }
                }
                partial = next;
            }
            for (letters, v) in partial {
                out.add_term(Word::new(letters), v);
            }
        }
        Ok(out)
    }

    /// Inserts `letter` after position `r` in every word (position 0 means
    /// in front).
    pub fn insert_after(&self, letter: u8, r: usize) -> Result<Self> {
        if !self.alphabet.contains(letter) {
            return Err(Error::LetterOutOfRange {
                letter,
                alphabet: self.alphabet,
            });
        }
        let mut out = Self::zero(self.alphabet);
        for (w, c) in &self.terms {
            if w.len() < r {
                return Err(Error::WordTooShort {
                    len: w.len(),
                    position: r,
                });
            }
            let mut v = w.letters().to_vec();
            v.insert(r, letter);
            out.add_term(Word::new(v), c.clone());
        }
        Ok(out)
    }

    /// Inserts `z[0]` time letters before the first letter, `z[k]` before the
    /// `(k+1)`-th letter and `z[n]` after the last. Requires every word to
    /// have length `z.len() - 1`. The result lives over the time-augmented
    /// alphabet.
    pub fn insert_z(&self, z: &[usize]) -> Result<Self> {
        if z.is_empty() {
            return Err(Error::InvalidArgument(
                "insertion composition must have at least one part".into(),
            ));
        }
        let n = z.len() - 1;
        let alphabet = self.alphabet.augmented();
        let mut out = Self::zero(alphabet);
        for (w, c) in &self.terms {
            if w.len() != n {
                return Err(Error::NotHomogeneous { expected: n });
            }
            let mut v = Vec::with_capacity(n + z.iter().sum::<usize>());
            for (k, &count) in z.iter().enumerate() {
                v.extend(std::iter::repeat_n(0u8, count));
                if k < n {
                    v.push(w.letters()[k]);
                }
            }
            out.add_term(Word::new(v), c.clone());
        }
        Ok(out)
    }

    /// Deletes every time letter `0`, collecting like terms. The result is
    /// over the spatial alphabet.
    pub fn remove_zero(&self) -> Self {
        let mut out = Self::zero(Alphabet::new(self.alphabet.dim()));
        for (w, c) in &self.terms {
            let v: Vec<u8> = w.letters().iter().copied().filter(|&l| l != 0).collect();
            out.add_term(Word::new(v), c.clone());
        }
        out
    }

    /// Substitutes letter `l` by `map[l]` in every word, over `alphabet`.
    pub fn relabel(&self, map: &[u8], alphabet: Alphabet) -> Result<Self> {
        Self::from_terms(
            alphabet,
            self.terms.iter().map(|(w, c)| {
                let v: Vec<u8> = w.letters().iter().map(|&l| map[l as usize]).collect();
                (Word::new(v), c.clone())
            }),
        )
    }

    /// Parses the text form, e.g. `+3/2*[1,2,1] -1*[]`. A lone `0` is the
    /// zero polynomial.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Self> {
        let mut p = Self::zero(alphabet);
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(p);
        }
        for token in s.split_whitespace() {
            let (coef, word) = token
                .split_once('*')
                .ok_or_else(|| Error::Parse(format!("term `{token}` lacks `*`")))?;
            let coef = parse_rational(coef)?;
            let inner = word
                .strip_prefix('[')
                .and_then(|w| w.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("word `{word}` is not bracketed")))?;
            let letters = if inner.is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|l| {
                        l.trim()
                            .parse::<u8>()
                            .map_err(|e| Error::Parse(format!("letter `{l}`: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            let w = Word::new(letters);
            w.validate(&alphabet)?;
            p.add_term(w, coef);
        }
        Ok(p)
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("coefficient `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// All interleavings of `u` and `v`, with multiplicity.
pub fn shuffle_words(u: &[u8], v: &[u8]) -> Vec<Word> {
    let n = u.len() + v.len();
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    shuffle_rec(u, v, &mut buf, &mut out);
    out
}

fn shuffle_rec(u: &[u8], v: &[u8], buf: &mut Vec<u8>, out: &mut Vec<Word>) {
    if u.is_empty() || v.is_empty() {
        let mut w = buf.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        out.push(Word::new(w));
        return;
    }
    buf.push(u[0]);
    shuffle_rec(&u[1..], v, buf, out);
    buf.pop();
    buf.push(v[0]);
    shuffle_rec(u, &v[1..], buf, out);
    buf.pop();
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let a = c.abs();
            if a.is_integer() {
                write!(f, "{sign}{}*{w}", a.numer())?;
            } else {
                write!(f, "{sign}{}/{}*{w}", a.numer(), a.denom())?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on alphabet mismatch.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.alphabet
            .check_same(&rhs.alphabet)
            .expect("adding polynomials over different alphabets");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Rational> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Rational) -> Polynomial {
        self.scale(rhs)
    }
}
