//! Level-truncated tensor series, the container for path signatures.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::word::{Alphabet, Word};

/// Truncated series `sum_w c_w w` over all words of length `<= level`.
///
/// Coefficients are stored densely per level; level `k` holds `size^k`
/// entries indexed by [`Word::dense_index`].
#[derive(Debug, Clone, PartialEq)]
pub struct TensorSeries {
    alphabet: Alphabet,
    levels: Vec<Vec<f64>>,
}

impl TensorSeries {
    /// The unit series: 1 on the empty word, 0 elsewhere.
    pub fn identity(alphabet: Alphabet, level: usize) -> Self {
        let size = alphabet.size();
        let levels = (0..=level)
            .map(|k| {
                let mut v = vec![0.0; size.pow(k as u32)];
                if k == 0 {
                    v[0] = 1.0;
                }
                v
            })
            .collect();
        Self { alphabet, levels }
    }

    /// Builds a series from explicit `(word, coefficient)` pairs; unlisted
    /// words are 0, including the empty word.
    pub fn from_terms<I, W>(alphabet: Alphabet, level: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (W, f64)>,
        W: Into<Word>,
    {
        let mut s = Self::identity(alphabet, level);
        s.levels[0][0] = 0.0;
        for (w, c) in terms {
            let w = w.into();
            w.validate(&alphabet)?;
            if w.len() > level {
                return Err(Error::DegreeExceedsTruncation {
                    degree: w.len(),
                    level,
                });
            }
            s.levels[w.len()][w.dense_index(&alphabet)] = c;
        }
        Ok(s)
    }

    /// Truncated exponential `exp(sum_i delta_i x_i)`: the signature of one
    /// straight segment with increment `delta`.
    pub fn segment(alphabet: Alphabet, delta: &[f64], level: usize) -> Result<Self> {
        if delta.len() != alphabet.size() {
            return Err(Error::DimensionMismatch {
                expected: alphabet.size(),
                got: delta.len(),
            });
        }
        let mut levels: Vec<Vec<f64>> = Vec::with_capacity(level + 1);
        levels.push(vec![1.0]);
        for k in 1..=level {
            let prev = &levels[k - 1];
            let inv_k = 1.0 / k as f64;
            let mut cur = Vec::with_capacity(prev.len() * delta.len());
            for &p in prev {
                for &d in delta {
                    cur.push(p * d * inv_k);
                }
            }
            levels.push(cur);
        }
        Ok(Self { alphabet, levels })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn level(&self) -> usize {
        self.levels.len() - 1
    }

    /// Dense coefficients of level `k`.
    pub fn level_coefficients(&self, k: usize) -> &[f64] {
        &self.levels[k]
    }

    /// Coefficient of `word`; 0 for words longer than the truncation.
    pub fn coefficient(&self, word: &Word) -> f64 {
        if word.len() > self.level() {
            return 0.0;
        }
        self.levels[word.len()][word.dense_index(&self.alphabet)]
    }

    /// Every stored coefficient with its word, in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Word, f64)> + '_ {
        self.levels.iter().enumerate().flat_map(move |(k, lv)| {
            lv.iter()
                .enumerate()
                .map(move |(i, &c)| (Word::from_dense_index(i, k, &self.alphabet), c))
        })
    }

    /// Truncated concatenation product (Chen's relation):
    /// `(self * other)(w) = sum_{w = uv} self(u) other(v)`.
    pub fn chen_concat(&self, other: &Self) -> Result<Self> {
        self.alphabet.check_same(&other.alphabet)?;
        if self.level() != other.level() {
            return Err(Error::LevelMismatch {
                left: self.level(),
                right: other.level(),
            });
        }
        let size = self.alphabet.size();
        let levels = (0..=self.level())
            .map(|n| {
                let mut out = vec![0.0; size.pow(n as u32)];
                for k in 0..=n {
                    let left = &self.levels[k];
                    let right = &other.levels[n - k];
                    let stride = right.len();
                    for (i, &a) in left.iter().enumerate() {
                        if a == 0.0 {
                            continue;
                        }
                        let block = &mut out[i * stride..(i + 1) * stride];
                        for (o, &b) in block.iter_mut().zip(right) {
                            *o += a * b;
                        }
                    }
                }
                out
            })
            .collect();
        Ok(Self {
            alphabet: self.alphabet,
            levels,
        })
    }

    /// Right-multiplies in place by the segment exponential `exp(delta)`.
    pub(crate) fn extend_by_segment(&mut self, delta: &[f64]) {
        let seg = Self::segment(self.alphabet, delta, self.level())
            .expect("segment dimension matches series alphabet");
        *self = self
            .chen_concat(&seg)
            .expect("segment alphabet and level match");
    }

    /// Dual pairing `<self, p> = sum_w self(w) p(w)`.
    pub fn pair(&self, p: &Polynomial) -> Result<f64> {
        self.alphabet.check_same(&p.alphabet())?;
        if p.degree() > self.level() {
            return Err(Error::DegreeExceedsTruncation {
                degree: p.degree(),
                level: self.level(),
            });
        }
        Ok(p.terms()
            .map(|(w, c)| c.to_f64().unwrap_or(f64::NAN) * self.coefficient(w))
            .sum())
    }

    /// Largest absolute coefficient difference across all words.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.levels
            .iter()
            .flatten()
            .zip(other.levels.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}
