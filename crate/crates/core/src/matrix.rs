//! Small dense square matrices with exact rational or floating-point entries.

use std::ops::{Add, Mul};

use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::random::standard_normal;
use crate::Rational;

/// A `d x d` matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Clone + Zero + One> SquareMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![T::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = T::one();
        }
        Self { dim, entries }
    }

    pub fn diagonal(diag: Vec<T>) -> Self {
        let dim = diag.len();
        let mut m = Self {
            dim,
            entries: vec![T::zero(); dim * dim],
        };
        for (i, v) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = v;
        }
        m
    }

    /// Matrix of the permutation `i -> perm[i]` (0-based), i.e. `e_i -> e_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let dim = perm.len();
        let mut m = Self {
            dim,
            entries: vec![T::zero(); dim * dim],
        };
        for (i, &p) in perm.iter().enumerate() {
            m.entries[p * dim + i] = T::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in 0..d {
                entries.push(self.get(c, r).clone());
            }
        }
        Self { dim: d, entries }
    }

    /// `diag(1, self)`: the extension that fixes the time letter.
    pub fn with_fixed_time(&self) -> Self {
        let d = self.dim + 1;
        let mut m = Self::identity(d);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(r + 1, c + 1, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> SquareMatrix<U> {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.dim.max(1))
    }
}

impl<T> SquareMatrix<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in 0..d {
                let mut acc = T::zero();
                for k in 0..d {
                    acc = &acc + &(self.get(r, k) * other.get(k, c));
                }
                entries.push(acc);
            }
        }
        Ok(Self { dim: d, entries })
    }

    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(self
            .rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }
}

impl SquareMatrix<Rational> {
    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn det(&self) -> Rational {
        let d = self.dim;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| !a[r * d + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for c in 0..d {
                    a.swap(pivot * d + c, col * d + c);
                }
                det = -det;
            }
            let p = a[col * d + col].clone();
            det *= &p;
            for r in col + 1..d {
                if a[r * d + col].is_zero() {
                    continue;
                }
                let f = &a[r * d + col] / &p;
                for c in col..d {
                    let v = &f * &a[col * d + c];
                    a[r * d + c] = &a[r * d + c] - &v;
                }
            }
        }
        det
    }

    pub fn to_f64(&self) -> SquareMatrix<f64> {
        self.map(|x| x.to_f64().unwrap_or(f64::NAN))
    }

    /// Random matrix with integer entries in `[-range, range]` and non-zero
    /// determinant.
    pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, dim: usize, range: i64) -> Self {
        loop {
            let entries = (0..dim * dim)
                .map(|_| Rational::from_integer(rng.gen_range(-range..=range).into()))
                .collect();
            let m = Self { dim, entries };
            if !m.det().is_zero() {
                return m;
            }
        }
    }
}

impl SquareMatrix<f64> {
    /// Determinant by partial-pivot elimination.
    pub fn det(&self) -> f64 {
        let d = self.dim;
        let mut a = self.entries.clone();
        let mut det = 1.0;
        for col in 0..d {
            let pivot = (col..d)
                .max_by(|&x, &y| a[x * d + col].abs().total_cmp(&a[y * d + col].abs()))
                .unwrap_or(col);
            if a[pivot * d + col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                for c in 0..d {
                    a.swap(pivot * d + c, col * d + c);
                }
                det = -det;
            }
            let p = a[col * d + col];
            det *= p;
            for r in col + 1..d {
                let f = a[r * d + col] / p;
                if f == 0.0 {
                    continue;
                }
                for c in col..d {
                    a[r * d + c] -= f * a[col * d + c];
                }
            }
        }
        det
    }

    /// Random element of SO(d): Gram-Schmidt on a Gaussian matrix, with the
    /// first column negated if the determinant came out negative.
    pub fn random_rotation<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Self {
        let mut cols: Vec<Vec<f64>> = Vec::with_capacity(dim);
        while cols.len() < dim {
            let mut v: Vec<f64> = (0..dim).map(|_| standard_normal(rng)).collect();
            for q in &cols {
                let dot: f64 = v.iter().zip(q).map(|(a, b)| a * b).sum();
                for (x, y) in v.iter_mut().zip(q) {
                    *x -= dot * y;
                }
            }
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-8 {
                continue;
            }
            v.iter_mut().for_each(|x| *x /= norm);
            cols.push(v);
        }
        let mut m = Self::identity(dim);
        for (c, col) in cols.iter().enumerate() {
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        if m.det() < 0.0 {
            for r in 0..dim {
                let x = *m.get(r, 0);
                m.set(r, 0, -x);
            }
        }
        m
    }

    pub fn rotation_2d(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            dim: 2,
            entries: vec![c, -s, s, c],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn rational_det_matches_cofactor_expansion() {
        let m = SquareMatrix::from_rows(vec![
            vec![q(2), q(-1), q(0)],
            vec![q(1), q(3), q(4)],
            vec![q(0), q(5), q(-2)],
        ])
        .unwrap();
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) + 0 = -52 - 2
        assert_eq!(m.det(), q(-54));
        assert_eq!(m.to_f64().det(), -54.0);
    }

    #[test]
    fn rotations_are_orthonormal_with_unit_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in 2..=5 {
            let r = SquareMatrix::random_rotation(&mut rng, d);
            let rtr = r.transpose().matmul(&r).unwrap();
            for i in 0..d {
                for j in 0..d {
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((rtr.get(i, j) - want).abs() < 1e-12);
                }
            }
            assert!((r.det() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn fixed_time_extension() {
        let a = SquareMatrix::diagonal(vec![q(2), q(3)]);
        let a0 = a.with_fixed_time();
        assert_eq!(a0, SquareMatrix::diagonal(vec![q(1), q(2), q(3)]));
    }

    #[test]
    fn permutation_matrix_moves_basis_vectors() {
        let p: SquareMatrix<f64> = SquareMatrix::permutation(&[1, 2, 0]);
        assert_eq!(p.apply(&[1.0, 0.0, 0.0]).unwrap(), vec![0.0, 1.0, 0.0]);
        assert_eq!(p.apply(&[0.0, 0.0, 1.0]).unwrap(), vec![1.0, 0.0, 0.0]);
    }
}
