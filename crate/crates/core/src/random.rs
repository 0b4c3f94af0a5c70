//! Seeded random generators for paths, polynomials and transforms used by
//! the verification routines.

use rand::Rng;

use crate::path::PiecewisePath;
use crate::poly::Polynomial;
use crate::word::{Alphabet, Word};
use crate::Rational;

/// Box-Muller standard normal sample.
pub fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Gaussian random walk with `points` vertices in `dim` dimensions.
pub fn random_path<R: Rng + ?Sized>(rng: &mut R, dim: usize, points: usize) -> PiecewisePath {
    let mut cur: Vec<f64> = (0..dim).map(|_| standard_normal(rng)).collect();
    let mut pts = Vec::with_capacity(points);
    for _ in 0..points {
        pts.push(cur.clone());
        for x in cur.iter_mut() {
            *x += standard_normal(rng);
        }
    }
    PiecewisePath::new(pts).expect("generated points share a dimension")
}

/// Random closed path: a random walk whose last point equals the first.
pub fn random_closed_path<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    points: usize,
) -> PiecewisePath {
    let open = random_path(rng, dim, points.saturating_sub(1).max(1));
    let mut pts = open.points().to_vec();
    pts.push(pts[0].clone());
    PiecewisePath::new(pts).expect("generated points share a dimension")
}

/// Sparse polynomial with up to `terms` random words of length at most
/// `max_degree` and small rational coefficients.
pub fn random_polynomial<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: Alphabet,
    max_degree: usize,
    terms: usize,
) -> Polynomial {
    let letters: Vec<u8> = alphabet.letters().collect();
    let entries = (0..terms).map(|_| {
        let len = rng.gen_range(0..=max_degree);
        let w: Vec<u8> = (0..len)
            .map(|_| letters[rng.gen_range(0..letters.len())])
            .collect();
        let num: i64 = rng.gen_range(-5..=5);
        let den: i64 = rng.gen_range(1..=4);
        (Word::new(w), Rational::new(num.into(), den.into()))
    });
    Polynomial::from_terms(alphabet, entries).expect("letters drawn from the alphabet")
}

/// Uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}
