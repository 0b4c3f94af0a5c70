//! GL invariants of weight `w`: one polynomial per standard `d x w`
//! tableau, whose coefficient on a word is the product over the tableau's
//! columns of the sign of the letters read at that column's positions.

use num_traits::{One, Pow};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::verify::{describe_path, pair_path, trial_path, VerifyReport};
use super::{Generator, Group, InvariantDescriptor};
use crate::matrix::SquareMatrix;
use crate::poly::Polynomial;
use crate::tableau::{enumerate_standard, RectTableau};
use crate::word::{Alphabet, Word};
use crate::Rational;

/// Sign of `letters` as a permutation of `1..=d` (where `d = letters.len()`),
/// or 0 if it is not a permutation.
pub fn det_indicator(letters: &[u8]) -> i32 {
    let d = letters.len();
    let mut seen = vec![false; d + 1];
    for &l in letters {
        let l = l as usize;
        if l == 0 || l > d || seen[l] {
            return 0;
        }
        seen[l] = true;
    }
    // parity via cycle decomposition
    let mut visited = vec![false; d];
    let mut sign = 1;
    for start in 0..d {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            i = letters[i] as usize - 1;
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// All permutations of `1..=d` with their signs, in lexicographic order.
pub(crate) fn signed_permutations(d: usize) -> Vec<(Vec<u8>, i32)> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (1..=d as u8).collect();
    heap_permute(d, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, a: &mut [u8], out: &mut Vec<(Vec<u8>, i32)>) {
    if k <= 1 {
        out.push((a.to_vec(), det_indicator(a)));
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, a, out);
}

/// The invariant attached to one tableau: for every choice of a
/// permutation of `1..=d` per column, scatter its letters to that column's
/// positions and weight the word by the product of the signs.
pub fn gl_polynomial(t: &RectTableau) -> Polynomial {
    let d = t.rows();
    let n = d * t.cols();
    let cols = t.columns();
    let perms = signed_permutations(d);
    let alphabet = Alphabet::new(d);

    let mut terms: Vec<(Word, Rational)> = Vec::with_capacity(perms.len().pow(t.cols() as u32));
    let mut word = vec![0u8; n];
    let mut choice = vec![0usize; cols.len()];
    loop {
        let mut sign = 1;
        for (col, &k) in cols.iter().zip(&choice) {
            let (perm, s) = &perms[k];
            sign *= s;
            for (&pos, &letter) in col.iter().zip(perm) {
                word[pos - 1] = letter;
            }
        }
        terms.push((Word::new(word.clone()), Rational::from_integer(sign.into())));

        // odometer over per-column permutation choices
        let mut j = 0;
        loop {
            if j == choice.len() {
                return Polynomial::from_terms(alphabet, terms).expect("letters lie in 1..=d");
            }
            choice[j] += 1;
            if choice[j] < perms.len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

/// Linear basis of GL invariants of weight `w` in dimension `d`, one element
/// per standard tableau of the `d x w` rectangle, in tableau order.
pub fn gl_basis(d: usize, w: usize) -> Vec<InvariantDescriptor> {
    enumerate_standard(d, w)
        .into_iter()
        .map(|t| InvariantDescriptor {
            group: Group::Gl,
            time_augmented: false,
            dim: d,
            level: d * w,
            weight: Some(w),
            polynomial: gl_polynomial(&t),
            generator: Generator::Tableau {
                rows: t.row_vectors(),
            },
            notes: Vec::new(),
        })
        .collect()
}

/// Checks `<S(AX), phi> = det(A)^w <S(X), phi>` on random integer matrices
/// and random walks, and the exact identity `A^T phi = det(A)^w phi`.
pub fn verify_gl_invariance(
    phi: &Polynomial,
    weight: usize,
    trials: usize,
    seed: u64,
) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = phi.alphabet().dim();
    let mut report = VerifyReport::new();
    for trial in 0..trials {
        let a = SquareMatrix::<Rational>::random_invertible(&mut rng, d, 2);
        let det = a.det();
        let factor = Pow::pow(det.clone(), weight as u32);

        let lhs_exact = phi
            .apply_matrix(&a.transpose())
            .expect("matrix matches alphabet");
        let rhs_exact = phi.scale(&factor);
        report.record_exact(lhs_exact == rhs_exact, || {
            format!("trial {trial}: A^T phi != det(A)^{weight} phi for A = {a:?}")
        });

        let path = trial_path(&mut rng, phi);
        let af = a.to_f64();
        let moved = path.transform(&af).expect("matrix matches path");
        let lhs = pair_path(&moved, phi);
        let rhs =
            num_traits::ToPrimitive::to_f64(&factor).unwrap_or(f64::NAN) * pair_path(&path, phi);
        report.record(lhs, rhs, || {
            format!(
                "trial {trial}: A = {:?}, X = {}",
                af.rows().collect::<Vec<_>>(),
                describe_path(&path)
            )
        });
    }
    report
}

/// Exact check under a single matrix, used for fixed transforms.
pub fn scales_by_det_power(phi: &Polynomial, a: &SquareMatrix<Rational>, weight: usize) -> bool {
    let factor = if weight == 0 {
        Rational::one()
    } else {
        Pow::pow(a.det(), weight as u32)
    };
    phi.apply_matrix(&a.transpose())
        .map(|p| p == phi.scale(&factor))
        .unwrap_or(false)
}
