//! Rotation (SO) invariants.
//!
//! Two constructions are provided. For `d = 2` the real and imaginary parts
//! of balanced words in `z1 = x1 + i x2`, `z2 = x1 - i x2` starting with
//! `z1` form a basis of each even level. For general `d`, invariants are
//! products of Gram minors `p(a, b)` and determinants `u(c)` indexed by
//! chains of increasing index sequences that partition the word positions.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::gl::{det_indicator, signed_permutations};
use super::verify::{describe_path, pair_path, trial_path, VerifyReport};
use super::{Generator, Group, InvariantDescriptor};
use crate::error::{Error, Result};
use crate::linalg::Span;
use crate::matrix::SquareMatrix;
use crate::poly::Polynomial;
use crate::word::{words_of_length, Alphabet, Word};
use crate::Rational;

/// Real or imaginary part of a complex z-word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Re,
    Im,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::Re => "Re",
            Part::Im => "Im",
        })
    }
}

/// Expands `Re` or `Im` of `z_{j1} .. z_{jn}` into x-words.
///
/// Each letter `x2` read under `z1` contributes a factor `i`, under `z2` a
/// factor `-i`; `x1` contributes 1.
pub fn z_word_polynomial(z: &[u8], part: Part) -> Polynomial {
    let alphabet = Alphabet::new(2);
    let n = z.len();
    let terms = words_of_length(&alphabet, n).filter_map(|w| {
        let mut under_z1 = 0usize;
        let mut under_z2 = 0usize;
        for (&x, &zl) in w.letters().iter().zip(z) {
            if x == 2 {
                if zl == 1 {
                    under_z1 += 1;
                } else {
                    under_z2 += 1;
                }
            }
        }
        // i^(k1 + k2) * (-1)^k2
        let k = under_z1 + under_z2;
        let sign_z2 = if under_z2.is_multiple_of(2) { 1 } else { -1 };
        let value = match (part, k % 2) {
            (Part::Re, 0) => sign_z2 * if (k / 2).is_multiple_of(2) { 1 } else { -1 },
            (Part::Im, 1) => {
                sign_z2
                    * if ((k - 1) / 2).is_multiple_of(2) {
                        1
                    } else {
                        -1
                    }
            }
            _ => return None,
        };
        Some((w, Rational::from_integer(value.into())))
    });
    Polynomial::from_terms(alphabet, terms).expect("letters lie in {1,2}")
}

/// Balanced z-words of length `n` starting with `z1`, in lexicographic order.
fn balanced_z_words(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    if n % 2 == 1 {
        return Vec::new();
    }
    words_of_length(&Alphabet::new(2), n)
        .map(Word::into_letters)
        .filter(|w| w[0] == 1 && w.iter().filter(|&&l| l == 1).count() == n / 2)
        .collect()
}

/// Basis of SO(2) invariants at level `n`: `Re` and `Im` of every balanced
/// z-word starting with `z1`. Empty for odd `n`; the constant 1 for `n = 0`.
pub fn so2_basis(n: usize) -> Vec<InvariantDescriptor> {
    if n == 0 {
        return vec![constant_descriptor(2)];
    }
    let mut out = Vec::new();
    for z in balanced_z_words(n) {
        for part in [Part::Re, Part::Im] {
            out.push(InvariantDescriptor {
                group: Group::So,
                time_augmented: false,
                dim: 2,
                level: n,
                weight: None,
                polynomial: z_word_polynomial(&z, part),
                generator: Generator::ZWord {
                    letters: z.clone(),
                    part,
                },
                notes: Vec::new(),
            });
        }
    }
    out
}

fn constant_descriptor(d: usize) -> InvariantDescriptor {
    InvariantDescriptor {
        group: Group::So,
        time_augmented: false,
        dim: d,
        level: 0,
        weight: None,
        polynomial: Polynomial::one(Alphabet::new(d)),
        generator: Generator::Constant,
        notes: Vec::new(),
    }
}

/// A chain `a(1) >= b(1) >= a(2) >= .. >= b(r) >= c(1) >= .. >= c(s)` of
/// strictly increasing 1-based position sequences that partition `1..=n`.
/// Each `(a, b)` pair selects a Gram minor, each `c` a determinant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexFamily {
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub dets: Vec<Vec<usize>>,
}

impl IndexFamily {
    /// Word length covered by the family.
    pub fn level(&self) -> usize {
        self.pairs
            .iter()
            .map(|(a, b)| a.len() + b.len())
            .sum::<usize>()
            + self.dets.iter().map(Vec::len).sum::<usize>()
    }

    /// Chain order and disjoint cover of `1..=n`, with `1 <= r_j <= d-1`
    /// for pairs and length `d` for determinants.
    pub fn is_valid(&self, d: usize) -> bool {
        let n = self.level();
        let mut seen = vec![false; n + 1];
        for s in self.sequences() {
            if s.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &i in s {
                if i == 0 || i > n || seen[i] {
                    return false;
                }
                seen[i] = true;
            }
        }
        let ranks_ok = self
            .pairs
            .iter()
            .all(|(a, b)| a.len() == b.len() && !a.is_empty() && a.len() < d);
        let dets_ok = self.dets.iter().all(|c| c.len() == d);
        let chain: Vec<&Vec<usize>> = self.sequences().collect();
        let ordered = chain.windows(2).all(|w| dominates(w[0], w[1]));
        ranks_ok && dets_ok && ordered
    }

    /// Sequences in chain order.
    pub fn sequences(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.pairs
            .iter()
            .flat_map(|(a, b)| [a, b])
            .chain(self.dets.iter())
    }

    /// Coefficient on a word: product of Gram minors and determinants of
    /// the canonical basis vectors `e_{word[pos]}`.
    pub fn coefficient(&self, word: &[u8]) -> i64 {
        let mut value = 1i64;
        for (a, b) in &self.pairs {
            value *= gram_minor(a, b, word);
            if value == 0 {
                return 0;
            }
        }
        for c in &self.dets {
            let letters: Vec<u8> = c.iter().map(|&p| word[p - 1]).collect();
            value *= det_indicator(&letters) as i64;
            if value == 0 {
                return 0;
            }
        }
        value
    }

    pub fn polynomial(&self, d: usize) -> Result<Polynomial> {
        if !self.is_valid(d) {
            return Err(Error::InvalidArgument(format!(
                "index family {self} is not admissible for d = {d}"
            )));
        }
        let alphabet = Alphabet::new(d);
        let terms = words_of_length(&alphabet, self.level()).filter_map(|w| {
            let c = self.coefficient(w.letters());
            (c != 0).then(|| (w, Rational::from_integer(c.into())))
        });
        Polynomial::from_terms(alphabet, terms)
    }
}

impl fmt::Display for IndexFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = |s: &[usize]| {
            let v: Vec<String> = s.iter().map(|i| i.to_string()).collect();
            format!("({})", v.join(","))
        };
        let mut parts = Vec::new();
        for (a, b) in &self.pairs {
            parts.push(format!("a={} b={}", seq(a), seq(b)));
        }
        for c in &self.dets {
            parts.push(format!("c={}", seq(c)));
        }
        if parts.is_empty() {
            f.write_str("{}")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Partial order: `a >= b` iff `len(a) <= len(b)` and `a_j >= b_j` for all
/// `j <= len(a)`.
fn dominates(a: &[usize], b: &[usize]) -> bool {
    a.len() <= b.len() && a.iter().zip(b).all(|(x, y)| x >= y)
}

/// Determinant of the 0/1 matrix `[word[a_k] == word[b_l]]`.
fn gram_minor(a: &[usize], b: &[usize], word: &[u8]) -> i64 {
    let r = a.len();
    let m: Vec<Vec<i64>> = a
        .iter()
        .map(|&i| {
            b.iter()
                .map(|&j| i64::from(word[i - 1] == word[j - 1]))
                .collect()
        })
        .collect();
    if r == 1 {
        return m[0][0];
    }
    signed_permutations(r)
        .iter()
        .map(|(perm, sign)| {
            let prod: i64 = perm
                .iter()
                .enumerate()
                .map(|(row, &col)| m[row][col as usize - 1])
                .product();
            *sign as i64 * prod
        })
        .sum()
}

#[derive(Clone, Copy)]
enum Slot {
    /// Next sequence opens a pair, or switches to determinants.
    Open,
    /// Next sequence closes the current pair with this rank.
    Close(usize),
    Dets,
}

/// All index families for dimension `d` and level `n`, with each pair free
/// to choose its own rank `1 <= r_j <= d-1`. Deterministic order.
pub fn enumerate_index_families(d: usize, n: usize) -> Vec<IndexFamily> {
    let mut out = Vec::new();
    if d < 2 {
        return out;
    }
    let remaining: Vec<usize> = (1..=n).collect();
    let mut chain: Vec<Vec<usize>> = Vec::new();
    search(d, &remaining, &mut chain, Slot::Open, 0, &mut out);
    out
}

fn search(
    d: usize,
    remaining: &[usize],
    chain: &mut Vec<Vec<usize>>,
    slot: Slot,
    num_pair_seqs: usize,
    out: &mut Vec<IndexFamily>,
) {
    let prev = chain.last().cloned();
    if remaining.is_empty() {
        if !matches!(slot, Slot::Close(_)) {
            let pairs = chain[..num_pair_seqs]
                .chunks(2)
                .map(|p| (p[0].clone(), p[1].clone()))
                .collect();
            let dets = chain[num_pair_seqs..].to_vec();
            out.push(IndexFamily { pairs, dets });
        }
        return;
    }

    let mut try_size = |size: usize, next: Slot, pair_seq: bool, chain: &mut Vec<Vec<usize>>| {
        if size > remaining.len() {
            return;
        }
        for subset in combinations(remaining, size) {
            if let Some(p) = &prev {
                if !dominates(p, &subset) {
                    continue;
                }
            }
            let rest: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|x| !subset.contains(x))
                .collect();
            chain.push(subset);
            search(
                d,
                &rest,
                chain,
                next,
                num_pair_seqs + usize::from(pair_seq),
                out,
            );
            chain.pop();
        }
    };

    match slot {
        Slot::Open => {
            let min_rank = prev.as_ref().map_or(1, Vec::len);
            for r in min_rank..d {
                try_size(r, Slot::Close(r), true, chain);
            }
            try_size(d, Slot::Dets, false, chain);
        }
        Slot::Close(r) => try_size(r, Slot::Open, true, chain),
        Slot::Dets => try_size(d, Slot::Dets, false, chain),
    }
}

/// `k`-element subsets of `items` (kept in order), in lexicographic order.
fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// SO invariants of level `n` in dimension `d` from index families,
/// reduced to a linearly independent subset. Dropped generators, if any,
/// are listed in the notes of every returned descriptor.
pub fn so_basis_general(d: usize, n: usize) -> Vec<InvariantDescriptor> {
    let families = enumerate_index_families(d, n);
    let mut span = Span::new(Alphabet::new(d));
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for fam in families {
        let poly = fam.polynomial(d).expect("enumerated families are valid");
        if span.insert(&poly) {
            kept.push((fam, poly));
        } else {
            dropped.push(fam.to_string());
        }
    }
    let notes = if dropped.is_empty() {
        Vec::new()
    } else {
        vec![format!(
            "dropped {} linearly dependent families: {}",
            dropped.len(),
            dropped.join("; ")
        )]
    };
    kept.into_iter()
        .map(|(fam, poly)| InvariantDescriptor {
            group: Group::So,
            time_augmented: false,
            dim: d,
            level: n,
            weight: None,
            polynomial: poly,
            generator: Generator::IndexFamily(fam),
            notes: notes.clone(),
        })
        .collect()
}

/// The authoritative SO basis: the z-word basis for `d = 2`, the index
/// family basis otherwise.
pub fn so_basis(d: usize, n: usize) -> Vec<InvariantDescriptor> {
    if d == 2 {
        so2_basis(n)
    } else {
        so_basis_general(d, n)
    }
}

/// Rotation matrices that permute coordinates up to sign (the signed
/// permutation matrices of determinant +1).
pub fn signed_permutation_rotations(d: usize) -> Vec<SquareMatrix<Rational>> {
    let mut out = Vec::new();
    for (perm, sign) in signed_permutations(d) {
        for mask in 0u32..(1 << d) {
            let flips = mask.count_ones() as i32;
            let det = sign * if flips % 2 == 0 { 1 } else { -1 };
            if det != 1 {
                continue;
            }
            let mut m = SquareMatrix::<Rational>::identity(d);
            for i in 0..d {
                m.set(i, i, Rational::from_integer(0.into()));
            }
            for (i, &p) in perm.iter().enumerate() {
                let s = if mask & (1 << i) != 0 { -1 } else { 1 };
                m.set(p as usize - 1, i, Rational::from_integer(s.into()));
            }
            out.push(m);
        }
    }
    out
}

/// Pairing equality under random rotations of random walks, plus exact
/// fixed-point checks under every signed permutation of determinant 1.
pub fn verify_so_invariance(phi: &Polynomial, trials: usize, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = phi.alphabet().dim();
    let mut report = VerifyReport::new();

    if d <= 5 {
        for m in signed_permutation_rotations(d) {
            let moved = phi
                .apply_matrix(&m.transpose())
                .expect("matrix matches alphabet");
            report.record_exact(moved == *phi, || {
                format!("not fixed by signed permutation {m:?}")
            });
        }
    }

    for trial in 0..trials {
        let r = SquareMatrix::random_rotation(&mut rng, d);
        let path = trial_path(&mut rng, phi);
        let moved = path.transform(&r).expect("matrix matches path");
        let lhs = pair_path(&moved, phi);
        let rhs = pair_path(&path, phi);
        report.record(lhs, rhs, || {
            format!(
                "trial {trial}: R = {:?}, X = {}",
                r.rows().collect::<Vec<_>>(),
                describe_path(&path)
            )
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, s: &str) -> Polynomial {
        Polynomial::parse(s, Alphabet::new(d)).unwrap()
    }

    fn polys(v: Vec<InvariantDescriptor>) -> Vec<Polynomial> {
        v.into_iter().map(|d| d.polynomial).collect()
    }

    #[test]
    fn so2_level_two() {
        assert_eq!(
            polys(so2_basis(2)),
            vec![p(2, "+1*[1,1] +1*[2,2]"), p(2, "-1*[1,2] +1*[2,1]")]
        );
        assert!(so2_basis(3).is_empty());
        assert_eq!(so2_basis(0).len(), 1);
    }

    #[test]
    fn so2_level_four_first_element() {
        let b = polys(so2_basis(4));
        assert_eq!(b.len(), 6);
        assert_eq!(
            b[0],
            p(
                2,
                "+1*[1,1,1,1] -1*[1,1,2,2] +1*[1,2,1,2] +1*[1,2,2,1] +1*[2,1,1,2] +1*[2,1,2,1] -1*[2,2,1,1] +1*[2,2,2,2]"
            )
        );
    }

    #[test]
    fn family_examples_d2() {
        let f2 = enumerate_index_families(2, 2);
        assert_eq!(f2.len(), 2);
        let det_family = IndexFamily {
            pairs: vec![],
            dets: vec![vec![1, 2]],
        };
        let gram_family = IndexFamily {
            pairs: vec![(vec![2], vec![1])],
            dets: vec![],
        };
        assert!(f2.contains(&det_family));
        assert!(f2.contains(&gram_family));
        assert_eq!(det_family.polynomial(2).unwrap(), p(2, "+1*[1,2] -1*[2,1]"));
        assert_eq!(
            gram_family.polynomial(2).unwrap(),
            p(2, "+1*[1,1] +1*[2,2]")
        );

        assert!(enumerate_index_families(2, 3).is_empty());
        assert!(enumerate_index_families(2, 1).is_empty());
    }

    #[test]
    fn family_examples_d2_level4() {
        let fams = enumerate_index_families(2, 4);
        let expected = [
            IndexFamily {
                pairs: vec![(vec![4], vec![3]), (vec![2], vec![1])],
                dets: vec![],
            },
            IndexFamily {
                pairs: vec![(vec![4], vec![3])],
                dets: vec![vec![1, 2]],
            },
            IndexFamily {
                pairs: vec![(vec![4], vec![2])],
                dets: vec![vec![1, 3]],
            },
            IndexFamily {
                pairs: vec![(vec![3], vec![2])],
                dets: vec![vec![1, 4]],
            },
            IndexFamily {
                pairs: vec![],
                dets: vec![vec![3, 4], vec![1, 2]],
            },
            IndexFamily {
                pairs: vec![],
                dets: vec![vec![2, 4], vec![1, 3]],
            },
        ];
        assert_eq!(fams.len(), 6);
        for e in &expected {
            assert!(fams.contains(e), "missing {e}");
        }
    }

    #[test]
    fn general_d2_spans_z_basis() {
        for n in [2, 4, 6] {
            let g = polys(so_basis_general(2, n));
            let z = polys(so2_basis(n));
            assert!(crate::linalg::same_span(&g, &z), "n={n}");
        }
    }

    #[test]
    fn d3_level3_contains_volume_form() {
        let b = polys(so_basis_general(3, 3));
        let inv3 = p(
            3,
            "+1*[1,2,3] -1*[1,3,2] +1*[3,1,2] -1*[3,2,1] +1*[2,3,1] -1*[2,1,3]",
        );
        assert!(b.contains(&inv3) || b.contains(&-&inv3));
    }

    #[test]
    fn d4_level2_is_squared_norm() {
        let b = polys(so_basis_general(4, 2));
        assert_eq!(b, vec![p(4, "+1*[1,1] +1*[2,2] +1*[3,3] +1*[4,4]")]);
    }

    #[test]
    fn families_are_valid_and_chain_ordered() {
        for (d, n) in [(2, 6), (3, 4), (3, 5), (4, 4)] {
            for f in enumerate_index_families(d, n) {
                assert!(f.is_valid(d), "{f}");
                assert_eq!(f.level(), n);
            }
        }
        let bad = IndexFamily {
            pairs: vec![(vec![1], vec![2])],
            dets: vec![],
        };
        assert!(!bad.is_valid(2));
        assert!(bad.polynomial(2).is_err());
    }

    #[test]
    fn signed_permutation_rotations_have_det_one() {
        let ms = signed_permutation_rotations(2);
        assert_eq!(ms.len(), 4);
        for m in signed_permutation_rotations(3) {
            assert_eq!(m.det(), Rational::from_integer(1.into()));
        }
        assert_eq!(signed_permutation_rotations(3).len(), 24);
    }

    #[test]
    fn verification_controls() {
        for desc in so2_basis(4) {
            let r = verify_so_invariance(&desc.polynomial, 100, 5);
            assert!(r.passed(), "{r}");
        }
        let x1 = p(2, "+1*[1]");
        assert!(!verify_so_invariance(&x1, 10, 5).passed());

        // reflections flip the sign of the area invariant
        let area = p(2, "-1*[1,2] +1*[2,1]");
        let refl = SquareMatrix::diagonal(vec![
            Rational::from_integer((-1).into()),
            Rational::from_integer(1.into()),
        ]);
        assert_eq!(area.apply_matrix(&refl.transpose()).unwrap(), -&area);
    }
}
