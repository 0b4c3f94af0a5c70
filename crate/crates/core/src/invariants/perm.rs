//! Permutation invariants, indexed by set partitions of the word positions.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::gl::signed_permutations;
use super::verify::{describe_path, pair_path, trial_path, VerifyReport};
use super::{Generator, Group, InvariantDescriptor};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::poly::Polynomial;
use crate::random::random_permutation;
use crate::word::{Alphabet, Word};
use crate::Rational;

/// A partition of `{1..n}` into non-empty blocks; blocks are sorted
/// internally and ordered by their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Canonicalizes and validates blocks covering `1..=n` exactly once.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &i in blocks.iter().flatten() {
            if i == 0 || i > n || seen[i] {
                return Err(Error::InvalidArgument(format!(
                    "blocks do not partition 1..={n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { blocks })
    }

    /// From a restricted growth string: position `i` (0-based) belongs to
    /// block `rgs[i]`.
    fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        Self { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Size of the partitioned set.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        f.write_str("}")
    }
}

/// Groups the positions of `word` by letter: positions sharing a letter
/// form one block.
pub fn nabla(word: &Word) -> Result<SetPartition> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let max = *word.letters().iter().max().expect("non-empty") as usize;
    let mut by_letter: Vec<Vec<usize>> = vec![Vec::new(); max + 1];
    for (i, &l) in word.letters().iter().enumerate() {
        by_letter[l as usize].push(i + 1);
    }
    let mut blocks: Vec<Vec<usize>> = by_letter.into_iter().filter(|b| !b.is_empty()).collect();
    blocks.sort_by_key(|b| b[0]);
    Ok(SetPartition { blocks })
}

/// All set partitions of `1..=n` with at most `max_blocks` blocks, in
/// restricted-growth-string order. For `n = 0` this is the single empty
/// partition.
pub fn enumerate_partitions(n: usize, max_blocks: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(SetPartition { blocks: Vec::new() });
        return out;
    }
    if max_blocks == 0 {
        return out;
    }
    let mut rgs = vec![0usize; n];
    rgs_rec(1, 0, max_blocks, &mut rgs, &mut out);
    out
}

fn rgs_rec(i: usize, max_used: usize, cap: usize, rgs: &mut [usize], out: &mut Vec<SetPartition>) {
    if i == rgs.len() {
        out.push(SetPartition::from_rgs(rgs));
        return;
    }
    for b in 0..=(max_used + 1).min(cap - 1) {
        rgs[i] = b;
        rgs_rec(i + 1, max_used.max(b), cap, rgs, out);
    }
}

/// `M_A`: the sum of every word whose position partition is `A`, i.e.
/// every injective assignment of distinct letters to the blocks.
pub fn perm_polynomial(partition: &SetPartition, d: usize) -> Polynomial {
    let alphabet = Alphabet::new(d);
    let n = partition.size();
    let k = partition.num_blocks();
    let mut terms = Vec::new();
    let mut used = vec![false; d + 1];
    let mut assign = vec![0u8; k];
    assign_rec(0, d, &mut used, &mut assign, &mut |letters| {
        let mut w = vec![0u8; n];
        for (block, &l) in partition.blocks().iter().zip(letters) {
            for &pos in block {
                w[pos - 1] = l;
            }
        }
        terms.push((Word::new(w), Rational::from_integer(1.into())));
    });
    Polynomial::from_terms(alphabet, terms).expect("letters lie in 1..=d")
}

fn assign_rec(
    i: usize,
    d: usize,
    used: &mut [bool],
    assign: &mut [u8],
    emit: &mut dyn FnMut(&[u8]),
) {
    if i == assign.len() {
        emit(assign);
        return;
    }
    for l in 1..=d {
        if used[l] {
            continue;
        }
        used[l] = true;
        assign[i] = l as u8;
        assign_rec(i + 1, d, used, assign, emit);
        used[l] = false;
    }
}

/// Basis of permutation invariants of level `n`: one `M_A` per partition of
/// `1..=n` into at most `d` blocks.
pub fn perm_basis(d: usize, n: usize) -> Vec<InvariantDescriptor> {
    enumerate_partitions(n, d)
        .into_iter()
        .map(|a| InvariantDescriptor {
            group: Group::Perm,
            time_augmented: false,
            dim: d,
            level: n,
            weight: None,
            polynomial: perm_polynomial(&a, d),
            generator: if n == 0 {
                Generator::Constant
            } else {
                Generator::Partition {
                    blocks: a.blocks().to_vec(),
                }
            },
            notes: Vec::new(),
        })
        .collect()
}

/// Exact fixed-point check under all `d!` permutation matrices (for
/// `d <= 6`) and pairing equality on random walks under random coordinate
/// permutations.
pub fn verify_perm_invariance(phi: &Polynomial, trials: usize, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = phi.alphabet().dim();
    let mut report = VerifyReport::new();

    if d <= 6 {
        for (perm, _) in signed_permutations(d) {
            let idx: Vec<usize> = perm.iter().map(|&l| l as usize - 1).collect();
            let m = SquareMatrix::<Rational>::permutation(&idx);
            let moved = phi.apply_matrix(&m).expect("matrix matches alphabet");
            report.record_exact(moved == *phi, || {
                format!("not fixed by permutation {perm:?}")
            });
        }
    }

    for trial in 0..trials {
        let sigma = random_permutation(&mut rng, d);
        let m = SquareMatrix::<f64>::permutation(&sigma);
        let path = trial_path(&mut rng, phi);
        let moved = path.transform(&m).expect("matrix matches path");
        let lhs = pair_path(&moved, phi);
        let rhs = pair_path(&path, phi);
        report.record(lhs, rhs, || {
            format!(
                "trial {trial}: sigma = {sigma:?}, X = {}",
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

    fn part(blocks: Vec<Vec<usize>>) -> SetPartition {
        SetPartition::from_blocks(blocks).unwrap()
    }

    #[test]
    fn nabla_examples() {
        assert_eq!(
            nabla(&Word::from([2, 3, 2, 2, 1])).unwrap(),
            part(vec![vec![1, 3, 4], vec![2], vec![5]])
        );
        assert_eq!(
            nabla(&Word::from([1, 1, 1])).unwrap(),
            part(vec![vec![1, 2, 3]])
        );
        assert_eq!(
            nabla(&Word::from([1, 2])).unwrap(),
            part(vec![vec![1], vec![2]])
        );
        assert_eq!(nabla(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(2, 2).len(), 2);
        assert_eq!(enumerate_partitions(2, 5).len(), 2);
        assert_eq!(enumerate_partitions(3, 3).len(), 5);
        assert_eq!(enumerate_partitions(3, 1).len(), 1);
        assert_eq!(enumerate_partitions(4, 2).len(), 8);
    }

    #[test]
    fn rgs_order_matches_listing_order() {
        let shown: Vec<String> = enumerate_partitions(3, 3)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            shown,
            [
                "{{1,2,3}}",
                "{{1,2},{3}}",
                "{{1,3},{2}}",
                "{{1},{2,3}}",
                "{{1},{2},{3}}"
            ]
        );
    }

    #[test]
    fn basis_examples() {
        let b1: Vec<Polynomial> = perm_basis(3, 1).into_iter().map(|d| d.polynomial).collect();
        assert_eq!(b1, vec![p(3, "+1*[1] +1*[2] +1*[3]")]);

        let b2: Vec<Polynomial> = perm_basis(3, 2).into_iter().map(|d| d.polynomial).collect();
        assert_eq!(
            b2,
            vec![
                p(3, "+1*[3,3] +1*[2,2] +1*[1,1]"),
                p(3, "+1*[3,2] +1*[3,1] +1*[2,3] +1*[2,1] +1*[1,3] +1*[1,2]")
            ]
        );

        let m = perm_polynomial(&part(vec![vec![1, 2], vec![3]]), 3);
        assert_eq!(
            m,
            p(
                3,
                "+1*[3,3,2] +1*[3,3,1] +1*[2,2,3] +1*[2,2,1] +1*[1,1,3] +1*[1,1,2]"
            )
        );
    }

    #[test]
    fn term_counts_are_falling_factorials() {
        for d in 1..=4 {
            for a in enumerate_partitions(4, d) {
                let k = a.num_blocks();
                let expected: usize = (0..k).map(|i| d - i).product();
                assert_eq!(perm_polynomial(&a, d).len(), expected);
            }
        }
    }

    #[test]
    fn verification_controls() {
        for desc in perm_basis(3, 3) {
            let r = verify_perm_invariance(&desc.polynomial, 20, 2);
            assert!(r.passed(), "{r}");
            assert_eq!(r.exact_checks, 6);
        }
        let x12 = p(3, "+1*[1,2]");
        let swap = SquareMatrix::<Rational>::permutation(&[1, 0, 2]);
        assert_ne!(x12.apply_matrix(&swap).unwrap(), x12);
        assert!(!verify_perm_invariance(&x12, 5, 2).passed());
    }

    #[test]
    fn invalid_blocks_rejected() {
        assert!(SetPartition::from_blocks(vec![vec![1, 2], vec![2]]).is_err());
        assert!(SetPartition::from_blocks(vec![vec![1, 3]]).is_err());
        assert!(SetPartition::from_blocks(vec![vec![]]).is_err());
    }
}
