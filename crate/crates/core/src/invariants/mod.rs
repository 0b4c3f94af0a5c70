//! Linear bases of invariants under GL, SO and coordinate permutations, and
//! their lifts to the time-augmented alphabet.

pub mod gl;
pub mod perm;
pub mod so;
pub mod time;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::tableau::RectTableau;
use crate::word::Alphabet;

pub use gl::{det_indicator, gl_basis, gl_polynomial, verify_gl_invariance};
pub use perm::{
    enumerate_partitions, nabla, perm_basis, perm_polynomial, verify_perm_invariance, SetPartition,
};
pub use so::{
    enumerate_index_families, so2_basis, so_basis, so_basis_general, verify_so_invariance,
    IndexFamily, Part,
};
pub use time::{augmented_basis, enumerate_compositions, verify_gl0_invariance, BaseFamily};
pub use verify::{rel_error, VerifyReport};

/// The symmetry group an invariant is built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Gl,
    So,
    Perm,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Gl => "gl",
            Group::So => "so",
            Group::Perm => "perm",
        })
    }
}

impl std::str::FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Group::Gl),
            "so" => Ok(Group::So),
            "perm" => Ok(Group::Perm),
            other => Err(Error::InvalidArgument(format!("unknown group `{other}`"))),
        }
    }
}

/// The combinatorial object a basis element was generated from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Generator {
    /// GL: product of column determinants of a standard rectangular tableau.
    Tableau { rows: Vec<Vec<usize>> },
    /// SO, d = 2: real or imaginary part of a balanced word in
    /// `z1 = x1 + i x2`, `z2 = x1 - i x2`.
    ZWord { letters: Vec<u8>, part: Part },
    /// SO, general d: product of Gram minors and determinants.
    IndexFamily(IndexFamily),
    /// Permutations: sum of all words with the given position partition.
    Partition { blocks: Vec<Vec<usize>> },
    /// The constant invariant 1 (level 0).
    Constant,
    /// Time letters inserted into a base invariant.
    Inserted { base: Box<Generator>, z: Vec<usize> },
}

impl Generator {
    /// Recomputes the polynomial this generator describes in dimension `d`.
    pub fn build(&self, d: usize) -> Result<Polynomial> {
        match self {
            Generator::Tableau { rows } => {
                let t = RectTableau::from_rows(rows.clone())
                    .ok_or_else(|| Error::InvalidArgument("tableau is not standard".into()))?;
                if t.rows() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        got: t.rows(),
                    });
                }
                Ok(gl_polynomial(&t))
            }
            Generator::ZWord { letters, part } => {
                if d != 2 {
                    return Err(Error::InvalidArgument(
                        "z-word invariants exist only for d = 2".into(),
                    ));
                }
                Ok(so::z_word_polynomial(letters, *part))
            }
            Generator::IndexFamily(f) => f.polynomial(d),
            Generator::Partition { blocks } => {
                let p = SetPartition::from_blocks(blocks.clone())?;
                Ok(perm_polynomial(&p, d))
            }
            Generator::Constant => Ok(Polynomial::one(Alphabet::new(d))),
            Generator::Inserted { base, z } => base.build(d)?.insert_z(z),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Tableau { rows } => write!(f, "tableau {rows:?}"),
            Generator::ZWord { letters, part } => {
                let z: String = letters.iter().map(|l| l.to_string()).collect();
                write!(f, "{part} z{z}")
            }
            Generator::IndexFamily(fam) => write!(f, "family {fam}"),
            Generator::Partition { blocks } => write!(f, "partition {blocks:?}"),
            Generator::Constant => f.write_str("constant"),
            Generator::Inserted { base, z } => write!(f, "insert {z:?} into {base}"),
        }
    }
}

/// Provenance record for one basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantDescriptor {
    pub group: Group,
    pub time_augmented: bool,
    /// Spatial dimension `d`.
    pub dim: usize,
    /// Homogeneity (word length).
    pub level: usize,
    /// Weight, GL only.
    pub weight: Option<usize>,
    pub generator: Generator,
    pub polynomial: Polynomial,
    /// Free-form remarks, e.g. generators dropped as linearly dependent.
    pub notes: Vec<String>,
}

impl InvariantDescriptor {
    /// The scaling exponent `w` in `<S(AX), phi> = det(A)^w <S(X), phi>`;
    /// 0 for SO and permutation invariants.
    pub fn det_exponent(&self) -> usize {
        self.weight.unwrap_or(0)
    }

    /// Rebuilds the polynomial from the generator and checks it matches.
    pub fn generator_round_trips(&self) -> bool {
        self.generator
            .build(self.dim)
            .map(|p| p == self.polynomial)
            .unwrap_or(false)
    }
}

/// Dispatches to the right verification routine for the descriptor's group.
pub fn verify(desc: &InvariantDescriptor, trials: usize, seed: u64) -> VerifyReport {
    match (desc.group, desc.time_augmented) {
        (Group::Gl, false) => {
            verify_gl_invariance(&desc.polynomial, desc.det_exponent(), trials, seed)
        }
        (Group::Gl, true) => {
            verify_gl0_invariance(&desc.polynomial, desc.det_exponent(), trials, seed)
        }
        (Group::So, _) => verify_so_invariance(&desc.polynomial, trials, seed),
        (Group::Perm, _) => verify_perm_invariance(&desc.polynomial, trials, seed),
    }
}
