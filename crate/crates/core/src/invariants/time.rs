//! Invariants over the time-augmented alphabet `{0..d}`, where the group
//! acts as `diag(1, A)` and leaves the time letter fixed. A basis at total
//! level `m` is obtained by inserting blocks of time letters into every base
//! invariant of level `n <= m`.

use num_traits::{Pow, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::verify::{describe_path, pair_path, trial_path, VerifyReport};
use super::{
    gl_basis, perm_basis, so_basis, verify_gl_invariance, Generator, Group, InvariantDescriptor,
};
use crate::matrix::SquareMatrix;
use crate::poly::Polynomial;
use crate::Rational;

/// Which base family to lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseFamily {
    /// GL invariants of the given weight (base level `w * d` only).
    Gl { weight: usize },
    /// SO invariants of every level `0..=m`.
    So,
    /// Permutation invariants of every level `0..=m`.
    Perm,
}

impl BaseFamily {
    pub fn group(&self) -> Group {
        match self {
            BaseFamily::Gl { .. } => Group::Gl,
            BaseFamily::So => Group::So,
            BaseFamily::Perm => Group::Perm,
        }
    }
}

/// All weak compositions of `total` into `slots` non-negative parts, in
/// lexicographic order.
pub fn enumerate_compositions(total: usize, slots: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if slots == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = Vec::with_capacity(slots);
    compose(total, slots, &mut cur, &mut out);
    out
}

fn compose(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() + 1 == slots {
        cur.push(left);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for k in 0..=left {
        cur.push(k);
        compose(left - k, slots, cur, out);
        cur.pop();
    }
}

/// Base invariants of level `n` for the family, or none if the level is
/// not admissible.
fn base_invariants(family: BaseFamily, d: usize, n: usize) -> Vec<InvariantDescriptor> {
    match family {
        BaseFamily::Gl { weight } => {
            if weight == 0 || n != weight * d {
                Vec::new()
            } else {
                gl_basis(d, weight)
            }
        }
        BaseFamily::So => so_basis(d, n),
        BaseFamily::Perm => perm_basis(d, n),
    }
}

/// Time-augmented basis at total level `m`: `Insert_z psi` for every base
/// invariant `psi` of level `n <= m` and every composition `z` of `m - n`
/// into `n + 1` parts. SO and permutation families include the constant
/// at `n = 0`, which yields the pure-time word `0^m`.
pub fn augmented_basis(family: BaseFamily, d: usize, m: usize) -> Vec<InvariantDescriptor> {
    let mut out = Vec::new();
    for n in 0..=m {
        let bases = base_invariants(family, d, n);
        if bases.is_empty() {
            continue;
        }
        let comps = enumerate_compositions(m - n, n + 1);
        for psi in &bases {
            for z in &comps {
                let polynomial = psi
                    .polynomial
                    .insert_z(z)
                    .expect("base invariants are homogeneous");
                out.push(InvariantDescriptor {
                    group: family.group(),
                    time_augmented: true,
                    dim: d,
                    level: m,
                    weight: psi.weight,
                    generator: Generator::Inserted {
                        base: Box::new(psi.generator.clone()),
                        z: z.clone(),
                    },
                    polynomial,
                    notes: psi.notes.clone(),
                });
            }
        }
    }
    out
}

/// Exact check `diag(1, A)^T phi = det(A)^w phi` for random integer `A`, and
/// the matching pairing identity on time-augmented random walks.
pub fn verify_gl0_invariance(
    phi: &Polynomial,
    weight: usize,
    trials: usize,
    seed: u64,
) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = phi.alphabet().dim();
    if !phi.alphabet().has_time() {
        return verify_gl_invariance(phi, weight, trials, seed);
    }
    let mut report = VerifyReport::new();
    for trial in 0..trials {
        let a = SquareMatrix::<Rational>::random_invertible(&mut rng, d, 2);
        let factor = Pow::pow(a.det(), weight as u32);
        // apply_matrix on a time alphabet acts as diag(1, A)
        let moved = phi
            .apply_matrix(&a.transpose())
            .expect("matrix matches alphabet");
        report.record_exact(moved == phi.scale(&factor), || {
            format!("trial {trial}: diag(1,A)^T phi != det(A)^{weight} phi for A = {a:?}")
        });

        let path = trial_path(&mut rng, phi);
        let af = a.to_f64();
        let moved_path = path.transform(&af).expect("matrix matches spatial part");
        let lhs = pair_path(&moved_path, phi);
        let rhs = factor.to_f64().unwrap_or(f64::NAN) * pair_path(&path, phi);
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
