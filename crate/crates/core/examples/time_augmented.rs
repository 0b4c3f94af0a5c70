// Lifting invariants to paths with a time channel that the group fixes.

use siginv::invariants::{augmented_basis, verify_gl0_invariance, BaseFamily};
use siginv::linalg::is_independent;
use siginv::Polynomial;

fn main() {
    let basis = augmented_basis(BaseFamily::Gl { weight: 1 }, 2, 3);
    for desc in &basis {
        let report = verify_gl0_invariance(&desc.polynomial, 1, 20, 3);
        println!(
            "{:<40} {}  {report}",
            desc.generator.to_string(),
            desc.polynomial
        );
        assert!(report.passed());
    }
    for family in [BaseFamily::So, BaseFamily::Perm] {
        let b = augmented_basis(family, 2, 3);
        let polys: Vec<Polynomial> = b.iter().map(|d| d.polynomial.clone()).collect();
        println!(
            "{family:?} d=2 m=3: {} invariants, independent = {}",
            b.len(),
            is_independent(&polys)
        );
    }
}
