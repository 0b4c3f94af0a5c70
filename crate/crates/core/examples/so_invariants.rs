// Rotation invariants: the complex z-word basis in the plane and the
// Gram-minor/determinant families in higher dimension.

use siginv::invariants::{so_basis, verify_so_invariance};
use siginv::linalg::rank;
use siginv::Polynomial;

fn main() {
    for desc in so_basis(2, 4) {
        println!("{:<14} {}", desc.generator.to_string(), desc.polynomial);
    }
    for (d, n) in [(3, 2), (3, 3), (3, 4), (4, 4)] {
        let basis = so_basis(d, n);
        let polys: Vec<Polynomial> = basis.iter().map(|b| b.polynomial.clone()).collect();
        println!(
            "d={d} n={n}: {} invariants, rank {}",
            basis.len(),
            rank(&polys)
        );
        for desc in &basis {
            let report = verify_so_invariance(&desc.polynomial, 10, 5);
            assert!(report.passed(), "{report}");
        }
    }
}
