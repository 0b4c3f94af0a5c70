// GL invariants from standard rectangular tableaux, with an exact and a
// numeric check of (det A)^w equivariance.

use siginv::invariants::{gl_basis, verify_gl_invariance};
use siginv::tableau::enumerate_standard;

fn main() {
    for (d, w) in [(2, 1), (2, 2), (3, 1)] {
        let basis = gl_basis(d, w);
        println!(
            "d={d} w={w}: {} standard tableaux",
            enumerate_standard(d, w).len()
        );
        for desc in &basis {
            println!("  {}  <-  {}", desc.polynomial, desc.generator);
        }
    }
    for desc in gl_basis(2, 3) {
        let report = verify_gl_invariance(&desc.polynomial, 3, 20, 11);
        println!("{}: {report}", desc.generator);
        assert!(report.passed());
    }
}
