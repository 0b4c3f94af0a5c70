// Invariants under coordinate permutations, one per set partition of the
// word positions.

use siginv::invariants::{nabla, perm_basis, verify_perm_invariance};
use siginv::Word;

fn main() {
    println!(
        "nabla(23221) = {}",
        nabla(&Word::from([2, 3, 2, 2, 1])).unwrap()
    );
    for n in 1..=3 {
        for desc in perm_basis(3, n) {
            println!("{:<28} {}", desc.generator.to_string(), desc.polynomial);
            assert!(verify_perm_invariance(&desc.polynomial, 10, 1).passed());
        }
    }
}
