// Truncated signatures of piecewise-linear paths, Chen's relation and the
// shuffle identity.

use siginv::{PiecewisePath, Polynomial};

fn main() {
    let x = PiecewisePath::new(vec![
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
        vec![-0.5, 2.0],
    ])
    .unwrap();
    let sig = x.signature(3);
    for k in 0..=2 {
        println!("level {k}: {:?}", sig.level_coefficients(k));
    }

    let (head, tail) = (x.slice(0, 2), x.slice(2, 3));
    let chen = head.signature(3).chen_concat(&tail.signature(3)).unwrap();
    println!("Chen discrepancy: {:.2e}", chen.max_abs_diff(&sig));
    assert!(chen.max_abs_diff(&sig) < 1e-12);

    let alphabet = x.alphabet();
    let p = Polynomial::parse("+1*[1,2]", alphabet).unwrap();
    let q = Polynomial::parse("+1*[2]", alphabet).unwrap();
    let lhs = sig.pair(&p).unwrap() * sig.pair(&q).unwrap();
    let rhs = sig.pair(&p.shuffle_product(&q).unwrap()).unwrap();
    println!("<S,12><S,2> = {lhs:.6}, <S,12 ⧢ 2> = {rhs:.6}");
    assert!((lhs - rhs).abs() < 1e-12);
}
