// Polynomials in non-commuting letters: shuffle and concatenation products,
// the linear action of a matrix, and time-letter insertion.

use siginv::{Alphabet, Polynomial, Rational, SquareMatrix};

fn main() {
    let a2 = Alphabet::new(2);
    let x1 = Polynomial::parse("+1*[1]", a2).unwrap();
    let x12 = Polynomial::parse("+1*[1,2]", a2).unwrap();

    println!("x1 ⧢ x1x2     = {}", x1.shuffle_product(&x12).unwrap());
    println!("x1 · x1x2     = {}", x1.concat_product(&x12).unwrap());

    let area = Polynomial::parse("+1*[1,2] -1*[2,1]", a2).unwrap();
    let q = |n: i64| Rational::from_integer(n.into());
    let a = SquareMatrix::from_rows(vec![vec![q(2), q(1)], vec![q(0), q(3)]]).unwrap();
    let moved = area.apply_matrix(&a.transpose()).unwrap();
    println!("A^T (12 - 21) = {moved}   (det A = {})", a.det());
    assert_eq!(moved, area.scale(&a.det()));

    let lifted = x12.insert_z(&[2, 1, 4]).unwrap();
    println!("Insert_(2,1,4) x1x2 = {lifted}");
    assert_eq!(lifted.remove_zero(), x12);
}
