// Signed volume from the weight-one invariant, compared with the sum of
// simplex determinants and with the moment-curve limit.

use siginv::geometry::{
    check_pfaffian, check_recursion, moment_curve, moment_curve_volume, signed_volume,
    signed_volume_determinant_sum, triangulation_indices,
};
use siginv::PiecewisePath;

fn main() {
    let tri = PiecewisePath::new(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0]]).unwrap();
    println!("triangle: signed area {}", signed_volume(&tri).unwrap());

    for idx in triangulation_indices(4, 7).unwrap() {
        print!("{idx} ");
    }
    println!();

    for d in 2..=3 {
        let curve = moment_curve(d, 2000).unwrap();
        let by_pairing = signed_volume(&curve).unwrap();
        let fact: f64 = (1..=d).map(|k| k as f64).product();
        let by_det = signed_volume_determinant_sum(curve.points()).unwrap() / fact;
        println!(
            "moment curve d={d}: pairing {by_pairing:.6}, determinants {by_det:.6}, limit {:.6}",
            moment_curve_volume(d)
        );
    }

    println!("recursion d=4: {}", check_recursion(4).unwrap());
    println!("Pfaffian d=4: {}", check_pfaffian(4).unwrap());
}
