// The two orientations of a figure-eight share every polynomial integral
// moment, yet their signatures differ at level 4.

use siginv::geometry::{
    check_integral_invariant_span, integral_moment, lemniscate_path, Orientation,
};

fn main() {
    let plus = lemniscate_path(Orientation::Plus, 20_000).unwrap();
    let minus = lemniscate_path(Orientation::Minus, 20_000).unwrap();

    let mut worst: f64 = 0.0;
    for a1 in 0..=6 {
        for a2 in 0..=6 - a1 {
            for target in 1..=2 {
                let p = integral_moment(&plus, &[a1, a2], target).unwrap();
                let m = integral_moment(&minus, &[a1, a2], target).unwrap();
                worst = worst.max((p - m).abs());
            }
        }
    }
    println!("largest moment difference: {worst:.2e}");

    let (sp, sm) = (plus.signature(4), minus.signature(4));
    for k in 1..=4 {
        let diff = sp
            .level_coefficients(k)
            .iter()
            .zip(sm.level_coefficients(k))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!("level {k}: largest signature difference {diff:.4}");
    }

    for level in [4, 6] {
        let r = check_integral_invariant_span(level).unwrap();
        let coords: Vec<String> = r.coordinates.iter().map(|c| c.to_string()).collect();
        println!(
            "level {level} functional in GL span: {} ({})",
            r.in_span(),
            coords.join(", ")
        );
    }
}
