// Invariant features of a series and of its rotated copy, computed through
// the command-line front end on temporary CSV files.

use std::fs;

fn main() {
    let dir = std::env::temp_dir().join(format!("siginv-example-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let original = dir.join("walk.csv");
    let rotated = dir.join("walk_rotated.csv");

    let pts = [[0.0, 0.0], [1.0, 0.2], [1.5, 1.0], [0.7, 1.8], [-0.3, 1.1]];
    let (c, s) = (0.6_f64, 0.8_f64);
    let mut a = String::from("x,y\n");
    let mut b = String::from("x,y\n");
    for [x, y] in pts {
        a.push_str(&format!("{x},{y}\n"));
        b.push_str(&format!("{},{}\n", c * x - s * y, s * x + c * y));
    }
    fs::write(&original, a).unwrap();
    fs::write(&rotated, b).unwrap();

    let mut out = Vec::new();
    let code = siginv::cli::run(
        [
            "siginv",
            "features",
            original.to_str().unwrap(),
            rotated.to_str().unwrap(),
            "--group",
            "so",
            "--level",
            "4",
        ],
        &mut out,
        &mut std::io::stderr(),
    );
    assert_eq!(code, 0);
    let file: siginv::cli::FeatureFile = serde_json::from_slice(&out).unwrap();
    let half = file.features.len() / 2;
    for (f, g) in file.features[..half].iter().zip(&file.features[half..]) {
        println!("{:<28} {:>12.6} {:>12.6}", f.description, f.value, g.value);
        assert!((f.value - g.value).abs() < 1e-9 * (1.0 + f.value.abs()));
    }
    fs::remove_dir_all(&dir).unwrap();
}
