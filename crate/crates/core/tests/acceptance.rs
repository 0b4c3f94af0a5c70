// Acceptance criteria 1-9. Runs without the libtest harness so that every
// criterion prints exactly one PASS/FAIL line; exits non-zero on failure.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use siginv::geometry::{
    check_integral_invariant_span, check_pfaffian, check_recursion, closing_invariance,
    integral_moment, inv_d, lag_one_correlation_identity, lemniscate_path, moment_curve,
    moment_curve_volume, signed_volume, signed_volume_determinant_sum, triangulation_count,
    triangulation_indices, Orientation, TriangulationIndex,
};
use siginv::invariants::{
    augmented_basis, gl_basis, perm_basis, rel_error, so2_basis, so_basis, verify_gl0_invariance,
    verify_gl_invariance, verify_perm_invariance, verify_so_invariance, BaseFamily,
};
use siginv::random::{random_closed_path, random_path, random_polynomial};
use siginv::tableau::enumerate_standard;
use siginv::{Alphabet, Polynomial, Rational, SquareMatrix};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn reference_bases() -> BTreeMap<String, Vec<String>> {
    let text = include_str!("fixtures/reference_bases.txt");
    let mut out: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut current = None;
    for line in text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            current = Some(name.to_string());
            out.entry(name.to_string()).or_default();
        } else {
            out.get_mut(current.as_ref().expect("header first"))
                .unwrap()
                .push(line.to_string());
        }
    }
    out
}

fn sorted(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
    v.sort_by_key(|p| p.to_string());
    v
}

fn criterion_1() -> Outcome {
    let refs = reference_bases();
    let mut compared = 0;
    for (name, lines) in &refs {
        let parts: Vec<&str> = name.split(' ').collect();
        let (group, d, k): (&str, usize, usize) = (
            parts[0],
            parts[1].parse().unwrap(),
            parts[2].parse().unwrap(),
        );
        let expected: Vec<Polynomial> = lines
            .iter()
            .map(|l| Polynomial::parse(l, Alphabet::new(d)).unwrap())
            .collect();
        let ours: Vec<Polynomial> = match group {
            "gl" => gl_basis(d, k),
            "so" => so2_basis(k),
            "perm" => perm_basis(d, k),
            _ => unreachable!(),
        }
        .into_iter()
        .map(|x| x.polynomial)
        .collect();
        ensure(ours.len() == expected.len(), || {
            format!(
                "{name}: {} elements, expected {}",
                ours.len(),
                expected.len()
            )
        })?;
        let (a, b) = (sorted(ours), sorted(expected));
        for (x, y) in a.iter().zip(&b) {
            ensure(x == y, || format!("{name}: {x} not in the reference list"))?;
        }
        compared += a.len();
    }
    Ok(format!(
        "{} families, {compared} polynomials identical",
        refs.len()
    ))
}

fn hook_length_count(d: usize, w: usize) -> u128 {
    let cells: u128 = (1..=(d * w) as u128).product();
    let hooks: u128 = (0..d)
        .flat_map(|i| (0..w).map(move |j| ((w - j - 1) + (d - i - 1) + 1) as u128))
        .product();
    cells / hooks
}

fn stirling2(n: usize, k: usize) -> u64 {
    let mut s = vec![vec![0u64; k + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for j in 1..=k.min(i) {
            s[i][j] = j as u64 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    s[n][k]
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for d in 1..=12 {
        for w in 1..=12 / d {
            let n = enumerate_standard(d, w).len() as u128;
            ensure(n == hook_length_count(d, w), || {
                format!(
                    "d={d} w={w}: {n} tableaux, hook length gives {}",
                    hook_length_count(d, w)
                )
            })?;
            if d * w <= 8 && d <= 4 {
                ensure(gl_basis(d, w).len() as u128 == n, || {
                    format!("gl_basis({d},{w}) size")
                })?;
            }
            checked += 1;
        }
    }
    for n in (0..=8).step_by(2) {
        let got = so2_basis(n).len() as u64;
        ensure(got == binomial(n as u64, n as u64 / 2), || {
            format!("so2 level {n}: {got}")
        })?;
        checked += 1;
    }
    for d in 1..=4 {
        for n in 1..=8 {
            let expected: u64 = (1..=d).map(|k| stirling2(n, k)).sum();
            let got = perm_basis(d, n).len() as u64;
            ensure(got == expected, || {
                format!("perm d={d} n={n}: {got}, expected {expected}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (family, size) pairs match"))
}

fn criterion_3() -> Outcome {
    let trials = 100;
    let mut worst: f64 = 0.0;
    let mut runs = 0;
    let mut check = |r: siginv::VerifyReport, what: &str| -> Result<(), String> {
        worst = worst.max(r.max_rel_error);
        runs += r.trials;
        ensure(r.passed() && r.trials == trials, || format!("{what}: {r}"))
    };
    for (d, w) in [(2, 1), (2, 2), (3, 1)] {
        for desc in gl_basis(d, w) {
            check(
                verify_gl_invariance(&desc.polynomial, w, trials, 31),
                &format!("GL d={d} w={w}"),
            )?;
        }
    }
    for (d, n) in [(2, 4), (3, 3), (3, 4)] {
        for desc in so_basis(d, n) {
            check(
                verify_so_invariance(&desc.polynomial, trials, 32),
                &format!("SO d={d} n={n}"),
            )?;
        }
    }
    for desc in perm_basis(3, 3) {
        check(
            verify_perm_invariance(&desc.polynomial, trials, 33),
            "perm d=3 n=3",
        )?;
    }
    for desc in augmented_basis(BaseFamily::Gl { weight: 1 }, 2, 3) {
        check(
            verify_gl0_invariance(&desc.polynomial, 1, trials, 34),
            "GL0 d=2 w=1 m=3",
        )?;
    }
    Ok(format!(
        "{runs} numeric trials, max relative error {worst:.1e}"
    ))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let d = rng.gen_range(1..=3);
        let alphabet = Alphabet::new(d);
        let p = random_polynomial(&mut rng, alphabet, 2, 4);
        let q = random_polynomial(&mut rng, alphabet, 2, 4);
        let points = rng.gen_range(2..8);
        let x = random_path(&mut rng, d, points);
        let sig = x.signature(4);
        let lhs = sig.pair(&p).unwrap() * sig.pair(&q).unwrap();
        let rhs = sig.pair(&p.shuffle_product(&q).unwrap()).unwrap();
        worst = worst.max(rel_error(lhs, rhs));
        ensure(rel_error(lhs, rhs) <= 1e-10, || {
            format!("shuffle instance {i}: {lhs} vs {rhs}")
        })?;

        let k = rng.gen_range(1..=x.num_segments());
        let chen = x
            .slice(0, k)
            .signature(4)
            .chen_concat(&x.slice(k, x.num_segments()).signature(4))
            .unwrap();
        for ((w, a), (_, b)) in sig.terms().zip(chen.terms()) {
            worst = worst.max(rel_error(a, b));
            ensure(rel_error(a, b) <= 1e-10, || {
                format!("Chen instance {i}, word {w}: {a} vs {b}")
            })?;
        }
    }
    Ok(format!(
        "100 shuffle and 100 Chen instances, max relative error {worst:.1e}"
    ))
}

fn idx(v: &[&[usize]]) -> Vec<TriangulationIndex> {
    v.iter().map(|i| TriangulationIndex(i.to_vec())).collect()
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst: f64 = 0.0;
    for d in 2..=4usize {
        let fact: f64 = (1..=d).map(|k| k as f64).product();
        for t in 0..50 {
            let n = rng.gen_range(d + 1..=d + 7);
            let x = random_path(&mut rng, d, n);
            let det = signed_volume_determinant_sum(x.points()).unwrap();
            let pair = fact * signed_volume(&x).unwrap();
            worst = worst.max(rel_error(det, pair));
            ensure(rel_error(det, pair) <= 1e-9, || {
                format!("d={d} trial {t}: {det} vs {pair}")
            })?;
        }
    }
    for d in 1..=8 {
        for n in d + 1..=d + 10 {
            let got = triangulation_indices(d, n).unwrap().len();
            ensure(got == triangulation_count(d, n), || {
                format!("count d={d} n={n}: {got}")
            })?;
        }
    }
    let lists = [
        (2, 5, idx(&[&[0, 1, 2], &[0, 2, 3], &[0, 3, 4]])),
        (
            4,
            7,
            idx(&[
                &[0, 1, 2, 3, 4],
                &[0, 1, 2, 4, 5],
                &[0, 1, 2, 5, 6],
                &[0, 2, 3, 4, 5],
                &[0, 2, 3, 5, 6],
                &[0, 3, 4, 5, 6],
            ]),
        ),
        (
            5,
            8,
            idx(&[
                &[0, 1, 2, 3, 4, 7],
                &[0, 1, 2, 4, 5, 7],
                &[0, 1, 2, 5, 6, 7],
                &[0, 2, 3, 4, 5, 7],
                &[0, 2, 3, 5, 6, 7],
                &[0, 3, 4, 5, 6, 7],
            ]),
        ),
    ];
    for (d, n, expected) in lists {
        ensure(triangulation_indices(d, n).unwrap() == expected, || {
            format!("list d={d} n={n}")
        })?;
    }
    Ok(format!(
        "150 polylines, max relative error {worst:.1e}; counts and lists exact"
    ))
}

fn criterion_6() -> Outcome {
    let mut parts = Vec::new();
    for (d, target) in [(2, 1.0 / 6.0), (3, 1.0 / 180.0)] {
        let limit = moment_curve_volume(d);
        ensure((limit - target).abs() < 1e-15, || {
            format!("product formula d={d}: {limit}")
        })?;
        let sv = signed_volume(&moment_curve(d, 10_000).unwrap()).unwrap();
        ensure((sv - target).abs() <= 1e-3, || {
            format!("d={d}: signed volume {sv}, limit {target}")
        })?;
        parts.push(format!("d={d}: {sv:.6} vs {target:.6}"));
    }
    Ok(parts.join(", "))
}

fn criterion_7() -> Outcome {
    for d in 2..=5 {
        let r = check_recursion(d).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("recursion d={d}: {r}"))?;
    }
    for d in [2, 4] {
        let r = check_pfaffian(d).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("Pfaffian d={d}: {r}"))?;
    }
    for d in 1..=5usize {
        let inv = inv_d(d);
        let fact: usize = (1..=d).product();
        ensure(inv.len() == fact, || {
            format!("Inv_{d} has {} terms", inv.len())
        })?;
        for w in inv.words() {
            let mut l = w.letters().to_vec();
            l.sort_unstable();
            ensure(l == (1..=d as u8).collect::<Vec<_>>(), || {
                format!("Inv_{d} word {w}")
            })?;
        }
        if d >= 2 {
            let mut perm: Vec<usize> = (0..d).collect();
            perm.swap(0, 1);
            let swapped = inv
                .apply_matrix(&SquareMatrix::<Rational>::permutation(&perm))
                .unwrap();
            ensure(swapped == -&inv, || format!("Inv_{d} is not antisymmetric"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in 0..50 {
        let r = closing_invariance(&random_path(&mut rng, 2, 10)).unwrap();
        ensure(r.passed(), || format!("closing trial {t}: {r}"))?;
    }
    let mut worst: f64 = 0.0;
    for t in 0..50 {
        let x = random_closed_path(&mut rng, 3, 9);
        let v = x.signature(3).pair(&inv_d(3)).unwrap();
        worst = worst.max(v.abs());
        ensure(v.abs() <= 1e-10, || format!("closed d=3 trial {t}: {v}"))?;
    }
    Ok(format!(
        "recursions d<=5, Pfaffians d=2,4, 50+50 path trials (max |closed d=3| {worst:.1e})"
    ))
}

fn criterion_8() -> Outcome {
    for level in [4, 6] {
        let r = check_integral_invariant_span(level).map_err(|e| e.to_string())?;
        ensure(r.in_span(), || {
            format!("level {level} residual {}", r.residual)
        })?;
    }
    let plus = lemniscate_path(Orientation::Plus, 100_000).unwrap();
    let minus = lemniscate_path(Orientation::Minus, 100_000).unwrap();
    let mut worst: f64 = 0.0;
    for a1 in 0..=6 {
        for a2 in 0..=6 - a1 {
            for target in 1..=2u8 {
                let p = integral_moment(&plus, &[a1, a2], target).unwrap();
                let m = integral_moment(&minus, &[a1, a2], target).unwrap();
                worst = worst.max((p - m).abs());
            }
        }
    }
    ensure(worst <= 2e-6, || format!("moments differ by {worst:e}"))?;
    let (sp, sm) = (plus.signature(4), minus.signature(4));
    let gap = sp
        .level_coefficients(4)
        .iter()
        .zip(sm.level_coefficients(4))
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    ensure(gap > 1e-3, || {
        format!("level-4 signatures agree to {gap:e}")
    })?;
    Ok(format!(
        "both functionals in span; moment gap {worst:.1e}, level-4 gap {gap:.3}"
    ))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst: f64 = 0.0;
    for t in 0..50 {
        let n = rng.gen_range(2..15);
        let r = lag_one_correlation_identity(&random_path(&mut rng, 2, n)).unwrap();
        worst = worst.max(r.max_rel_error);
        ensure(r.passed(), || format!("trial {t}: {r}"))?;
    }
    Ok(format!("50 polylines, max relative error {worst:.1e}"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("basis reproduction", criterion_1),
        ("basis counts", criterion_2),
        ("invariance suites", criterion_3),
        ("shuffle identity and Chen relation", criterion_4),
        ("signed volume oracles", criterion_5),
        ("moment-curve volume", criterion_6),
        ("exact identities", criterion_7),
        ("integral invariants and lemniscate", criterion_8),
        ("lag-one correlation", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {} [{name}]: PASS ({msg}; {secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({msg}; {secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
