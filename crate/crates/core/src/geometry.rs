//! The weight-one invariant `Inv_d` and the geometry of signed volume.

use std::f64::consts::TAU;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::invariants::gl::signed_permutations;
use crate::invariants::{gl_basis, rel_error};
use crate::linalg::Span;
use crate::matrix::SquareMatrix;
use crate::path::PiecewisePath;
use crate::poly::Polynomial;
use crate::word::{Alphabet, Word};
use crate::Rational;

/// Outcome of an identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub checks: usize,
    pub max_rel_error: f64,
    pub failure: Option<String>,
}

impl CheckReport {
    fn new() -> Self {
        Self {
            checks: 0,
            max_rel_error: 0.0,
            failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn exact(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(context());
        }
    }

    fn close(&mut self, lhs: f64, rhs: f64, tol: f64, context: impl FnOnce() -> String) {
        self.checks += 1;
        let err = rel_error(lhs, rhs);
        self.max_rel_error = self.max_rel_error.max(err);
        if (err.is_nan() || err > tol) && self.failure.is_none() {
            self.failure = Some(format!("{}: {lhs:e} vs {rhs:e}", context()));
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS ({} checks)", self.checks),
            Some(w) => write!(f, "FAIL: {w}"),
        }
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `sum_sigma sign(sigma) x_sigma(1) .. x_sigma(d)`.
pub fn inv_d(d: usize) -> Polynomial {
    let terms = signed_permutations(d)
        .into_iter()
        .map(|(perm, s)| (Word::new(perm), Rational::from_integer(s.into())));
    Polynomial::from_terms(Alphabet::new(d), terms).expect("letters lie in 1..=d")
}

/// `Inv_k` over the letters `letters` (in the given order) inside the
/// alphabet `{1..d}`.
fn inv_on(letters: &[u8], d: usize) -> Polynomial {
    let mut map = vec![0u8; letters.len() + 1];
    map[1..].copy_from_slice(letters);
    inv_d(letters.len())
        .relabel(&map, Alphabet::new(d))
        .expect("letters lie in 1..=d")
}

fn require_spatial(path: &PiecewisePath) -> Result<usize> {
    if path.is_time_augmented() {
        return Err(Error::InvalidArgument(
            "signed volume is defined for paths without a time channel".into(),
        ));
    }
    Ok(path.dim())
}

/// `<S(X), Inv_d> / d!`, the signed volume of the path.
pub fn signed_volume(path: &PiecewisePath) -> Result<f64> {
    let d = require_spatial(path)?;
    let pairing = path.signature(d).pair(&inv_d(d))?;
    Ok(pairing / factorial(d))
}

/// A vertex subsequence `i_0 < .. < i_d` contributing one simplex to the
/// determinant formula for signed volume.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TriangulationIndex(pub Vec<usize>);

impl fmt::Display for TriangulationIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", items.join(","))
    }
}

/// Index subsequences of `0..num_points`: `i_0 = 0`, and the remaining
/// indices come in adjacent pairs `(i, i + 1)`; for odd `d` the last index
/// is pinned to `num_points - 1`.
pub fn triangulation_indices(d: usize, num_points: usize) -> Result<Vec<TriangulationIndex>> {
    if d == 0 || num_points < d + 1 {
        return Err(Error::InvalidArgument(format!(
            "need at least {} points in dimension {d}",
            d + 1
        )));
    }
    let pairs = d / 2;
    // pairs are placed in 1..=hi
    let hi = if d.is_multiple_of(2) {
        num_points - 1
    } else {
        num_points - 2
    };
    let mut out = Vec::new();
    let mut cur = vec![0usize];
    place_pairs(pairs, 1, hi, &mut cur, &mut |idx| {
        let mut v = idx.to_vec();
        if d % 2 == 1 {
            v.push(num_points - 1);
        }
        out.push(TriangulationIndex(v));
    });
    Ok(out)
}

fn place_pairs(
    left: usize,
    from: usize,
    hi: usize,
    cur: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if left == 0 {
        emit(cur);
        return;
    }
    // leave room for the remaining pairs
    let mut a = from;
    while a + 2 * left - 1 <= hi {
        cur.push(a);
        cur.push(a + 1);
        place_pairs(left - 1, a + 2, hi, cur, emit);
        cur.truncate(cur.len() - 2);
        a += 1;
    }
}

/// `C(floor(d/2) + n - d - 1, n - d - 1)` with `n` the number of points.
pub fn triangulation_count(d: usize, num_points: usize) -> usize {
    let k = num_points - d - 1;
    let n = d / 2 + k;
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Sum over [`triangulation_indices`] of the bordered determinants
/// `det [[1 .. 1], [p_i0 .. p_id]]`. Equals `d!` times the signed volume of
/// the polyline through `points`.
pub fn signed_volume_determinant_sum(points: &[Vec<f64>]) -> Result<f64> {
    let d = points
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::InvalidArgument("no points".into()))?;
    let mut total = 0.0;
    for TriangulationIndex(idx) in triangulation_indices(d, points.len())? {
        let mut m = SquareMatrix::<f64>::identity(d + 1);
        for (col, &i) in idx.iter().enumerate() {
            let p = &points[i];
            if p.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: p.len(),
                });
            }
            m.set(0, col, 1.0);
            for (row, &x) in p.iter().enumerate() {
                m.set(row + 1, col, x);
            }
        }
        total += m.det();
    }
    Ok(total)
}

/// Checks `Inv_d = (-1)^r sum_j (-1)^(j+1) InsertAfter(x_j, r) Inv_{d-1}(..x_j omitted..)`
/// for every `r`, and for odd `d` also
/// `Inv_d = sum_j (-1)^(j+1) x_j shuffle Inv_{d-1}(..x_j omitted..)`.
pub fn check_recursion(d: usize) -> Result<CheckReport> {
    if d < 2 {
        return Err(Error::InvalidArgument("recursion needs d >= 2".into()));
    }
    let target = inv_d(d);
    let alphabet = Alphabet::new(d);
    let minors: Vec<(u8, Polynomial, Rational)> = (1..=d as u8)
        .map(|j| {
            let rest: Vec<u8> = (1..=d as u8).filter(|&l| l != j).collect();
            let sign = if j % 2 == 1 {
                Rational::one()
            } else {
                -Rational::one()
            };
            (j, inv_on(&rest, d), sign)
        })
        .collect();

    let mut report = CheckReport::new();
    for r in 0..d {
        let mut sum = Polynomial::zero(alphabet);
        for (j, minor, sign) in &minors {
            sum = &sum + &minor.insert_after(*j, r)?.scale(sign);
        }
        if r % 2 == 1 {
            sum = -&sum;
        }
        report.exact(sum == target, || {
            format!("insertion form fails for d={d}, r={r}")
        });
    }
    if d % 2 == 1 {
        let mut sum = Polynomial::zero(alphabet);
        for (j, minor, sign) in &minors {
            let xj = Polynomial::monomial(alphabet, Word::letter(*j), sign.clone());
            sum = &sum + &xj.shuffle_product(minor)?;
        }
        report.exact(sum == target, || format!("shuffle form fails for d={d}"));
    }
    Ok(report)
}

/// Shuffle Pfaffian of `A_ij = Inv_2(x_i, x_j)`:
/// `1/(2^(d/2) (d/2)!) sum_sigma sign(sigma) A_s1s2 shuffle .. shuffle A_s(d-1)sd`.
pub fn shuffle_pfaffian(d: usize) -> Result<Polynomial> {
    if d % 2 == 1 || d == 0 {
        return Err(Error::InvalidArgument(
            "Pfaffian needs a positive even d".into(),
        ));
    }
    let alphabet = Alphabet::new(d);
    let mut sum = Polynomial::zero(alphabet);
    for (perm, s) in signed_permutations(d) {
        let mut prod = Polynomial::one(alphabet);
        for pair in perm.chunks(2) {
            prod = prod.shuffle_product(&inv_on(pair, d))?;
        }
        sum = &sum + &prod.scale(&Rational::from_integer(s.into()));
    }
    let half = d / 2;
    let norm: u64 = (1u64 << half) * (1..=half as u64).product::<u64>();
    Ok(sum.scale(&Rational::new(1.into(), norm.into())))
}

/// Exact comparison of [`shuffle_pfaffian`] with [`inv_d`].
pub fn check_pfaffian(d: usize) -> Result<CheckReport> {
    let pf = shuffle_pfaffian(d)?;
    let mut report = CheckReport::new();
    report.exact(pf == inv_d(d), || {
        format!("Pfaffian differs from Inv_{d}: {pf}")
    });
    Ok(report)
}

/// For even `d`, closing the path with the chord back to its start leaves
/// the pairing with `Inv_d` unchanged.
pub fn closing_invariance(path: &PiecewisePath) -> Result<CheckReport> {
    let d = require_spatial(path)?;
    if d % 2 == 1 {
        return Err(Error::InvalidArgument(
            "closing invariance needs even d".into(),
        ));
    }
    let inv = inv_d(d);
    let open = path.signature(d).pair(&inv)?;
    let closed = path.closed().signature(d).pair(&inv)?;
    let mut report = CheckReport::new();
    report.close(open, closed, 1e-10, || "open vs closed pairing".into());
    Ok(report)
}

/// `sum_i a_i b_(i+1) - a_(i+1) b_i` over the start-subtracted vertex
/// sequences `a = X^1 - X^1_0`, `b = X^2 - X^2_0`: the antisymmetrized
/// lag-one cross-correlation.
pub fn lag_one_cross_correlation(path: &PiecewisePath) -> Result<f64> {
    if require_spatial(path)? != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: path.dim(),
        });
    }
    let pts = path.points();
    let (x0, y0) = (pts[0][0], pts[0][1]);
    Ok(pts
        .windows(2)
        .map(|w| {
            let (a0, b0) = (w[0][0] - x0, w[0][1] - y0);
            let (a1, b1) = (w[1][0] - x0, w[1][1] - y0);
            a0 * b1 - a1 * b0
        })
        .sum())
}

/// Compares `<S(X), 12 - 21>` with [`lag_one_cross_correlation`].
pub fn lag_one_correlation_identity(path: &PiecewisePath) -> Result<CheckReport> {
    let corr = lag_one_cross_correlation(path)?;
    let area = path.signature(2).pair(&inv_d(2))?;
    let mut report = CheckReport::new();
    report.close(area, corr, 1e-10, || {
        "area pairing vs lag-one correlation".into()
    });
    Ok(report)
}

/// `int (X^1)^a1 .. (X^d)^ad dX^target` along the path, integrated exactly
/// on each linear piece. `target` is a letter in `1..=d`.
pub fn integral_moment(path: &PiecewisePath, alpha: &[usize], target: u8) -> Result<f64> {
    let d = require_spatial(path)?;
    if alpha.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: alpha.len(),
        });
    }
    if target == 0 || target as usize > d {
        return Err(Error::LetterOutOfRange {
            letter: target,
            alphabet: Alphabet::new(d),
        });
    }
    let mut total = 0.0;
    for w in path.points().windows(2) {
        let (p, q) = (&w[0], &w[1]);
        // coefficients of prod_k (p_k + t dk)^ak as a polynomial in t
        let mut poly = vec![1.0];
        for k in 0..d {
            let dk = q[k] - p[k];
            for _ in 0..alpha[k] {
                let mut next = vec![0.0; poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i] += c * p[k];
                    next[i + 1] += c * dk;
                }
                poly = next;
            }
        }
        let integral: f64 = poly
            .iter()
            .enumerate()
            .map(|(m, c)| c / (m + 1) as f64)
            .sum();
        let t = target as usize - 1;
        total += integral * (q[t] - p[t]);
    }
    Ok(total)
}

/// Orientation of the figure-eight curve `(+-cos t, sin 2t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Plus,
    Minus,
}

/// `samples + 1` points of `(+-cos t, sin 2t)` at `t = 2 pi j / samples`.
pub fn lemniscate_path(orientation: Orientation, samples: usize) -> Result<PiecewisePath> {
    if samples < 3 {
        return Err(Error::InvalidArgument(
            "lemniscate needs at least 3 samples".into(),
        ));
    }
    let sign = match orientation {
        Orientation::Plus => 1.0,
        Orientation::Minus => -1.0,
    };
    let pts = (0..=samples)
        .map(|j| {
            let t = TAU * j as f64 / samples as f64;
            vec![sign * t.cos(), (2.0 * t).sin()]
        })
        .collect();
    PiecewisePath::new(pts)
}

/// `samples + 1` points of `t -> (t, t^2, .., t^d)` on `[0, 1]`.
pub fn moment_curve(d: usize, samples: usize) -> Result<PiecewisePath> {
    if samples == 0 {
        return Err(Error::InvalidArgument("need at least one segment".into()));
    }
    let pts = (0..=samples)
        .map(|j| {
            let t = j as f64 / samples as f64;
            (1..=d as i32).map(|k| t.powi(k)).collect()
        })
        .collect();
    PiecewisePath::new(pts)
}

/// Limit of the signed volume of the moment curve on `[0, 1]`:
/// `prod_{l=1..d} ((l-1)!)^2 / (2l-1)!`.
pub fn moment_curve_volume(d: usize) -> f64 {
    (1..=d)
        .map(|l| factorial(l - 1).powi(2) / factorial(2 * l - 1))
        .product()
}

/// GL-invariant functionals of weight 2 and 3 in `d = 2` arising from
/// products of integral moments, written as polynomials.
pub fn moment_invariant_example(level: usize) -> Result<Polynomial> {
    let alphabet = Alphabet::new(2);
    match level {
        4 => Polynomial::parse(
            "+1/3*[1,2,2,1] +1/3*[1,2,1,2] -2/3*[1,1,2,2] +1/3*[2,1,2,1] +1/3*[2,1,1,2] -2/3*[2,2,1,1]",
            alphabet,
        ),
        6 => {
            let signed = [
                (-1, "121212"), (-1, "211122"), (1, "212121"), (1, "221112"),
                (-1, "121221"), (1, "122211"), (-1, "112212"), (1, "122112"),
                (-1, "211212"), (-1, "211221"), (-1, "121122"), (1, "122121"),
                (-3, "222111"), (3, "111222"), (1, "221121"), (1, "212211"),
                (-1, "112122"), (1, "212112"), (-1, "112221"), (1, "221211"),
            ];
            Polynomial::from_int_terms(
                alphabet,
                signed.iter().map(|&(c, w)| {
                    let letters: Vec<u8> = w.bytes().map(|b| b - b'0').collect();
                    (letters, c)
                }),
            )
        }
        _ => Err(Error::InvalidArgument(format!(
            "no example functional at level {level}; use 4 or 6"
        ))),
    }
}

/// Coordinates of a functional in a GL basis, or the residual if it lies
/// outside the span.
#[derive(Debug, Clone)]
pub struct SpanReport {
    pub level: usize,
    pub coordinates: Vec<Rational>,
    pub residual: Polynomial,
}

impl SpanReport {
    pub fn in_span(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Exact membership of `phi` in the span of `gl_basis(2, level / 2)`.
pub fn gl_span_report(phi: &Polynomial) -> Result<SpanReport> {
    let level = phi.degree();
    if phi.alphabet() != Alphabet::new(2) || level % 2 == 1 || !phi.is_homogeneous_of(level) {
        return Err(Error::InvalidArgument(
            "expected a homogeneous even-level polynomial in d = 2".into(),
        ));
    }
    let mut span = Span::new(Alphabet::new(2));
    for desc in gl_basis(2, level / 2) {
        span.insert(&desc.polynomial);
    }
    let red = span.reduce(phi);
    Ok(SpanReport {
        level,
        coordinates: red.coordinates,
        residual: red.residual,
    })
}

/// [`gl_span_report`] for [`moment_invariant_example`] at level 4 or 6.
pub fn check_integral_invariant_span(level: usize) -> Result<SpanReport> {
    gl_span_report(&moment_invariant_example(level)?)
}
