use std::fmt;

use serde::Serialize;

use crate::path::PiecewisePath;
use crate::poly::Polynomial;

/// Default relative tolerance for numeric pairing checks.
pub(crate) const PAIRING_TOL: f64 = 1e-9;

/// Outcome of an invariance check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    /// Numeric (path, transform) trials run.
    pub trials: usize,
    /// Exact polynomial-level checks run.
    pub exact_checks: usize,
    /// Worst relative pairing error seen.
    pub max_rel_error: f64,
    /// Description of the first failing case.
    pub witness: Option<String>,
}

impl VerifyReport {
    pub(crate) fn new() -> Self {
        Self {
            trials: 0,
            exact_checks: 0,
            max_rel_error: 0.0,
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub(crate) fn fail(&mut self, witness: String) {
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
    }

    /// Records one numeric comparison `lhs == rhs`.
    pub(crate) fn record(&mut self, lhs: f64, rhs: f64, context: impl FnOnce() -> String) {
        self.trials += 1;
        let err = rel_error(lhs, rhs);
        self.max_rel_error = self.max_rel_error.max(err);
        if err.is_nan() || err > PAIRING_TOL {
            self.fail(format!(
                "{}: lhs={lhs:e} rhs={rhs:e} rel={err:e}",
                context()
            ));
        }
    }

    /// Records one exact comparison.
    pub(crate) fn record_exact(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.exact_checks += 1;
        if !ok {
            self.fail(context());
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(
                f,
                "PASS ({} numeric trials, {} exact checks, max rel error {:.3e})",
                self.trials, self.exact_checks, self.max_rel_error
            ),
            Some(w) => write!(f, "FAIL: {w}"),
        }
    }
}

/// `|a - b| / max(1, |a|, |b|)`.
pub fn rel_error(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

/// Signature level needed to pair against `p`.
pub(crate) fn pairing_level(p: &Polynomial) -> usize {
    p.degree().max(1)
}

pub(crate) fn pair_path(path: &PiecewisePath, p: &Polynomial) -> f64 {
    path.signature(pairing_level(p))
        .pair(p)
        .expect("path and polynomial share an alphabet")
}

pub(crate) fn describe_path(path: &PiecewisePath) -> String {
    let pts: Vec<String> = path
        .points()
        .iter()
        .map(|p| {
            let xs: Vec<String> = p.iter().map(|x| format!("{x:.4}")).collect();
            format!("({})", xs.join(","))
        })
        .collect();
    pts.join(" ")
}

/// Random walk matching the alphabet of `phi`, time-augmented when `phi`
/// uses the time letter.
pub(crate) fn trial_path<R: rand::Rng + ?Sized>(rng: &mut R, phi: &Polynomial) -> PiecewisePath {
    let alphabet = phi.alphabet();
    let path = crate::random::random_path(rng, alphabet.dim(), 6);
    if alphabet.has_time() {
        path.time_augment().expect("fresh path has no time channel")
    } else {
        path
    }
}
