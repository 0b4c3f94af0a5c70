//! Piecewise-linear paths and their truncated signatures.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::series::TensorSeries;
use crate::word::Alphabet;

/// Linear interpolation through an ordered list of points in `R^d`.
///
/// When the path is time-augmented, coordinate 0 is the time channel and
/// maps to letter `0`; otherwise coordinate `k` maps to letter `k + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePath {
    points: Vec<Vec<f64>>,
    dim: usize,
    time: bool,
}

impl PiecewisePath {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidArgument("path needs at least one point".into()))?;
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.len(),
            });
        }
        Ok(Self {
            points,
            dim,
            time: false,
        })
    }

    /// A path whose coordinate 0 is already a time channel.
    pub fn new_time_augmented(points: Vec<Vec<f64>>) -> Result<Self> {
        let mut p = Self::new(points)?;
        if p.dim == 0 {
            return Err(Error::InvalidArgument(
                "time-augmented path needs a time coordinate".into(),
            ));
        }
        p.time = true;
        Ok(p)
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    /// Number of coordinates per point, including time if present.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_time_augmented(&self) -> bool {
        self.time
    }

    pub fn alphabet(&self) -> Alphabet {
        if self.time {
            Alphabet::with_time(self.dim - 1)
        } else {
            Alphabet::new(self.dim)
        }
    }

    pub fn num_segments(&self) -> usize {
        self.points.len() - 1
    }

    /// `X_T - X_0`.
    pub fn total_increment(&self) -> Vec<f64> {
        let first = &self.points[0];
        let last = &self.points[self.points.len() - 1];
        last.iter().zip(first).map(|(b, a)| b - a).collect()
    }

    /// Signature truncated at `level`: left-to-right product of segment
    /// exponentials. Zero-length segments are skipped.
    pub fn signature(&self, level: usize) -> TensorSeries {
        let mut sig = TensorSeries::identity(self.alphabet(), level);
        let mut delta = vec![0.0; self.dim];
        for pair in self.points.windows(2) {
            for (d, (b, a)) in delta.iter_mut().zip(pair[1].iter().zip(&pair[0])) {
                *d = b - a;
            }
            if delta.iter().all(|&x| x == 0.0) {
                continue;
            }
            sig.extend_by_segment(&delta);
        }
        sig
    }

    /// Applies `a` to every point. On a time-augmented path the matrix acts
    /// on the spatial coordinates only.
    pub fn transform(&self, a: &SquareMatrix<f64>) -> Result<Self> {
        let spatial = self.alphabet().dim();
        if a.dim() != spatial {
            return Err(Error::DimensionMismatch {
                expected: spatial,
                got: a.dim(),
            });
        }
        let offset = usize::from(self.time);
        let points = self
            .points
            .iter()
            .map(|p| {
                let mut out = p.clone();
                let image = a.apply(&p[offset..]).expect("dimension checked above");
                out[offset..].copy_from_slice(&image);
                out
            })
            .collect();
        Ok(Self {
            points,
            dim: self.dim,
            time: self.time,
        })
    }

    /// Prepends a time channel equal to the normalized point index `i / m`
    /// (0 for a single point).
    pub fn time_augment(&self) -> Result<Self> {
        let m = self.num_segments();
        let times: Vec<f64> = (0..self.points.len())
            .map(|i| if m == 0 { 0.0 } else { i as f64 / m as f64 })
            .collect();
        self.time_augment_with(&times)
    }

    /// Prepends the given time values as coordinate 0.
    pub fn time_augment_with(&self, times: &[f64]) -> Result<Self> {
        if self.time {
            return Err(Error::InvalidArgument(
                "path is already time-augmented".into(),
            ));
        }
        if times.len() != self.points.len() {
            return Err(Error::DimensionMismatch {
                expected: self.points.len(),
                got: times.len(),
            });
        }
        let points = self
            .points
            .iter()
            .zip(times)
            .map(|(p, &t)| {
                let mut v = Vec::with_capacity(p.len() + 1);
                v.push(t);
                v.extend_from_slice(p);
                v
            })
            .collect();
        Ok(Self {
            points,
            dim: self.dim + 1,
            time: true,
        })
    }

    /// This path followed by `other`, joined by a straight segment if the
    /// endpoints differ.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim || self.time != other.time {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        Ok(Self {
            points,
            dim: self.dim,
            time: self.time,
        })
    }

    /// Points in reverse order.
    pub fn reversed(&self) -> Self {
        let mut p = self.clone();
        p.points.reverse();
        p
    }

    /// Closes the path with a straight segment back to its start.
    pub fn closed(&self) -> Self {
        let mut p = self.clone();
        p.points.push(self.points[0].clone());
        p
    }

    /// Sub-path through points `start..=end`.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        Self {
            points: self.points[start..=end].to_vec(),
            dim: self.dim,
            time: self.time,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::word::Word;

    fn path(points: &[&[f64]]) -> PiecewisePath {
        PiecewisePath::new(points.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_point_has_identity_signature() {
        let p = path(&[&[0.3, 0.7]]);
        assert_eq!(p.signature(4), TensorSeries::identity(Alphabet::new(2), 4));
    }

    #[test]
    fn triangle_area_pairing() {
        let p = path(&[&[0.0, 0.0], &[1.0, 0.0], &[1.0, 1.0]]);
        let area = Polynomial::parse("+1*[1,2] -1*[2,1]", Alphabet::new(2)).unwrap();
        assert!((p.signature(2).pair(&area).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn straight_segment_iterated_integral() {
        let p = path(&[&[0.0, 0.0], &[1.0, 1.0]]);
        let s = p.signature(2);
        assert_eq!(s.coefficient(&Word::from([1, 2])), 0.5);
    }

    #[test]
    fn moment_curve_area_converges() {
        let k = 1000;
        let pts: Vec<Vec<f64>> = (0..k)
            .map(|i| {
                let t = i as f64 / (k - 1) as f64;
                vec![t, t * t]
            })
            .collect();
        let p = PiecewisePath::new(pts).unwrap();
        let area = Polynomial::parse("+1*[1,2] -1*[2,1]", Alphabet::new(2)).unwrap();
        let v = p.signature(2).pair(&area).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-4, "{v}");
    }

    #[test]
    fn level_one_is_increment() {
        let p = path(&[&[1.0, 2.0, 3.0], &[0.5, 2.5, 3.0], &[4.0, 0.0, -1.0]]);
        let s = p.signature(3);
        let inc = p.total_increment();
        for (k, d) in inc.iter().enumerate() {
            assert!((s.coefficient(&Word::from([k as u8 + 1])) - d).abs() < 1e-14);
        }
        assert_eq!(s.coefficient(&Word::empty()), 1.0);
    }

    #[test]
    fn duplicate_points_are_harmless() {
        let a = path(&[&[0.0, 0.0], &[1.0, 2.0], &[1.0, 2.0], &[3.0, -1.0]]);
        let b = path(&[&[0.0, 0.0], &[1.0, 2.0], &[3.0, -1.0]]);
        assert!(a.signature(4).max_abs_diff(&b.signature(4)) < 1e-15);
    }

    #[test]
    fn transform_examples() {
        let p = path(&[&[0.0, 0.0], &[1.0, 0.0]]);
        assert_eq!(p.transform(&SquareMatrix::identity(2)).unwrap(), p);
        let rot = p
            .transform(&SquareMatrix::rotation_2d(std::f64::consts::FRAC_PI_2))
            .unwrap();
        assert!((rot.points()[1][0]).abs() < 1e-15);
        assert!((rot.points()[1][1] - 1.0).abs() < 1e-15);
        let q = path(&[&[1.0, 5.0], &[-2.0, 3.0]]);
        let d = q
            .transform(&SquareMatrix::diagonal(vec![2.0, 1.0]))
            .unwrap();
        assert_eq!(d.points(), &[vec![2.0, 5.0], vec![-4.0, 3.0]]);
        assert!(q.transform(&SquareMatrix::identity(3)).is_err());
    }

    #[test]
    fn time_augmentation_examples() {
        let p = path(&[&[1.0, 1.0], &[2.0, 0.0], &[0.0, 0.0]]);
        let t = p.time_augment().unwrap();
        assert_eq!(t.dim(), 3);
        assert_eq!(t.alphabet(), Alphabet::with_time(2));
        let times: Vec<f64> = t.points().iter().map(|x| x[0]).collect();
        assert_eq!(times, vec![0.0, 0.5, 1.0]);

        let single = path(&[&[4.0, 2.0]]).time_augment().unwrap();
        assert_eq!(single.points(), &[vec![0.0, 4.0, 2.0]]);
        assert!(t.time_augment().is_err());
    }

    #[test]
    fn transform_on_augmented_path_keeps_time() {
        let p = path(&[&[1.0, 1.0], &[2.0, 0.0]]).time_augment().unwrap();
        let q = p
            .transform(&SquareMatrix::diagonal(vec![3.0, -1.0]))
            .unwrap();
        assert_eq!(q.points(), &[vec![0.0, 3.0, -1.0], vec![1.0, 6.0, 0.0]]);
    }

    #[test]
    fn mixed_dimensions_rejected() {
        assert!(PiecewisePath::new(vec![vec![0.0], vec![0.0, 1.0]]).is_err());
        assert!(PiecewisePath::new(vec![]).is_err());
    }
}
