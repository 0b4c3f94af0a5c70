//! Invariant features of multidimensional time series.
//!
//! A piecewise-linear path is summarized by its truncated signature, the
//! collection of its iterated integrals indexed by words. Linear functionals
//! on the signature are polynomials in non-commuting letters; this crate
//! builds explicit linear bases of those polynomials that are invariant (or
//! equivariant with a determinant factor) under the general linear group,
//! rotations, and coordinate permutations, optionally with a time channel
//! fixed by the group.
//!
//! ```
//! use siginv::{gl_basis, PiecewisePath};
//!
//! let area = &gl_basis(2, 1)[0].polynomial;
//! let triangle = PiecewisePath::new(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0]]).unwrap();
//! let value = triangle.signature(2).pair(area).unwrap();
//! assert!((value - 1.0).abs() < 1e-12);
//! ```

pub mod cli;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod linalg;
pub mod matrix;
pub mod path;
pub mod poly;
pub mod random;
pub mod series;
pub mod tableau;
pub mod word;

/// Exact rational scalars used for polynomial coefficients.
pub type Rational = num_rational::BigRational;

pub use error::{Error, Result};
pub use invariants::{
    augmented_basis, gl_basis, perm_basis, so_basis, verify, BaseFamily, Generator, Group,
    InvariantDescriptor, VerifyReport,
};
pub use matrix::SquareMatrix;
pub use path::PiecewisePath;
pub use poly::Polynomial;
pub use series::TensorSeries;
pub use word::{Alphabet, Word};

/// Signature truncation used when none is requested: 6 for `d <= 3`, 4
/// otherwise.
pub fn default_level(dim: usize) -> usize {
    if dim <= 3 {
        6
    } else {
        4
    }
}
