//! Exact linear algebra over the Gaussian rationals.

pub mod mat;
pub mod scalar;
pub mod sparse;
pub mod subspace;

pub use mat::Mat;
pub use scalar::{format_rational, GaussianRational, Rational};
pub use sparse::{Eliminator, SparseVec};
pub use subspace::{LinalgError, SubspaceBasis};
