//! Exact-arithmetic workbench for the finite geometry of Pati-Salam type
//! models.
//!
//! The crate builds the finite-dimensional operator model on a 32-dimensional
//! fermionic Hilbert space, computes commutants of the represented algebras,
//! solves the constraint systems cutting out Dirac-operator families, and
//! classifies the pseudo-Riemannian structures compatible with each case.
//! All arithmetic is exact (Gaussian rationals), so every reported dimension,
//! subspace identity and sign table is a theorem-grade fact rather than a
//! numerical estimate.

pub mod beta;
pub mod commutant;
pub mod constraint;
pub mod linalg;
pub mod triple;
pub mod verdict;
pub mod verify;

pub use beta::{BetaCandidate, BetaFlags, ZeroCycleSpan};
pub use commutant::{
    commutant, matches_parametric_form, CommutantResult, FormTerm, ParametricForm,
    StructureReport,
};
pub use constraint::{Constraint, ConstraintError, DiracFamily};
pub use linalg::{GaussianRational, LinalgError, Mat, Rational, SparseVec, SubspaceBasis};
pub use triple::{
    AlgebraCase, AlgebraElement, BasisIndex, CaseTag, Chirality, ModelError, Op, ParticleLabel,
    Sector, TensorIndex, TripleConfig,
};
pub use verdict::{Grading, Verdict, YukawaCoordinateSet};
pub use verify::{all_pass, run_checks, CheckReport};
