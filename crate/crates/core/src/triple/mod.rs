//! The finite geometry under study: indexing of the 32-dimensional state
//! space, operators on it, the grading and real-structure operators, and
//! the three algebra cases with their representations.

pub mod algebra;
pub mod config;
pub mod index;
pub mod label;
pub mod op;

pub use algebra::{
    is_quaternion, quaternion_units, rep, sign_element, unit_element, AlgebraCase,
    AlgebraElement, BlockKind, BlockStructure, CaseTag, ModelError,
};
pub use config::TripleConfig;
pub use index::{BasisIndex, IndexError, TensorIndex};
pub use label::{label, Chirality, ParticleLabel, Sector, Species};
pub use op::{apply_j, embed, gamma, gamma_star, j_conjugate, opposite, Op, HILBERT_DIM};
