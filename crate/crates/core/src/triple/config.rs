//! Fixed structural data of the triple: KO-dimension and the indefinite
//! signature governing the fundamental-symmetry signs.

/// KO-dimension, metric signature, and the resulting commutation signs for
/// a fundamental symmetry. With an anti-Riemannian signature (0, q) the
/// symmetry must commute with both the real structure and the grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleConfig {
    pub ko_dimension: u8,
    /// (number of time-like directions, number of space-like directions).
    pub signature: (u8, u8),
    /// Sign in `D J = epsilon J D` for KO-dimension 6.
    pub epsilon_dj: i8,
}

impl Default for TripleConfig {
    fn default() -> Self {
        TripleConfig {
            ko_dimension: 6,
            signature: (0, 2),
            epsilon_dj: 1,
        }
    }
}

impl TripleConfig {
    /// Sign in `beta J = sign J beta`: +1 when the time-like count is even.
    pub fn beta_j_sign(&self) -> i8 {
        if self.signature.0 % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign in `beta gamma = sign gamma beta`: +1 when the time-like count
    /// is even.
    pub fn beta_grading_sign(&self) -> i8 {
        if self.signature.0 % 2 == 0 {
            1
        } else {
            -1
        }
    }
}
