//! Canonical subspace bases.
//!
//! A subspace is stored as the reduced row echelon form of any spanning set,
//! which is unique, so structural equality of bases decides subspace
//! equality. Ambient dimensions never exceed 2048 here (the realified
//! operator space); bases of smaller ambient spaces appear in tests.

use thiserror::Error;

use super::scalar::GaussianRational;
use super::sparse::{nullspace_from_rref, Eliminator, SparseVec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
}

/// Canonical (RREF) basis of a linear subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceBasis {
    ambient: usize,
    rows: Vec<SparseVec>,
}

impl SubspaceBasis {
    /// Canonicalizes an arbitrary spanning set.
    pub fn from_spanning(ambient: usize, spanning: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut elim = Eliminator::new(ambient);
        for v in spanning {
            elim.push(v);
        }
        SubspaceBasis {
            ambient,
            rows: elim.into_rref(),
        }
    }

    pub fn zero_space(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full_space(ambient: usize) -> Self {
        let rows = (0..ambient as u32)
            .map(|i| SparseVec::from_entries(ambient, [(i, GaussianRational::one())]))
            .collect();
        SubspaceBasis { ambient, rows }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Subspace equality via canonical-form comparison.
    pub fn equal(&self, other: &SubspaceBasis) -> Result<bool, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(self.rows == other.rows)
    }

    /// Whether `other` is contained in `self`.
    pub fn contains(&self, other: &SubspaceBasis) -> Result<bool, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(other.rows.iter().all(|v| self.contains_vector(v)))
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        assert_eq!(v.dim(), self.ambient, "dimension mismatch");
        let mut elim = Eliminator::new(self.ambient);
        for row in &self.rows {
            elim.push(row.clone());
        }
        elim.residual(v).is_zero()
    }

    /// Basis of the annihilator `{c : v . c = 0 for all v in self}` under
    /// the standard bilinear form.
    pub fn annihilator(&self) -> SubspaceBasis {
        let mut elim = Eliminator::new(self.ambient);
        for row in &self.rows {
            elim.push(row.clone());
        }
        let rref = elim.into_rref();
        SubspaceBasis::from_spanning(self.ambient, nullspace_from_rref(&rref, self.ambient))
    }

    /// Intersection, computed as the joint nullspace of both annihilators.
    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut elim = Eliminator::new(self.ambient);
        for row in self.annihilator().rows {
            elim.push(row);
        }
        for row in other.annihilator().rows {
            elim.push(row);
        }
        let rref = elim.into_rref();
        Ok(SubspaceBasis::from_spanning(
            self.ambient,
            nullspace_from_rref(&rref, self.ambient),
        ))
    }

    /// Sum of subspaces (span of the union).
    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(SubspaceBasis::from_spanning(
            self.ambient,
            self.rows.iter().chain(other.rows.iter()).cloned(),
        ))
    }
}
