//! Sparse exact row reduction.
//!
//! All subspace computations funnel through one eliminator that keeps rows
//! as sorted sparse vectors over Gaussian rationals and produces the reduced
//! row echelon form. The reduced form of a matrix is unique, so the result
//! is independent of the order in which rows are fed in; canonical-form
//! comparison of subspaces relies on exactly that.

use std::collections::BTreeMap;

use super::scalar::GaussianRational;

/// Sparse vector: strictly increasing coordinate indices, no stored zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(u32, GaussianRational)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec {
            dim,
            entries: Vec::new(),
        }
    }

    /// Builds from (index, value) pairs in any order; zeros are dropped and
    /// duplicate indices summed.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (u32, GaussianRational)>,
    ) -> Self {
        let mut map: BTreeMap<u32, GaussianRational> = BTreeMap::new();
        for (idx, val) in entries {
            assert!((idx as usize) < dim, "coordinate out of range");
            if val.is_zero() {
                continue;
            }
            match map.get_mut(&idx) {
                Some(v) => {
                    *v += &val;
                    if v.is_zero() {
                        map.remove(&idx);
                    }
                }
                None => {
                    map.insert(idx, val);
                }
            }
        }
        SparseVec {
            dim,
            entries: map.into_iter().collect(),
        }
    }

    pub fn from_dense(values: &[GaussianRational]) -> Self {
        SparseVec {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i as u32, v.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &GaussianRational)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, idx: u32) -> Option<&GaussianRational> {
        self.entries
            .binary_search_by_key(&idx, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    /// Leading (lowest-index) entry.
    pub fn leading(&self) -> Option<(u32, &GaussianRational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn to_dense(&self) -> Vec<GaussianRational> {
        let mut out = vec![GaussianRational::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i as usize] = v.clone();
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return SparseVec::zero(self.dim);
        }
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// Applies `f` to every value, dropping resulting zeros (used for
    /// conjugation and multiplication by i, which cannot create collisions).
    pub fn map_values(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        SparseVec {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .filter_map(|(i, v)| {
                    let w = f(v);
                    (!w.is_zero()).then_some((*i, w))
                })
                .collect(),
        }
    }

    /// `self += c * other`, merging sorted entry lists.
    pub fn add_scaled(&mut self, other: &SparseVec, c: &GaussianRational) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if c.is_zero() || other.entries.is_empty() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = self.entries.iter();
        let mut b = other.entries.iter();
        let mut na = a.next();
        let mut nb = b.next();
        loop {
            match (na, nb) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        merged.push((*ia, va.clone()));
                        na = a.next();
                    } else if ib < ia {
                        let w = vb * c;
                        if !w.is_zero() {
                            merged.push((*ib, w));
                        }
                        nb = b.next();
                    } else {
                        let w = va.clone() + &(vb * c);
                        if !w.is_zero() {
                            merged.push((*ia, w));
                        }
                        na = a.next();
                        nb = b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    merged.push((*ia, va.clone()));
                    na = a.next();
                }
                (None, Some((ib, vb))) => {
                    let w = vb * c;
                    if !w.is_zero() {
                        merged.push((*ib, w));
                    }
                    nb = b.next();
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }
}

/// Incremental exact row reducer.
///
/// `push` keeps the stored rows in echelon form (distinct pivot columns,
/// each row forward-reduced against the others); `into_rref` back-substitutes
/// to the unique fully reduced form.
pub struct Eliminator {
    dim: usize,
    rows: Vec<SparseVec>,
    pivot_of_col: BTreeMap<u32, usize>,
}

impl Eliminator {
    pub fn new(dim: usize) -> Self {
        Eliminator {
            dim,
            rows: Vec::new(),
            pivot_of_col: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current pivots; stores it if independent.
    /// Returns true when the rank grew.
    pub fn push(&mut self, mut row: SparseVec) -> bool {
        assert_eq!(row.dim, self.dim, "dimension mismatch");
        loop {
            let Some((col, lead)) = row.leading().map(|(c, v)| (c, v.clone())) else {
                return false;
            };
            match self.pivot_of_col.get(&col) {
                Some(&idx) => {
                    let pivot_row = self.rows[idx].clone();
                    row.add_scaled(&pivot_row, &-&lead);
                }
                None => {
                    let inv = lead.inv();
                    row = row.scale(&inv);
                    self.pivot_of_col.insert(col, self.rows.len());
                    self.rows.push(row);
                    return true;
                }
            }
        }
    }

    /// Reduces a copy of `row` against the current pivots without inserting.
    pub fn residual(&self, row: &SparseVec) -> SparseVec {
        let mut row = row.clone();
        loop {
            let Some((col, lead)) = row.leading().map(|(c, v)| (c, v.clone())) else {
                return row;
            };
            match self.pivot_of_col.get(&col) {
                Some(&idx) => {
                    let pivot_row = self.rows[idx].clone();
                    row.add_scaled(&pivot_row, &-&lead);
                }
                None => return row,
            }
        }
    }

    /// Unique reduced row echelon form, rows ordered by pivot column.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let Eliminator {
            rows, pivot_of_col, ..
        } = self;
        let order: Vec<usize> = pivot_of_col.values().copied().collect();
        let pivot_cols: Vec<u32> = pivot_of_col.keys().copied().collect();
        let mut sorted: Vec<SparseVec> = order.into_iter().map(|i| rows[i].clone()).collect();
        // Descending pass: once later rows are fully reduced, subtracting
        // them introduces no new pivot-column entries.
        for i in (0..sorted.len()).rev() {
            for j in (i + 1)..sorted.len() {
                let col = pivot_cols[j];
                if let Some(c) = sorted[i].get(col).cloned() {
                    let lower = sorted[j].clone();
                    sorted[i].add_scaled(&lower, &-&c);
                }
            }
        }
        sorted
    }
}

/// Canonical nullspace basis of the system whose rows are `rref` (already in
/// reduced echelon form over `dim` columns). One vector per free column,
/// then re-reduced by the caller for the canonical form.
pub fn nullspace_from_rref(rref: &[SparseVec], dim: usize) -> Vec<SparseVec> {
    let pivot_cols: Vec<u32> = rref.iter().filter_map(|r| r.leading().map(|(c, _)| c)).collect();
    let is_pivot = {
        let mut mask = vec![false; dim];
        for c in &pivot_cols {
            mask[*c as usize] = true;
        }
        mask
    };
    let mut vectors: BTreeMap<u32, Vec<(u32, GaussianRational)>> = BTreeMap::new();
    for col in 0..dim as u32 {
        if !is_pivot[col as usize] {
            vectors.insert(col, vec![(col, GaussianRational::one())]);
        }
    }
    for (row, pivot) in rref.iter().zip(pivot_cols.iter()) {
        for (col, val) in row.iter() {
            if col != *pivot {
                if let Some(v) = vectors.get_mut(&col) {
                    v.push((*pivot, -val));
                }
            }
        }
    }
    vectors
        .into_values()
        .map(|entries| SparseVec::from_entries(dim, entries))
        .collect()
}
