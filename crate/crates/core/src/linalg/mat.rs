//! Dense complex matrices over Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::GaussianRational;
use super::sparse::{nullspace_from_rref, Eliminator, SparseVec};
use super::subspace::SubspaceBasis;

/// Dense matrix, row-major. Internal indexing is 0-based.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    /// Matrix unit `e_{rc}` (0-based) of the given square size.
    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        m.set(r, c, GaussianRational::one());
        m
    }

    /// Square diagonal matrix from integer signs or values.
    pub fn diag_ints(values: &[i64]) -> Self {
        let mut m = Mat::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, GaussianRational::from_int(*v));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds from integer pairs `(re, im)`, row-major.
    pub fn from_int_rows(rows: &[&[(i64, i64)]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|&(re, im)| GaussianRational::from_parts(re, im))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(GaussianRational::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        self.conj().transpose()
    }

    pub fn commutator(&self, other: &Mat) -> Mat {
        self * other - other * self
    }

    pub fn anticommutator(&self, other: &Mat) -> Mat {
        self * other + other * self
    }

    /// Kronecker product; block `(r, c)` of the result is `a[r][c] * b`.
    pub fn kron(&self, b: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows * b.rows, self.cols * b.cols);
        for ar in 0..self.rows {
            for ac in 0..self.cols {
                let coeff = self.get(ar, ac);
                if coeff.is_zero() {
                    continue;
                }
                for br in 0..b.rows {
                    for bc in 0..b.cols {
                        let v = b.get(br, bc);
                        if v.is_zero() {
                            continue;
                        }
                        out.set(ar * b.rows + br, ac * b.cols + bc, coeff * v);
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and rank. Leftmost-pivot, fully reduced;
    /// zero rows are dropped to the bottom.
    pub fn rref(&self) -> (Mat, usize) {
        let mut elim = Eliminator::new(self.cols);
        for r in 0..self.rows {
            elim.push(SparseVec::from_dense(
                &self.data[r * self.cols..(r + 1) * self.cols],
            ));
        }
        let rank = elim.rank();
        let rref_rows = elim.into_rref();
        let mut out = Mat::zeros(self.rows, self.cols);
        for (r, row) in rref_rows.iter().enumerate() {
            for (c, v) in row.iter() {
                out.set(r, c as usize, v.clone());
            }
        }
        (out, rank)
    }

    /// Canonical basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> SubspaceBasis {
        let mut elim = Eliminator::new(self.cols);
        for r in 0..self.rows {
            elim.push(SparseVec::from_dense(
                &self.data[r * self.cols..(r + 1) * self.cols],
            ));
        }
        let rref_rows = elim.into_rref();
        SubspaceBasis::from_spanning(self.cols, nullspace_from_rref(&rref_rows, self.cols))
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, &GaussianRational)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i / self.cols, i % self.cols, v))
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }
}

impl Add for Mat {
    type Output = Mat;
    fn add(self, rhs: Mat) -> Mat {
        &self + &rhs
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        }
    }
}

impl Sub for Mat {
    type Output = Mat;
    fn sub(self, rhs: Mat) -> Mat {
        &self - &rhs
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

impl Neg for Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        -&self
    }
}

impl Mul for &Mat {
    type Output = Mat;
    /// Skips zero entries, so products of the sparse structured operators
    /// used throughout stay cheap.
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    let prod = a * b;
                    out.data[idx] += &prod;
                }
            }
        }
        out
    }
}

impl Mul for Mat {
    type Output = Mat;
    fn mul(self, rhs: Mat) -> Mat {
        &self * &rhs
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i() -> GaussianRational {
        GaussianRational::i()
    }

    fn one() -> GaussianRational {
        GaussianRational::one()
    }

    #[test]
    fn kron_of_units_places_single_entry() {
        // e12 (x) e34 in 4x4 factors has its 1 at row 0*4+2, col 1*4+3.
        let a = Mat::unit(4, 0, 1);
        let b = Mat::unit(4, 2, 3);
        let k = a.kron(&b);
        assert_eq!(k.nrows(), 16);
        for (r, c, v) in k.iter_nonzero() {
            assert_eq!((r, c), (2, 7));
            assert!(v.is_one());
        }
    }

    #[test]
    fn kron_associates_and_respects_products() {
        let a = Mat::from_int_rows(&[&[(1, 0), (2, 0)], &[(0, 1), (0, 0)]]);
        let b = Mat::from_int_rows(&[&[(0, 0), (1, 0)], &[(3, 0), (0, -1)]]);
        let c = Mat::from_int_rows(&[&[(1, 1), (0, 0)], &[(0, 0), (2, 0)]]);
        assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        // (a (x) b)(c (x) d) = ac (x) bd
        let left = a.kron(&b) * c.kron(&a);
        let right = (&a * &c).kron(&(&b * &a));
        assert_eq!(left, right);
    }

    #[test]
    fn dagger_reverses_products() {
        let a = Mat::from_int_rows(&[&[(1, 2), (0, 1)], &[(3, 0), (1, -1)]]);
        let b = Mat::from_int_rows(&[&[(0, 1), (2, 0)], &[(1, 0), (0, 0)]]);
        assert_eq!((&a * &b).dagger(), &b.dagger() * &a.dagger());
        assert_eq!(a.dagger().dagger(), a);
    }

    #[test]
    fn rref_of_rank_one_complex_matrix() {
        // [[1, i], [-i, 1]] has rank 1; canonical form [[1, i], [0, 0]].
        let m = Mat::from_rows(vec![
            vec![one(), i()],
            vec![-i(), one()],
        ]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert!(r.get(0, 0).is_one());
        assert_eq!(r.get(0, 1), &i());
        assert!(r.get(1, 0).is_zero() && r.get(1, 1).is_zero());
    }

    #[test]
    fn nullspace_of_row_with_i() {
        // [1, i] has nullspace spanned by (-i, 1).
        let m = Mat::from_rows(vec![vec![one(), i()]]);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 1);
        let v = ns.rows()[0].to_dense();
        // Canonical form scales the pivot to 1: (1, -i) after normalization
        // represents the same line as (-i, 1).
        let check = v[0].clone() + &(&i() * &v[1]);
        assert!(check.is_zero());
    }

    #[test]
    fn rank_nullity_on_random_sizes() {
        let m = Mat::from_int_rows(&[
            &[(1, 0), (2, 0), (3, 0), (4, 0)],
            &[(2, 0), (4, 0), (6, 0), (8, 0)],
            &[(0, 1), (0, 0), (1, 0), (0, 0)],
        ]);
        let (_, rank) = m.rref();
        let ns = m.nullspace();
        assert_eq!(rank + ns.dim(), m.ncols());
    }
}
