//! Operators on the 32-dimensional space, gradings, and the real structure.

use std::ops::{Add, Mul, Neg, Sub};

use crate::linalg::{GaussianRational, Mat};

use super::index::{BasisIndex, TensorIndex};

pub const HILBERT_DIM: usize = 32;

/// Dense operator in M4 (x) M2 (x) M4, stored as its 32x32 matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Op(Mat);

impl Op {
    pub fn zero() -> Self {
        Op(Mat::zeros(HILBERT_DIM, HILBERT_DIM))
    }

    pub fn identity() -> Self {
        Op(Mat::identity(HILBERT_DIM))
    }

    pub fn from_mat(m: Mat) -> Self {
        assert!(
            m.nrows() == HILBERT_DIM && m.ncols() == HILBERT_DIM,
            "operator must be 32x32"
        );
        Op(m)
    }

    pub fn mat(&self) -> &Mat {
        &self.0
    }

    pub fn entry(&self, t: &TensorIndex) -> &GaussianRational {
        let (row, col) = t.flat();
        self.0.get(row - 1, col - 1)
    }

    pub fn set_entry(&mut self, t: &TensorIndex, v: GaussianRational) {
        let (row, col) = t.flat();
        self.0.set(row - 1, col - 1, v);
    }

    /// Entry at flat 1-based (row, col).
    pub fn entry_flat(&self, row: usize, col: usize) -> &GaussianRational {
        self.0.get(row - 1, col - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn dagger(&self) -> Op {
        Op(self.0.dagger())
    }

    pub fn scale(&self, c: &GaussianRational) -> Op {
        Op(self.0.scale(c))
    }

    pub fn commutator(&self, other: &Op) -> Op {
        Op(self.0.commutator(&other.0))
    }

    pub fn anticommutator(&self, other: &Op) -> Op {
        Op(self.0.anticommutator(&other.0))
    }

    pub fn commutes_with(&self, other: &Op) -> bool {
        self.commutator(other).is_zero()
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (TensorIndex, &GaussianRational)> {
        self.0.iter_nonzero().map(|(r, c, v)| {
            (
                TensorIndex::from_flat(r + 1, c + 1).expect("in range"),
                v,
            )
        })
    }
}

impl Add for &Op {
    type Output = Op;
    fn add(self, rhs: &Op) -> Op {
        Op(&self.0 + &rhs.0)
    }
}

impl Sub for &Op {
    type Output = Op;
    fn sub(self, rhs: &Op) -> Op {
        Op(&self.0 - &rhs.0)
    }
}

impl Mul for &Op {
    type Output = Op;
    fn mul(self, rhs: &Op) -> Op {
        Op(&self.0 * &rhs.0)
    }
}

impl Neg for &Op {
    type Output = Op;
    fn neg(self) -> Op {
        Op(-&self.0)
    }
}

/// `a (x) e_{ij} (x) b` for 4x4 blocks `a`, `b` and sector unit `e_{ij}`
/// (1-based `i`, `j`).
pub fn embed(a: &Mat, i: u8, j: u8, b: &Mat) -> Op {
    assert!(a.nrows() == 4 && a.ncols() == 4, "left block must be 4x4");
    assert!(b.nrows() == 4 && b.ncols() == 4, "right block must be 4x4");
    assert!((1..=2).contains(&i) && (1..=2).contains(&j), "sector index");
    let sector = Mat::unit(2, i as usize - 1, j as usize - 1);
    Op::from_mat(a.kron(&sector).kron(b))
}

/// Chirality grading: right-handed particles and left-handed antiparticles
/// carry +1.
pub fn gamma() -> Op {
    let d_pp = Mat::diag_ints(&[1, 1, -1, -1]);
    let d_ap = Mat::diag_ints(&[-1, -1, 1, 1]);
    &embed(&d_pp, 1, 1, &Mat::identity(4)) + &embed(&Mat::identity(4), 2, 2, &d_ap)
}

/// Alternative grading in which left-handed quarks share the parity of
/// right-handed leptons.
pub fn gamma_star() -> Op {
    let a = Mat::diag_ints(&[1, 1, -1, -1]);
    let b = Mat::diag_ints(&[1, -1, -1, -1]);
    let c = Mat::diag_ints(&[-1, 1, 1, 1]);
    let d = Mat::diag_ints(&[1, 1, -1, -1]);
    &embed(&a, 1, 1, &b) + &embed(&c, 2, 2, &d)
}

/// Applies the antilinear real structure to a coordinate vector:
/// sector swap, exchange of row and column factors, and conjugation.
pub fn apply_j(v: &[GaussianRational]) -> Vec<GaussianRational> {
    assert_eq!(v.len(), HILBERT_DIM, "vector must have 32 entries");
    let mut out = vec![GaussianRational::zero(); HILBERT_DIM];
    for flat in 1..=HILBERT_DIM {
        let b = BasisIndex::from_flat(flat).expect("in range");
        let src = b.j_partner().flat();
        out[flat - 1] = v[src - 1].conj();
    }
    out
}

/// Conjugation `x -> J x J^{-1}` by the real structure, computed entrywise:
/// the (a, b) entry of the result is the conjugate of the entry of `x` at
/// the J-partner coordinates.
pub fn j_conjugate(x: &Op) -> Op {
    let mut out = Op::zero();
    for (t, v) in x.iter_nonzero() {
        let a = t.row_index().j_partner();
        let b = t.col_index().j_partner();
        let dst = TensorIndex::from_flat(a.flat(), b.flat()).expect("in range");
        // Writing to the partner slot of each source entry realizes
        // conj(x[tau a, tau b]) without materializing J.
        out.set_entry(&dst, v.conj());
    }
    out
}

/// Opposite-side action `x -> J x* J^{-1}`.
pub fn opposite(x: &Op) -> Op {
    j_conjugate(&x.dagger())
}
