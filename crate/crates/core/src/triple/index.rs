//! Index schemes for the 32-dimensional fermionic space.
//!
//! The Hilbert space factors as C^4 (x) C^2 (x) C^4: the first factor carries
//! the row of the fermion matrix (weak-isospin and chirality), the middle one
//! the particle/antiparticle sector, the last the color column. Operators
//! live in M4 (x) M2 (x) M4 and are addressed either by the six tensor
//! indices or by flat 1-based (row, col) coordinates.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("index component {name} = {value} out of range")]
    OutOfRange { name: &'static str, value: usize },
}

/// Position of a basis vector: `k` in 1..=4, `i` in 1..=2, `r` in 1..=4.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct BasisIndex {
    pub k: u8,
    pub i: u8,
    pub r: u8,
}

impl BasisIndex {
    pub fn new(k: u8, i: u8, r: u8) -> Result<Self, IndexError> {
        check(k, 4, "k")?;
        check(i, 2, "i")?;
        check(r, 4, "r")?;
        Ok(BasisIndex { k, i, r })
    }

    /// Flat 1-based index: `((k-1)*2 + (i-1))*4 + r`.
    pub fn flat(&self) -> usize {
        ((self.k as usize - 1) * 2 + (self.i as usize - 1)) * 4 + self.r as usize
    }

    pub fn from_flat(flat: usize) -> Result<Self, IndexError> {
        if !(1..=32).contains(&flat) {
            return Err(IndexError::OutOfRange {
                name: "flat",
                value: flat,
            });
        }
        let z = flat - 1;
        let r = (z % 4) as u8 + 1;
        let ki = z / 4;
        let i = (ki % 2) as u8 + 1;
        let k = (ki / 2) as u8 + 1;
        Ok(BasisIndex { k, i, r })
    }

    /// Image under the real structure: sector swap plus exchange of the
    /// row and column factors of the fermion matrix.
    pub fn j_partner(&self) -> BasisIndex {
        BasisIndex {
            k: self.r,
            i: 3 - self.i,
            r: self.k,
        }
    }
}

/// Operator coordinate: row indices `(k, i, r)` and column indices
/// `(l, j, s)`, all 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct TensorIndex {
    pub k: u8,
    pub l: u8,
    pub i: u8,
    pub j: u8,
    pub r: u8,
    pub s: u8,
}

impl TensorIndex {
    #[allow(clippy::many_single_char_names)]
    pub fn new(k: u8, l: u8, i: u8, j: u8, r: u8, s: u8) -> Result<Self, IndexError> {
        check(k, 4, "k")?;
        check(l, 4, "l")?;
        check(i, 2, "i")?;
        check(j, 2, "j")?;
        check(r, 4, "r")?;
        check(s, 4, "s")?;
        Ok(TensorIndex { k, l, i, j, r, s })
    }

    pub fn row_index(&self) -> BasisIndex {
        BasisIndex {
            k: self.k,
            i: self.i,
            r: self.r,
        }
    }

    pub fn col_index(&self) -> BasisIndex {
        BasisIndex {
            k: self.l,
            i: self.j,
            r: self.s,
        }
    }

    /// Flat 1-based (row, col).
    pub fn flat(&self) -> (usize, usize) {
        (self.row_index().flat(), self.col_index().flat())
    }

    pub fn from_flat(row: usize, col: usize) -> Result<Self, IndexError> {
        let r = BasisIndex::from_flat(row)?;
        let c = BasisIndex::from_flat(col)?;
        Ok(TensorIndex {
            k: r.k,
            l: c.k,
            i: r.i,
            j: c.i,
            r: r.r,
            s: c.r,
        })
    }
}

fn check(v: u8, max: u8, name: &'static str) -> Result<(), IndexError> {
    if v == 0 || v > max {
        return Err(IndexError::OutOfRange {
            name,
            value: v as usize,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_map_is_a_bijection() {
        let mut seen = [false; 33];
        for k in 1..=4u8 {
            for i in 1..=2u8 {
                for r in 1..=4u8 {
                    let b = BasisIndex::new(k, i, r).unwrap();
                    let f = b.flat();
                    assert!((1..=32).contains(&f));
                    assert!(!seen[f], "collision at {f}");
                    seen[f] = true;
                    assert_eq!(BasisIndex::from_flat(f).unwrap(), b);
                }
            }
        }
        assert!(seen[1..=32].iter().all(|&s| s));
    }

    #[test]
    fn tensor_round_trip_over_all_tuples() {
        for row in 1..=32 {
            for col in 1..=32 {
                let t = TensorIndex::from_flat(row, col).unwrap();
                assert_eq!(t.flat(), (row, col));
            }
        }
    }

    #[test]
    fn first_corner_values() {
        assert_eq!(BasisIndex::new(1, 1, 1).unwrap().flat(), 1);
        assert_eq!(BasisIndex::new(1, 2, 1).unwrap().flat(), 5);
        assert_eq!(BasisIndex::new(4, 2, 4).unwrap().flat(), 32);
        let t = TensorIndex::new(1, 2, 1, 2, 3, 4).unwrap();
        assert_eq!(t.flat(), (3, 16));
    }

    #[test]
    fn j_partner_is_an_involution() {
        for f in 1..=32 {
            let b = BasisIndex::from_flat(f).unwrap();
            assert_eq!(b.j_partner().j_partner(), b);
        }
        let nu_r = BasisIndex::new(1, 1, 1).unwrap();
        assert_eq!(nu_r.j_partner(), BasisIndex::new(1, 2, 1).unwrap());
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(BasisIndex::new(5, 1, 1).is_err());
        assert!(BasisIndex::new(1, 3, 1).is_err());
        assert!(TensorIndex::new(1, 1, 1, 1, 0, 1).is_err());
        assert!(BasisIndex::from_flat(0).is_err());
        assert!(BasisIndex::from_flat(33).is_err());
    }
}
