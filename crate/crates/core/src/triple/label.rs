//! Physical names for the 32 basis states.

use std::fmt;

use super::index::BasisIndex;

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Chirality {
    Right,
    Left,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Sector {
    Particle,
    Antiparticle,
}

/// Species of a basis state: neutrino, electron, or an up/down quark with a
/// color index in 1..=3.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Species {
    Neutrino,
    Electron,
    Up(u8),
    Down(u8),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct ParticleLabel {
    pub species: Species,
    pub chirality: Chirality,
    pub sector: Sector,
}

/// Names the basis state with the given index: row parity picks the
/// up/down family, the color column separates leptons from quarks, the row
/// half picks the chirality, and the middle slot the sector.
pub fn label(index: BasisIndex) -> ParticleLabel {
    let up_type = index.k % 2 == 1;
    let species = if index.r == 1 {
        if up_type {
            Species::Neutrino
        } else {
            Species::Electron
        }
    } else if up_type {
        Species::Up(index.r - 1)
    } else {
        Species::Down(index.r - 1)
    };
    let chirality = if index.k <= 2 {
        Chirality::Right
    } else {
        Chirality::Left
    };
    let sector = if index.i == 1 {
        Sector::Particle
    } else {
        Sector::Antiparticle
    };
    ParticleLabel {
        species,
        chirality,
        sector,
    }
}

impl fmt::Display for ParticleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.species {
            Species::Neutrino => write!(f, "nu")?,
            Species::Electron => write!(f, "e")?,
            Species::Up(c) => write!(f, "u{c}")?,
            Species::Down(c) => write!(f, "d{c}")?,
        }
        match self.chirality {
            Chirality::Right => write!(f, "_R")?,
            Chirality::Left => write!(f, "_L")?,
        }
        if self.sector == Sector::Antiparticle {
            write!(f, "*")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lbl(k: u8, i: u8, r: u8) -> String {
        label(BasisIndex::new(k, i, r).unwrap()).to_string()
    }

    #[test]
    fn corner_labels() {
        assert_eq!(lbl(1, 1, 1), "nu_R");
        assert_eq!(lbl(1, 1, 2), "u1_R");
        assert_eq!(lbl(2, 1, 1), "e_R");
        assert_eq!(lbl(2, 1, 4), "d3_R");
        assert_eq!(lbl(3, 1, 1), "nu_L");
        assert_eq!(lbl(4, 1, 3), "d2_L");
        assert_eq!(lbl(1, 2, 1), "nu_R*");
        assert_eq!(lbl(4, 2, 4), "d3_L*");
    }

    #[test]
    fn all_32_labels_distinct() {
        let mut seen = std::collections::BTreeSet::new();
        for flat in 1..=32usize {
            let idx = BasisIndex::from_flat(flat).unwrap();
            assert!(seen.insert(label(idx)), "duplicate at flat {flat}");
        }
        assert_eq!(seen.len(), 32);
    }

    #[test]
    fn conjugation_flips_sector_only_for_diagonal_states() {
        // The antilinear pairing sends a lepton-column state in row r to the
        // sector-flipped state at (r, k); species is preserved exactly on
        // the k = r diagonal.
        let idx = BasisIndex::new(2, 1, 2).unwrap();
        let partner = idx.j_partner();
        assert_eq!(partner, BasisIndex::new(2, 2, 2).unwrap());
        let a = label(idx);
        let b = label(partner);
        assert_eq!(a.species, b.species);
        assert_ne!(a.sector, b.sector);
    }
}
