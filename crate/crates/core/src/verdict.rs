//! Physics verdicts: which sign structures admit Dirac operators with
//! nonzero lepton and quark Yukawa couplings.
//!
//! A constrained Dirac family is "physical" when its projection onto the
//! lepton Yukawa coordinates and its projection onto the quark Yukawa
//! coordinates are both nonzero, so mass terms for both species can be
//! switched on simultaneously.

use std::collections::BTreeSet;

use crate::beta::{enumerate_generic, sm_eta_op, BetaCandidate};
use crate::commutant::{matches_parametric_form, presets};
use crate::constraint::{coordinate_projection, dirac_family, ConstraintError, DiracFamily};
use crate::triple::{gamma, gamma_star, CaseTag, Op, TensorIndex};

/// The two candidate gradings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Chirality grading: right-handed plus, left-handed minus.
    Gamma,
    /// Lepton-separated grading distinguishing the color singlet.
    GammaStar,
}

impl Grading {
    pub const ALL: [Grading; 2] = [Grading::Gamma, Grading::GammaStar];

    pub fn op(self) -> Op {
        match self {
            Grading::Gamma => gamma(),
            Grading::GammaStar => gamma_star(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Grading::Gamma => "gamma",
            Grading::GammaStar => "gamma-star",
        }
    }
}

/// Matrix positions carrying Yukawa couplings: right-left transitions in
/// the particle sector, split by color.
#[derive(Clone, Debug)]
pub struct YukawaCoordinateSet {
    pub lepton: BTreeSet<TensorIndex>,
    pub quark: BTreeSet<TensorIndex>,
}

/// Right-left particle-sector transitions: color-singlet slots and
/// color-triplet diagonal slots.
pub fn yukawa_coords() -> YukawaCoordinateSet {
    let mut lepton = BTreeSet::new();
    let mut quark = BTreeSet::new();
    let halves = [(1u8, 3u8), (1, 4), (2, 3), (2, 4), (3, 1), (3, 2), (4, 1), (4, 2)];
    for (k, l) in halves {
        lepton.insert(TensorIndex::new(k, l, 1, 1, 1, 1).unwrap());
        for r in 2u8..=4 {
            quark.insert(TensorIndex::new(k, l, 1, 1, r, r).unwrap());
        }
    }
    YukawaCoordinateSet { lepton, quark }
}

/// Real dimensions of the family's lepton and quark Yukawa projections.
pub fn yukawa_projection_dims(family: &DiracFamily) -> Result<(usize, usize), ConstraintError> {
    let coords = yukawa_coords();
    let lepton = coordinate_projection(family, &coords.lepton)?.dim();
    let quark = coordinate_projection(family, &coords.quark)?.dim();
    Ok((lepton, quark))
}

/// True iff both Yukawa projections are nonzero.
pub fn is_physical(family: &DiracFamily) -> Result<bool, ConstraintError> {
    let (lepton, quark) = yukawa_projection_dims(family)?;
    Ok(lepton > 0 && quark > 0)
}

/// One row of the verdict table.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub case: CaseTag,
    pub grading: Grading,
    pub beta_name: Option<String>,
    pub sign_pattern: Vec<i8>,
    /// Real dimension of the constrained Dirac family.
    pub real_dim: usize,
    /// Real dimension after additionally imposing self-adjointness.
    pub real_dim_self_adjoint: usize,
    pub lepton_dim: usize,
    pub quark_dim: usize,
    pub physical: bool,
    pub zero_cycle: bool,
    pub one_term: bool,
    pub trivial: bool,
}

/// Solves the constrained families for one sign structure under one
/// grading and assembles the verdict row.
pub fn verdict_for(grading: Grading, candidate: &BetaCandidate) -> Verdict {
    let g = grading.op();
    let family = dirac_family(Some(&g), Some(&candidate.op), false);
    let family_sa = dirac_family(Some(&g), Some(&candidate.op), true);
    let (lepton_dim, quark_dim) =
        yukawa_projection_dims(&family).expect("yukawa coordinates are nonempty");
    Verdict {
        case: candidate.case,
        grading,
        beta_name: candidate.name.clone(),
        sign_pattern: candidate.sign_pattern.clone(),
        real_dim: family.real_dim(),
        real_dim_self_adjoint: family_sa.real_dim(),
        lepton_dim,
        quark_dim,
        physical: lepton_dim > 0 && quark_dim > 0,
        zero_cycle: candidate.flags.zero_cycle,
        one_term: candidate.flags.one_term_expressible.is_some(),
        trivial: candidate.flags.trivial,
    }
}

fn gradings_for(case: CaseTag) -> &'static [Grading] {
    match case {
        CaseTag::Unreduced => &[Grading::Gamma],
        CaseTag::Reduced | CaseTag::StandardModel => &Grading::ALL,
    }
}

/// All verdict rows for one algebra case, candidates in enumeration order
/// within each grading.
pub fn verdict_table_for_case(case: CaseTag) -> Vec<Verdict> {
    let candidates = enumerate_generic(case);
    let mut rows = Vec::new();
    for grading in gradings_for(case) {
        for candidate in &candidates {
            rows.push(verdict_for(*grading, candidate));
        }
    }
    rows
}

/// The complete verdict table over all cases.
pub fn verdict_table() -> Vec<Verdict> {
    CaseTag::ALL
        .into_iter()
        .flat_map(verdict_table_for_case)
        .collect()
}

/// Outcome of one headline check.
#[derive(Clone, Debug)]
pub struct VerdictCheck {
    pub pass: bool,
    pub detail: String,
}

fn check(pass: bool, detail: String) -> VerdictCheck {
    VerdictCheck { pass, detail }
}

/// The nontrivial sign structure of the two-quaternion algebra admits no
/// Yukawa couplings at all under the chirality grading.
pub fn check_unreduced_gamma() -> VerdictCheck {
    let candidates = enumerate_generic(CaseTag::Unreduced);
    let nontrivial = candidates
        .iter()
        .find(|c| c.name.as_deref() == Some("nontrivial"))
        .expect("nontrivial candidate exists");
    let identity = candidates
        .iter()
        .find(|c| c.name.as_deref() == Some("identity"))
        .expect("identity candidate exists");
    let row = verdict_for(Grading::Gamma, nontrivial);
    let id_row = verdict_for(Grading::Gamma, identity);
    let pass = !row.physical
        && row.lepton_dim == 0
        && row.quark_dim == 0
        && id_row.physical
        && id_row.real_dim == 512;
    check(
        pass,
        format!(
            "nontrivial: dim {} lepton {} quark {}; identity: dim {} physical {}",
            row.real_dim, row.lepton_dim, row.quark_dim, id_row.real_dim, id_row.physical
        ),
    )
}

/// Under the lepton-separated grading the color-split structure leaves a
/// 320-dimensional family matching the displayed form, with both Yukawa
/// projections alive.
pub fn check_reduced_gamma_star() -> VerdictCheck {
    let candidates = enumerate_generic(CaseTag::Reduced);
    let b7 = candidates
        .iter()
        .find(|c| c.name.as_deref() == Some("b7"))
        .expect("b7 candidate exists");
    let row = verdict_for(Grading::GammaStar, b7);
    let family = dirac_family(Some(&gamma_star()), Some(&b7.op), false);
    let form_ok = matches_parametric_form(family.space(), &presets::dirac_gamma_final_form());
    let pass = row.physical && row.real_dim == 320 && form_ok && row.zero_cycle && row.one_term;
    check(
        pass,
        format!(
            "dim {} physical {} form-match {form_ok} zero-cycle {} one-term {}",
            row.real_dim, row.physical, row.zero_cycle, row.one_term
        ),
    )
}

/// The chirality grading and the lepton-separated grading cut out the
/// same constrained family for the color-split structure.
pub fn check_reduced_gamma_match() -> VerdictCheck {
    let candidates = enumerate_generic(CaseTag::Reduced);
    let b7 = candidates
        .iter()
        .find(|c| c.name.as_deref() == Some("b7"))
        .expect("b7 candidate exists");
    let with_gamma = dirac_family(Some(&gamma()), Some(&b7.op), false);
    let with_star = dirac_family(Some(&gamma_star()), Some(&b7.op), false);
    let equal = with_gamma
        .space()
        .equal(with_star.space())
        .expect("same ambient dimension");
    check(
        equal,
        format!(
            "gamma dim {} gamma-star dim {} equal {equal}",
            with_gamma.real_dim(),
            with_star.real_dim()
        ),
    )
}

/// Among the broken algebra's nontrivial sign structures exactly one is
/// both a zero-cycle and physical, it is the color-split structure, it is
/// one-term, and both gradings agree on every physicality flag.
pub fn check_standard_model() -> VerdictCheck {
    let candidates = enumerate_generic(CaseTag::StandardModel);
    let target = sm_eta_op([1, -1, 1, -1, 1, -1]);
    let mut winners = Vec::new();
    let mut gradings_agree = true;
    for candidate in &candidates {
        let row_gamma = verdict_for(Grading::Gamma, candidate);
        let row_star = verdict_for(Grading::GammaStar, candidate);
        if row_gamma.physical != row_star.physical {
            gradings_agree = false;
        }
        if !candidate.flags.trivial && candidate.flags.zero_cycle && row_gamma.physical {
            winners.push(candidate);
        }
    }
    let unique = winners.len() == 1;
    let is_target = unique && winners[0].op == target;
    let is_one_term = unique && winners[0].flags.one_term_expressible.is_some();
    let pass = unique && is_target && is_one_term && gradings_agree;
    check(
        pass,
        format!(
            "winners {} target-match {is_target} one-term {is_one_term} gradings-agree {gradings_agree}",
            winners.len()
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triple::label;

    #[test]
    fn yukawa_coordinates_pair_opposite_chiralities_in_the_particle_sector() {
        let coords = yukawa_coords();
        assert_eq!(coords.lepton.len(), 8);
        assert_eq!(coords.quark.len(), 24);
        for t in coords.lepton.iter().chain(coords.quark.iter()) {
            assert_eq!((t.i, t.j), (1, 1));
            assert_eq!(t.r, t.s);
            let row_right = t.k <= 2;
            let col_right = t.l <= 2;
            assert_ne!(row_right, col_right, "same-chirality pair {t:?}");
        }
        // Color separation matches the particle labels.
        use crate::triple::BasisIndex;
        for t in &coords.lepton {
            let l = label(BasisIndex::new(t.k, t.i, t.r).unwrap());
            assert!(matches!(
                l.species,
                crate::triple::Species::Neutrino | crate::triple::Species::Electron
            ));
        }
        for t in &coords.quark {
            let l = label(BasisIndex::new(t.k, t.i, t.r).unwrap());
            assert!(matches!(
                l.species,
                crate::triple::Species::Up(_) | crate::triple::Species::Down(_)
            ));
        }
    }

    #[test]
    fn unconstrained_family_is_physical() {
        let family = dirac_family(Some(&gamma()), None, false);
        assert!(is_physical(&family).unwrap());
    }

    #[test]
    fn unreduced_nontrivial_structure_kills_all_yukawa_couplings() {
        let report = check_unreduced_gamma();
        assert!(report.pass, "{}", report.detail);
    }

    #[test]
    fn reduced_color_split_structure_is_physical_with_the_displayed_family() {
        let report = check_reduced_gamma_star();
        assert!(report.pass, "{}", report.detail);
    }

    #[test]
    fn both_gradings_cut_the_same_reduced_family() {
        let report = check_reduced_gamma_match();
        assert!(report.pass, "{}", report.detail);
    }

    #[test]
    fn self_adjoint_subfamily_never_exceeds_the_family() {
        let candidates = enumerate_generic(CaseTag::Reduced);
        let b2 = candidates
            .iter()
            .find(|c| c.name.as_deref() == Some("b2"))
            .unwrap();
        let row = verdict_for(Grading::Gamma, b2);
        assert!(row.real_dim_self_adjoint <= row.real_dim);
        assert!(row.real_dim_self_adjoint * 2 >= row.real_dim);
    }

    #[test]
    fn sm_color_split_candidate_is_physical_under_both_gradings() {
        let candidates = enumerate_generic(CaseTag::StandardModel);
        let target = sm_eta_op([1, -1, 1, -1, 1, -1]);
        let candidate = candidates.iter().find(|c| c.op == target).unwrap();
        for grading in Grading::ALL {
            let row = verdict_for(grading, candidate);
            assert!(row.physical, "grading {:?}", grading);
            assert!(row.zero_cycle);
        }
    }

    #[test]
    fn sm_lepton_only_structure_is_not_physical() {
        // Flip only the color-triplet sign eta6 relative to the identity:
        // quark couplings die, lepton couplings survive.
        let candidates = enumerate_generic(CaseTag::StandardModel);
        let target = sm_eta_op([1, 1, 1, 1, 1, -1]);
        let candidate = candidates.iter().find(|c| c.op == target).unwrap();
        let row = verdict_for(Grading::Gamma, candidate);
        assert!(row.lepton_dim > 0);
        assert_eq!(row.quark_dim, 0);
        assert!(!row.physical);
    }
}
