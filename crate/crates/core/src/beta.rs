//! Classification of pseudo-Riemannian sign structures.
//!
//! A sign structure is a self-adjoint involution in the commutant of the
//! represented algebra that commutes with the real structure and the
//! grading. This module enumerates all of them exactly (up to a global
//! sign), decides which arise as a single product `rep(a) · opposite(rep(a))`
//! of a sign-scaled algebra element, and decides membership in the span of
//! all two-sided products — the "zero-cycle" property that makes a sign
//! structure geometrically admissible.

use crate::commutant::commutant;
use crate::constraint::{realify, solve, Constraint, REAL_DIM};
use crate::linalg::{GaussianRational, Mat, SubspaceBasis};
use crate::triple::{
    gamma, gamma_star, j_conjugate, opposite, rep, sign_element, AlgebraCase, CaseTag, ModelError,
    Op,
};

/// Properties of one sign-structure candidate, checked exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaFlags {
    pub involution: bool,
    pub self_adjoint: bool,
    pub commutes_with_j: bool,
    pub commutes_with_gamma: bool,
    pub commutes_with_gamma_star: bool,
    /// Lies in the span of two-sided products `rep(a) · opposite(rep(b))`.
    pub zero_cycle: bool,
    /// Witness signs making `rep(a) · opposite(rep(a))` equal the operator.
    pub one_term_expressible: Option<Vec<i8>>,
    /// Equal to plus or minus the identity.
    pub trivial: bool,
}

/// One enumerated sign structure.
#[derive(Clone, Debug)]
pub struct BetaCandidate {
    pub case: CaseTag,
    /// Defining signs: per-block signs for generic candidates, algebra
    /// signs for one-term candidates.
    pub sign_pattern: Vec<i8>,
    pub op: Op,
    pub flags: BetaFlags,
    /// Stable name when the candidate is one of the cataloged structures.
    pub name: Option<String>,
}

/// Real span of all products `rep(a) · opposite(rep(b))`.
#[derive(Clone, Debug)]
pub struct ZeroCycleSpan {
    pub case: CaseTag,
    space: SubspaceBasis,
}

impl ZeroCycleSpan {
    pub fn space(&self) -> &SubspaceBasis {
        &self.space
    }

    pub fn contains(&self, op: &Op) -> bool {
        self.space.contains_vector(&realify(op))
    }
}

/// Spans the two-sided products over all pairs of real generators.
pub fn zero_cycle_span(case: CaseTag) -> ZeroCycleSpan {
    let data = AlgebraCase::new(case);
    let gens = &data.real_generators;
    let opposites: Vec<Op> = gens.iter().map(opposite).collect();
    let mut vectors = Vec::with_capacity(gens.len() * gens.len());
    for a in gens {
        for b in &opposites {
            vectors.push(realify(&(a * b)));
        }
    }
    ZeroCycleSpan {
        case,
        space: SubspaceBasis::from_spanning(REAL_DIM, vectors),
    }
}

/// The product `rep(a) · opposite(rep(a))` for a sign-scaled block-identity
/// element `a`.
pub fn one_term_beta(case: CaseTag, signs: &[i8]) -> Result<Op, ModelError> {
    let a = rep(case, &sign_element(case, signs)?)?;
    Ok(&a * &opposite(&a))
}

fn neg(op: &Op) -> Op {
    op.scale(&GaussianRational::from_int(-1))
}

/// Sign-normalizes so the (1,1) diagonal entry is positive.
fn canonicalize(op: Op) -> Op {
    use num::Signed;
    if op.entry_flat(1, 1).re().is_negative() {
        neg(&op)
    } else {
        op
    }
}

fn arity(case: CaseTag) -> usize {
    match case {
        CaseTag::Unreduced | CaseTag::StandardModel => 3,
        CaseTag::Reduced => 4,
    }
}

fn sign_patterns(len: usize) -> impl Iterator<Item = Vec<i8>> {
    (0..1usize << len).map(move |code| {
        (0..len)
            .map(|j| if code >> (len - 1 - j) & 1 == 0 { 1 } else { -1 })
            .collect()
    })
}

/// Finds signs with `one_term_beta(case, signs) == op`, if any exist.
pub fn one_term_expressible(case: CaseTag, op: &Op) -> Option<Vec<i8>> {
    sign_patterns(arity(case))
        .find(|signs| one_term_beta(case, signs).expect("full sign pattern") == *op)
}

fn flags_for(case: CaseTag, op: &Op, cycles: &ZeroCycleSpan) -> BetaFlags {
    let id = Op::identity();
    BetaFlags {
        involution: &(op * op) == &id,
        self_adjoint: op.dagger() == *op,
        commutes_with_j: j_conjugate(op) == *op,
        commutes_with_gamma: op.commutes_with(&gamma()),
        commutes_with_gamma_star: op.commutes_with(&gamma_star()),
        zero_cycle: cycles.contains(op),
        one_term_expressible: one_term_expressible(case, op),
        trivial: *op == id || *op == neg(&id),
    }
}

/// Explicit block-sign structures for the two-quaternion algebra.
pub fn unreduced_eta_op(eta: [i8; 2]) -> Op {
    let first = Mat::diag_ints(&[eta[0].into(), eta[0].into(), eta[1].into(), eta[1].into()]);
    &crate::triple::embed(&first, 1, 1, &Mat::identity(4))
        + &crate::triple::embed(&Mat::identity(4), 2, 2, &first)
}

/// Explicit block-sign structures for the reduced algebra, in the
/// four-sign convention (first quaternion color-singlet, first quaternion
/// color-triplet, second quaternion color-singlet, second quaternion
/// color-triplet).
pub fn reduced_eta_op(eta: [i8; 4]) -> Op {
    let e = |i: usize| i64::from(eta[i]);
    let embed = crate::triple::embed;
    &(&embed(
        &Mat::diag_ints(&[1, 1, 0, 0]),
        1,
        1,
        &Mat::diag_ints(&[e(0), e(1), e(1), e(1)]),
    ) + &embed(
        &Mat::diag_ints(&[0, 0, 1, 1]),
        1,
        1,
        &Mat::diag_ints(&[e(2), e(3), e(3), e(3)]),
    )) + &(&embed(
        &Mat::diag_ints(&[1, 0, 0, 0]),
        2,
        2,
        &Mat::diag_ints(&[e(0), e(0), e(2), e(2)]),
    ) + &embed(
        &Mat::diag_ints(&[0, 1, 1, 1]),
        2,
        2,
        &Mat::diag_ints(&[e(1), e(1), e(3), e(3)]),
    ))
}

/// Explicit block-sign structures for the broken algebra, six signs in
/// display order.
pub fn sm_eta_op(eta: [i8; 6]) -> Op {
    let e = |i: usize| i64::from(eta[i]);
    let embed = crate::triple::embed;
    let e11 = &(&embed(
        &Mat::diag_ints(&[1, 0, 0, 0]),
        1,
        1,
        &Mat::diag_ints(&[e(0), e(1), e(1), e(1)]),
    ) + &embed(
        &Mat::diag_ints(&[0, 1, 0, 0]),
        1,
        1,
        &Mat::diag_ints(&[e(2), e(3), e(3), e(3)]),
    )) + &embed(
        &Mat::diag_ints(&[0, 0, 1, 1]),
        1,
        1,
        &Mat::diag_ints(&[e(4), e(5), e(5), e(5)]),
    );
    let e22 = &embed(
        &Mat::diag_ints(&[1, 0, 0, 0]),
        2,
        2,
        &Mat::diag_ints(&[e(0), e(2), e(4), e(4)]),
    ) + &embed(
        &Mat::diag_ints(&[0, 1, 1, 1]),
        2,
        2,
        &Mat::diag_ints(&[e(1), e(3), e(5), e(5)]),
    );
    &e11 + &e22
}

/// The cataloged reduced structures, name and sign pattern each.
pub const REDUCED_CATALOG: [(&str, [i8; 4]); 8] = [
    ("b1", [1, 1, 1, 1]),
    ("b2", [1, 1, 1, -1]),
    ("b3", [1, 1, -1, -1]),
    ("b4", [1, 1, -1, 1]),
    ("b5", [1, -1, 1, 1]),
    ("b6", [1, -1, -1, 1]),
    ("b7", [1, -1, 1, -1]),
    ("b8", [1, -1, -1, -1]),
];

fn name_candidate(case: CaseTag, op: &Op) -> Option<String> {
    match case {
        CaseTag::Unreduced => {
            if *op == unreduced_eta_op([1, 1]) {
                Some("identity".to_owned())
            } else if *op == unreduced_eta_op([1, -1]) {
                Some("nontrivial".to_owned())
            } else {
                None
            }
        }
        CaseTag::Reduced => REDUCED_CATALOG
            .iter()
            .find(|(_, eta)| *op == reduced_eta_op(*eta))
            .map(|(name, _)| (*name).to_owned()),
        CaseTag::StandardModel => {
            if *op == Op::identity() {
                Some("identity".to_owned())
            } else {
                None
            }
        }
    }
}

/// Enumerates the distinct one-term structures `rep(a) · opposite(rep(a))`
/// over all sign-scaled block-identity elements, normalized and
/// deduplicated up to a global sign.
pub fn enumerate_one_term(case: CaseTag) -> Vec<BetaCandidate> {
    let cycles = zero_cycle_span(case);
    let mut out: Vec<BetaCandidate> = Vec::new();
    for signs in sign_patterns(arity(case)) {
        let op = canonicalize(one_term_beta(case, &signs).expect("full sign pattern"));
        if out.iter().any(|c| c.op == op) {
            continue;
        }
        let flags = flags_for(case, &op, &cycles);
        let name = name_candidate(case, &op);
        out.push(BetaCandidate {
            case,
            sign_pattern: signs,
            op,
            flags,
            name,
        });
    }
    out
}

/// Solves for every self-adjoint J-commuting grading-commuting involution
/// in the commutant, returning one representative per global-sign pair in
/// lexicographic block-sign order.
///
/// The solved subspace is asserted to be spanned by indicator vectors of
/// disjoint diagonal blocks; candidates are all sign assignments to those
/// blocks with the first block positive.
pub fn enumerate_generic(case: CaseTag) -> Vec<BetaCandidate> {
    let data = AlgebraCase::new(case);
    let family = solve(vec![
        Constraint::MemberOf(commutant(&data.complexified_generators).space),
        Constraint::CommuteWithJ,
        Constraint::SelfAdjoint,
        Constraint::CommuteWith(gamma()),
    ]);
    let blocks = indicator_blocks(family.space());
    let cycles = zero_cycle_span(case);
    let mut out = Vec::new();
    for mut signs in sign_patterns(blocks.len() - 1) {
        signs.insert(0, 1);
        let mut op = blocks[0].clone();
        for (sign, block) in signs.iter().zip(&blocks).skip(1) {
            let term = if *sign == 1 { block.clone() } else { neg(block) };
            op = &op + &term;
        }
        let flags = flags_for(case, &op, &cycles);
        assert!(flags.involution && flags.self_adjoint && flags.commutes_with_j);
        let name = name_candidate(case, &op);
        out.push(BetaCandidate {
            case,
            sign_pattern: signs,
            op,
            flags,
            name,
        });
    }
    out
}

/// Decomposes a solved space into disjoint diagonal indicator operators,
/// panicking if any basis row is not of that shape.
fn indicator_blocks(space: &SubspaceBasis) -> Vec<Op> {
    let one = GaussianRational::one();
    let mut seen = std::collections::BTreeSet::new();
    let mut blocks = Vec::new();
    for row in space.rows() {
        for (coord, value) in row.iter() {
            assert_eq!(coord % 2, 0, "imaginary component in sign-block row");
            let entry = (coord / 2) as usize;
            let (r, c) = (entry / 32 + 1, entry % 32 + 1);
            assert_eq!(r, c, "off-diagonal entry in sign-block row");
            assert_eq!(*value, one, "non-unit entry in sign-block row");
            assert!(seen.insert(r), "overlapping sign blocks");
        }
        blocks.push(crate::constraint::unrealify(row));
    }
    assert_eq!(seen.len(), 32, "sign blocks do not cover the diagonal");
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triple::embed;

    #[test]
    fn one_term_of_unit_signs_is_identity() {
        for case in CaseTag::ALL {
            let op = one_term_beta(case, &vec![1; arity(case)]).unwrap();
            assert_eq!(op, Op::identity());
        }
    }

    #[test]
    fn one_term_is_insensitive_to_a_global_flip_of_the_element() {
        let a = one_term_beta(CaseTag::Unreduced, &[-1, 1, -1]).unwrap();
        let b = one_term_beta(CaseTag::Unreduced, &[1, -1, 1]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn one_term_rejects_wrong_arity() {
        assert!(one_term_beta(CaseTag::Reduced, &[1, 1, 1]).is_err());
        assert!(one_term_beta(CaseTag::Unreduced, &[1, 1, 1, 1]).is_err());
    }

    #[test]
    fn unreduced_one_term_has_two_classes_one_nontrivial() {
        let candidates = enumerate_one_term(CaseTag::Unreduced);
        assert_eq!(candidates.len(), 2);
        assert_eq!(candidates[0].op, Op::identity());
        assert!(candidates[0].flags.trivial);
        assert_eq!(candidates[1].op, unreduced_eta_op([1, -1]));
        assert_eq!(candidates[1].name.as_deref(), Some("nontrivial"));
        assert_eq!(
            candidates.iter().filter(|c| !c.flags.trivial).count(),
            1
        );
    }

    #[test]
    fn reduced_one_term_has_four_classes_three_nontrivial() {
        let candidates = enumerate_one_term(CaseTag::Reduced);
        assert_eq!(candidates.len(), 4);
        let names: Vec<&str> = candidates.iter().filter_map(|c| c.name.as_deref()).collect();
        assert_eq!(names, vec!["b1", "b7", "b3", "b6"]);
        assert_eq!(
            candidates.iter().filter(|c| !c.flags.trivial).count(),
            3
        );
    }

    #[test]
    fn unreduced_generic_enumeration_matches_one_term() {
        let generic = enumerate_generic(CaseTag::Unreduced);
        assert_eq!(generic.len(), 2);
        let one_term = enumerate_one_term(CaseTag::Unreduced);
        for c in &generic {
            assert!(one_term.iter().any(|o| o.op == c.op));
        }
        assert_eq!(generic[0].name.as_deref(), Some("identity"));
        assert_eq!(generic[1].name.as_deref(), Some("nontrivial"));
    }

    #[test]
    fn reduced_generic_enumeration_is_the_full_catalog() {
        let candidates = enumerate_generic(CaseTag::Reduced);
        assert_eq!(candidates.len(), 8);
        for (name, eta) in REDUCED_CATALOG {
            let found = candidates
                .iter()
                .find(|c| c.name.as_deref() == Some(name))
                .unwrap_or_else(|| panic!("{name} missing"));
            assert_eq!(found.op, reduced_eta_op(eta));
            assert_eq!(found.sign_pattern, eta.to_vec());
        }
    }

    #[test]
    fn reduced_one_term_expressibility_is_exactly_the_four_products() {
        let candidates = enumerate_generic(CaseTag::Reduced);
        for c in &candidates {
            let expressible = c.flags.one_term_expressible.is_some();
            let expected = matches!(c.name.as_deref(), Some("b1" | "b3" | "b6" | "b7"));
            assert_eq!(expressible, expected, "candidate {:?}", c.name);
            if let Some(witness) = &c.flags.one_term_expressible {
                assert_eq!(one_term_beta(CaseTag::Reduced, witness).unwrap(), c.op);
            }
        }
    }

    #[test]
    fn all_reduced_sign_structures_are_zero_cycles() {
        let candidates = enumerate_generic(CaseTag::Reduced);
        for c in &candidates {
            assert!(c.flags.zero_cycle, "candidate {:?}", c.name);
        }
    }

    #[test]
    fn reduced_two_term_witness_reconstructs_each_structure() {
        for (_, eta) in REDUCED_CATALOG {
            let first = rep(
                CaseTag::Reduced,
                &sign_element(CaseTag::Reduced, &[1, 0, eta[0], eta[1]]).unwrap(),
            )
            .unwrap();
            let second = rep(
                CaseTag::Reduced,
                &sign_element(CaseTag::Reduced, &[0, 1, eta[2], eta[3]]).unwrap(),
            )
            .unwrap();
            let two_term = &(&first * &opposite(&first)) + &(&second * &opposite(&second));
            assert_eq!(two_term, reduced_eta_op(eta));
        }
    }

    #[test]
    fn flipped_color_split_structure_is_one_term() {
        // The sign structure appearing with both quaternion blocks split:
        // the global-sign mirror of the b6 pattern, realized by the element
        // with a flipped first quaternion and color triplet.
        let op = one_term_beta(CaseTag::Reduced, &[-1, 1, 1, -1]).unwrap();
        assert_eq!(op, reduced_eta_op([-1, 1, 1, -1]));
        assert_eq!(neg(&op), reduced_eta_op([1, -1, -1, 1]));
    }

    #[test]
    fn sm_generic_enumeration_has_32_candidates() {
        let candidates = enumerate_generic(CaseTag::StandardModel);
        assert_eq!(candidates.len(), 32);
        for c in &candidates {
            assert!(c.flags.involution);
            assert!(c.flags.self_adjoint);
            assert!(c.flags.commutes_with_j);
            assert!(c.flags.commutes_with_gamma);
            assert!(c.flags.commutes_with_gamma_star);
        }
        assert_eq!(
            candidates.iter().filter(|c| c.flags.trivial).count(),
            1
        );
    }

    #[test]
    fn sm_color_split_structure_is_one_term() {
        let eta = sm_eta_op([1, -1, 1, -1, 1, -1]);
        assert_eq!(
            eta,
            &embed(
                &Mat::identity(4),
                1,
                1,
                &Mat::diag_ints(&[1, -1, -1, -1])
            ) + &embed(
                &Mat::diag_ints(&[1, -1, -1, -1]),
                2,
                2,
                &Mat::identity(4)
            )
        );
        assert_eq!(one_term_beta(CaseTag::StandardModel, &[1, 1, -1]).unwrap(), eta);
        let candidates = enumerate_generic(CaseTag::StandardModel);
        assert!(candidates.iter().any(|c| c.op == eta));
    }

    #[test]
    fn zero_cycle_span_contains_identity_and_is_left_stable() {
        let cycles = zero_cycle_span(CaseTag::Reduced);
        assert!(cycles.contains(&Op::identity()));
        let data = AlgebraCase::new(CaseTag::Reduced);
        for g in data.real_generators.iter().take(6) {
            for row in cycles.space().rows().iter().take(8) {
                let acted = g * &crate::constraint::unrealify(row);
                assert!(cycles.contains(&acted));
            }
        }
    }
}
