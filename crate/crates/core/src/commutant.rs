//! Commutants of represented algebras and parametric operator families.
//!
//! A commutant is computed as the exact nullspace of stacked commutator
//! conditions. Classification claims about solution families are verified by
//! instantiating a displayed parametric family into a spanning set and
//! testing subspace equality — never by symbolic pattern matching.

use crate::constraint::{realify, solve, unrealify, Constraint, REAL_DIM};
use crate::linalg::{GaussianRational, Mat, SparseVec, SubspaceBasis};
use crate::triple::{embed, j_conjugate, Op, TensorIndex};

/// Result of a commutant computation.
#[derive(Clone, Debug)]
pub struct CommutantResult {
    /// Realified subspace of all operators commuting with the generators.
    pub space: SubspaceBasis,
    /// Complex dimension (the space is closed under multiplication by i).
    pub complex_dim: usize,
    pub structure: StructureReport,
}

/// Where a subspace lives, sector by sector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorStructure {
    pub sector: (u8, u8),
    /// Real dimension of the projection onto this sector's coordinates.
    pub real_dim: usize,
    /// First-factor index pairs (k, l) hit by some basis element.
    pub row_mask: Vec<(u8, u8)>,
    /// Color index pairs (r, s) hit by some basis element.
    pub col_mask: Vec<(u8, u8)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub sectors: Vec<SectorStructure>,
}

impl StructureReport {
    pub fn of(space: &SubspaceBasis) -> Self {
        let mut sectors = Vec::new();
        for (i, j) in [(1u8, 1u8), (1, 2), (2, 1), (2, 2)] {
            let mut row_mask = std::collections::BTreeSet::new();
            let mut col_mask = std::collections::BTreeSet::new();
            // Project each basis row onto this sector's coordinates; the
            // sector's 16 x 16 complex entries realify into 512 slots.
            let mut projected = Vec::new();
            for v in space.rows() {
                let mut entries = Vec::new();
                for (idx, value) in v.iter() {
                    let entry = (idx / 2) as usize;
                    let (row, col) = (entry / 32 + 1, entry % 32 + 1);
                    let t = TensorIndex::from_flat(row, col).unwrap();
                    if t.i == i && t.j == j {
                        row_mask.insert((t.k, t.l));
                        col_mask.insert((t.r, t.s));
                        let local = ((usize::from(t.k) - 1) * 4 + usize::from(t.r) - 1) * 16
                            + (usize::from(t.l) - 1) * 4
                            + usize::from(t.s)
                            - 1;
                        entries.push(((local * 2) as u32 + (idx % 2), value.clone()));
                    }
                }
                projected.push(SparseVec::from_entries(512, entries));
            }
            let dim = SubspaceBasis::from_spanning(512, projected).dim();
            sectors.push(SectorStructure {
                sector: (i, j),
                real_dim: dim,
                row_mask: row_mask.into_iter().collect(),
                col_mask: col_mask.into_iter().collect(),
            });
        }
        StructureReport { sectors }
    }
}

/// Computes the commutant of a nonempty generator list.
pub fn commutant(generators: &[Op]) -> CommutantResult {
    assert!(!generators.is_empty(), "generator list must be nonempty");
    let constraints: Vec<Constraint> = generators
        .iter()
        .map(|g| Constraint::CommuteWith(g.clone()))
        .collect();
    let family = solve(constraints);
    let space = family.space().clone();
    // A commutant of any set is closed under multiplication by i.
    let i = GaussianRational::i();
    for v in space.rows() {
        let op = unrealify(v).scale(&i);
        assert!(
            space.contains_vector(&realify(&op)),
            "commutant is not i-stable: solver bug"
        );
    }
    assert_eq!(space.dim() % 2, 0);
    let structure = StructureReport::of(&space);
    CommutantResult {
        complex_dim: space.dim() / 2,
        structure,
        space,
    }
}

/// One block-pattern monomial family: every (left, right) pair spans one
/// free complex slot in the given sector.
#[derive(Clone, Debug)]
pub struct FormTerm {
    pub left: Vec<Mat>,
    pub sector: (u8, u8),
    pub right: Vec<Mat>,
}

/// A displayed parametric operator family. With `real_structure_mirror`
/// set, the display describes the half `D0` of `D = D0 + J D0 J^{-1}` and
/// the span mirrors every monomial accordingly.
#[derive(Clone, Debug)]
pub struct ParametricForm {
    pub name: &'static str,
    pub terms: Vec<FormTerm>,
    pub real_structure_mirror: bool,
}

impl ParametricForm {
    /// Number of free complex parameters in the display.
    pub fn monomial_count(&self) -> usize {
        self.terms.iter().map(|t| t.left.len() * t.right.len()).sum()
    }

    /// Real dimension the family should span if all parameters are
    /// independent.
    pub fn expected_real_dim(&self) -> usize {
        2 * self.monomial_count()
    }

    /// Spans the family by instantiating every monomial with coefficients 1
    /// and i.
    pub fn span(&self) -> SubspaceBasis {
        let i = GaussianRational::i();
        let mut vectors = Vec::new();
        for term in &self.terms {
            for a in &term.left {
                for b in &term.right {
                    let m = embed(a, term.sector.0, term.sector.1, b);
                    if self.real_structure_mirror {
                        let mirror = j_conjugate(&m);
                        vectors.push(realify(&(&m + &mirror)));
                        vectors.push(realify(&(&m - &mirror).scale(&i)));
                    } else {
                        vectors.push(realify(&m));
                        vectors.push(realify(&m.scale(&i)));
                    }
                }
            }
        }
        SubspaceBasis::from_spanning(REAL_DIM, vectors)
    }
}

/// True iff the family's span equals the given subspace exactly.
pub fn matches_parametric_form(space: &SubspaceBasis, form: &ParametricForm) -> bool {
    form.span().equal(space).unwrap_or(false)
}

/// Built-in displayed families.
pub mod presets {
    use super::*;

    /// 4x4 matrix units at 1-based positions.
    fn units(positions: &[(usize, usize)]) -> Vec<Mat> {
        positions
            .iter()
            .map(|(r, c)| Mat::unit(4, r - 1, c - 1))
            .collect()
    }

    fn all_units() -> Vec<Mat> {
        let mut p = Vec::new();
        for r in 1..=4 {
            for c in 1..=4 {
                p.push((r, c));
            }
        }
        units(&p)
    }

    fn block(rows: &[usize], cols: &[usize]) -> Vec<(usize, usize)> {
        let mut p = Vec::new();
        for &r in rows {
            for &c in cols {
                p.push((r, c));
            }
        }
        p
    }

    fn concat(a: Vec<(usize, usize)>, b: Vec<(usize, usize)>) -> Vec<Mat> {
        let mut p = a;
        p.extend(b);
        units(&p)
    }

    /// Off-diagonal 2x2 blocks of a 4x4 matrix.
    fn offdiag_blocks() -> Vec<Mat> {
        concat(block(&[1, 2], &[3, 4]), block(&[3, 4], &[1, 2]))
    }

    /// Diagonal 2x2 blocks.
    fn diag_blocks() -> Vec<Mat> {
        concat(block(&[1, 2], &[1, 2]), block(&[3, 4], &[3, 4]))
    }

    /// Scalar (+) 3x3 block: position (1,1) and the lower-right 3x3 block.
    fn scalar_plus_m3() -> Vec<Mat> {
        concat(vec![(1, 1)], block(&[2, 3, 4], &[2, 3, 4]))
    }

    /// First row and first column with the (1,1) corner removed.
    fn first_row_col_punctured() -> Vec<Mat> {
        concat(block(&[1], &[2, 3, 4]), block(&[2, 3, 4], &[1]))
    }

    /// Block-diagonal projections generating C1 = {diag(a 1_2, b 1_2)}.
    fn c1_basis() -> Vec<Mat> {
        vec![
            Mat::diag_ints(&[1, 1, 0, 0]),
            Mat::diag_ints(&[0, 0, 1, 1]),
        ]
    }

    /// Block-diagonal projections generating C2 = {diag(a, b 1_3)}.
    fn c2_basis() -> Vec<Mat> {
        vec![
            Mat::diag_ints(&[1, 0, 0, 0]),
            Mat::diag_ints(&[0, 1, 1, 1]),
        ]
    }

    /// Commutant of the two-quaternion plus full-block algebra.
    pub fn commutant_unreduced_form() -> ParametricForm {
        ParametricForm {
            name: "commutant-unreduced",
            terms: vec![
                FormTerm { left: c1_basis(), sector: (1, 1), right: all_units() },
                FormTerm { left: vec![Mat::identity(4)], sector: (2, 2), right: all_units() },
            ],
            real_structure_mirror: false,
        }
    }

    /// Commutant of the reduced algebra.
    pub fn commutant_reduced_form() -> ParametricForm {
        ParametricForm {
            name: "commutant-reduced",
            terms: vec![
                FormTerm { left: c1_basis(), sector: (1, 1), right: all_units() },
                FormTerm { left: c2_basis(), sector: (2, 2), right: all_units() },
            ],
            real_structure_mirror: false,
        }
    }

    /// J-commuting operators anticommuting with the chirality grading.
    pub fn dirac_gamma_form() -> ParametricForm {
        ParametricForm {
            name: "dirac-gamma",
            terms: vec![
                FormTerm { left: offdiag_blocks(), sector: (1, 1), right: all_units() },
                FormTerm {
                    left: concat(block(&[1, 2], &[1, 2, 3, 4]), vec![]),
                    sector: (1, 2),
                    right: concat(block(&[1, 2, 3, 4], &[1, 2]), vec![]),
                },
                FormTerm {
                    left: concat(block(&[3, 4], &[1, 2, 3, 4]), vec![]),
                    sector: (1, 2),
                    right: concat(block(&[1, 2, 3, 4], &[3, 4]), vec![]),
                },
            ],
            real_structure_mirror: true,
        }
    }

    /// J-commuting operators anticommuting with the lepton-separated
    /// grading.
    pub fn dirac_gamma_star_form() -> ParametricForm {
        ParametricForm {
            name: "dirac-gamma-star",
            terms: vec![
                FormTerm {
                    left: diag_blocks(),
                    sector: (1, 1),
                    right: first_row_col_punctured(),
                },
                FormTerm {
                    left: offdiag_blocks(),
                    sector: (1, 1),
                    right: scalar_plus_m3(),
                },
                FormTerm {
                    left: concat(block(&[1, 2], &[1]), block(&[3, 4], &[2, 3, 4])),
                    sector: (1, 2),
                    right: concat(block(&[1], &[1, 2]), block(&[2, 3, 4], &[3, 4])),
                },
                FormTerm {
                    left: concat(block(&[1, 2], &[2, 3, 4]), block(&[3, 4], &[1])),
                    sector: (1, 2),
                    right: concat(block(&[1], &[3, 4]), block(&[2, 3, 4], &[1, 2])),
                },
            ],
            real_structure_mirror: true,
        }
    }

    /// Generic J-commuting operators commuting with the nontrivial
    /// sign structure of the two-quaternion algebra.
    pub fn beta_nontrivial_form() -> ParametricForm {
        ParametricForm {
            name: "beta-nontrivial",
            terms: vec![
                FormTerm { left: diag_blocks(), sector: (1, 1), right: all_units() },
                FormTerm {
                    left: concat(block(&[1, 2], &[1, 2, 3, 4]), vec![]),
                    sector: (1, 2),
                    right: concat(block(&[1, 2, 3, 4], &[1, 2]), vec![]),
                },
                FormTerm {
                    left: concat(block(&[3, 4], &[1, 2, 3, 4]), vec![]),
                    sector: (1, 2),
                    right: concat(block(&[1, 2, 3, 4], &[3, 4]), vec![]),
                },
            ],
            real_structure_mirror: true,
        }
    }

    /// Generic J-commuting operators commuting with the sign structure
    /// carried by both quaternion blocks and the color split.
    pub fn beta_case2_form() -> ParametricForm {
        ParametricForm {
            name: "beta-case2",
            terms: vec![
                FormTerm { left: diag_blocks(), sector: (1, 1), right: scalar_plus_m3() },
                FormTerm {
                    left: offdiag_blocks(),
                    sector: (1, 1),
                    right: first_row_col_punctured(),
                },
                FormTerm {
                    left: concat(block(&[1, 2], &[1]), block(&[3, 4], &[2, 3, 4])),
                    sector: (1, 2),
                    right: concat(block(&[1], &[1, 2]), block(&[2, 3, 4], &[3, 4])),
                },
                FormTerm {
                    left: concat(block(&[1, 2], &[2, 3, 4]), block(&[3, 4], &[1])),
                    sector: (1, 2),
                    right: concat(block(&[1], &[3, 4]), block(&[2, 3, 4], &[1, 2])),
                },
            ],
            real_structure_mirror: true,
        }
    }

    /// Generic J-commuting operators commuting with the color-split sign
    /// structure alone.
    pub fn beta_final_form() -> ParametricForm {
        ParametricForm {
            name: "beta-final",
            terms: vec![
                FormTerm { left: all_units(), sector: (1, 1), right: scalar_plus_m3() },
                FormTerm {
                    left: concat(block(&[1, 2, 3, 4], &[1]), vec![]),
                    sector: (1, 2),
                    right: concat(block(&[1], &[1, 2, 3, 4]), vec![]),
                },
                FormTerm {
                    left: concat(block(&[1, 2, 3, 4], &[2, 3, 4]), vec![]),
                    sector: (1, 2),
                    right: concat(block(&[2, 3, 4], &[1, 2, 3, 4]), vec![]),
                },
            ],
            real_structure_mirror: true,
        }
    }

    /// The color-split-compatible family cut down by anticommutation with
    /// the lepton-separated grading.
    pub fn dirac_gamma_final_form() -> ParametricForm {
        ParametricForm {
            name: "dirac-gamma-final",
            terms: vec![
                FormTerm { left: offdiag_blocks(), sector: (1, 1), right: scalar_plus_m3() },
                FormTerm {
                    left: concat(block(&[1, 2], &[1]), vec![]),
                    sector: (1, 2),
                    right: concat(block(&[1], &[1, 2]), vec![]),
                },
                FormTerm {
                    left: concat(block(&[3, 4], &[2, 3, 4]), vec![]),
                    sector: (1, 2),
                    right: concat(block(&[2, 3, 4], &[3, 4]), vec![]),
                },
                FormTerm {
                    left: concat(block(&[3, 4], &[1]), vec![]),
                    sector: (1, 2),
                    right: concat(block(&[1], &[3, 4]), vec![]),
                },
                FormTerm {
                    left: concat(block(&[1, 2], &[2, 3, 4]), vec![]),
                    sector: (1, 2),
                    right: concat(block(&[2, 3, 4], &[1, 2]), vec![]),
                },
            ],
            real_structure_mirror: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triple::{AlgebraCase, CaseTag};

    #[test]
    fn commutant_of_identity_is_everything() {
        let result = commutant(&[Op::identity()]);
        assert_eq!(result.complex_dim, 1024);
    }

    #[test]
    fn commutant_unreduced_is_48_dimensional_and_matches_form() {
        let case = AlgebraCase::new(CaseTag::Unreduced);
        let result = commutant(&case.complexified_generators);
        assert_eq!(result.complex_dim, 48);
        assert!(matches_parametric_form(
            &result.space,
            &presets::commutant_unreduced_form()
        ));
        // Wrong form must fail.
        assert!(!matches_parametric_form(
            &result.space,
            &presets::commutant_reduced_form()
        ));
    }

    #[test]
    fn commutant_reduced_is_64_dimensional_and_matches_form() {
        let case = AlgebraCase::new(CaseTag::Reduced);
        let result = commutant(&case.complexified_generators);
        assert_eq!(result.complex_dim, 64);
        assert!(matches_parametric_form(
            &result.space,
            &presets::commutant_reduced_form()
        ));
    }

    #[test]
    fn real_and_complexified_generators_have_equal_commutants() {
        for tag in CaseTag::ALL {
            let case = AlgebraCase::new(tag);
            let a = commutant(&case.real_generators);
            let b = commutant(&case.complexified_generators);
            assert!(
                a.space.equal(&b.space).unwrap(),
                "commutants differ for case {tag:?}"
            );
        }
    }

    #[test]
    fn commutant_is_a_unital_algebra() {
        let case = AlgebraCase::new(CaseTag::Unreduced);
        let result = commutant(&case.complexified_generators);
        assert!(result.space.contains_vector(&realify(&Op::identity())));
        let basis: Vec<Op> = result.space.rows().iter().map(unrealify).collect();
        for x in &basis {
            for y in &basis {
                let product = x * y;
                assert!(
                    result.space.contains_vector(&realify(&product)),
                    "commutant not closed under product"
                );
            }
        }
    }

    #[test]
    fn commutant_of_generated_algebra_is_unchanged() {
        let case = AlgebraCase::new(CaseTag::Reduced);
        let mut gens = case.complexified_generators.clone();
        let base = commutant(&gens);
        let extra: Vec<Op> = gens
            .iter()
            .take(5)
            .zip(gens.iter().rev().take(5))
            .map(|(a, b)| a * b)
            .collect();
        gens.extend(extra);
        let enlarged = commutant(&gens);
        assert!(base.space.equal(&enlarged.space).unwrap());
    }

    #[test]
    fn structure_report_localizes_sectors() {
        let case = AlgebraCase::new(CaseTag::Unreduced);
        let result = commutant(&case.complexified_generators);
        let by_sector: std::collections::BTreeMap<(u8, u8), &SectorStructure> = result
            .structure
            .sectors
            .iter()
            .map(|s| (s.sector, s))
            .collect();
        assert_eq!(by_sector[&(1, 1)].real_dim, 64); // C1 x M4, complex 32
        assert_eq!(by_sector[&(2, 2)].real_dim, 32); // 1 x M4, complex 16
        assert_eq!(by_sector[&(1, 2)].real_dim, 0);
        assert_eq!(by_sector[&(2, 1)].real_dim, 0);
        // C1 is block-diagonal: only diagonal (k,l) pairs appear.
        assert_eq!(
            by_sector[&(1, 1)].row_mask,
            vec![(1, 1), (2, 2), (3, 3), (4, 4)]
        );
    }

    #[test]
    fn full_space_matches_the_all_units_form() {
        let full = SubspaceBasis::full_space(REAL_DIM);
        let mut terms = Vec::new();
        for sector in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            terms.push(FormTerm {
                left: (0..16).map(|i| Mat::unit(4, i / 4, i % 4)).collect(),
                sector,
                right: (0..16).map(|i| Mat::unit(4, i / 4, i % 4)).collect(),
            });
        }
        let form = ParametricForm {
            name: "full",
            terms,
            real_structure_mirror: false,
        };
        assert_eq!(form.monomial_count(), 1024);
        assert!(matches_parametric_form(&full, &form));
    }

    #[test]
    fn preset_monomial_counts() {
        assert_eq!(presets::commutant_unreduced_form().monomial_count(), 48);
        assert_eq!(presets::commutant_reduced_form().monomial_count(), 64);
        assert_eq!(presets::dirac_gamma_form().monomial_count(), 256);
        assert_eq!(presets::dirac_gamma_star_form().monomial_count(), 256);
        assert_eq!(presets::beta_nontrivial_form().monomial_count(), 256);
        assert_eq!(presets::beta_case2_form().monomial_count(), 256);
        assert_eq!(presets::beta_final_form().monomial_count(), 320);
        assert_eq!(presets::dirac_gamma_final_form().monomial_count(), 160);
    }

    #[test]
    fn dirac_preset_spans_have_the_oracle_dimensions() {
        for (form, dim) in [
            (presets::dirac_gamma_form(), 512),
            (presets::dirac_gamma_star_form(), 512),
            (presets::beta_nontrivial_form(), 512),
            (presets::beta_case2_form(), 512),
            (presets::beta_final_form(), 640),
            (presets::dirac_gamma_final_form(), 320),
        ] {
            let span = form.span();
            assert_eq!(span.dim(), form.expected_real_dim(), "form {}", form.name);
            assert_eq!(span.dim(), dim, "form {}", form.name);
        }
    }

    #[test]
    fn grading_families_match_their_forms() {
        use crate::constraint::dirac_family;
        use crate::triple::{gamma, gamma_star};
        let family = dirac_family(Some(&gamma()), None, false);
        assert!(matches_parametric_form(
            family.space(),
            &presets::dirac_gamma_form()
        ));
        let family = dirac_family(Some(&gamma_star()), None, false);
        assert!(matches_parametric_form(
            family.space(),
            &presets::dirac_gamma_star_form()
        ));
    }
}
