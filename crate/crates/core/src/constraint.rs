//! Compiles operator constraints into one exact real-linear system over the
//! realified operator space and solves for the full solution set.
//!
//! Antilinear conditions (the real structure, adjoints) are linear over the
//! reals, so every constraint lowers to sparse rows on the 2048 real
//! coordinates of a 32x32 complex matrix. The row-reduced system is unique,
//! which makes every solved family canonical and order-independent.

use std::collections::BTreeSet;

use num::Zero;
use thiserror::Error;

use crate::linalg::{Eliminator, GaussianRational, Mat, SparseVec, SubspaceBasis};
use crate::triple::{gamma, gamma_star, j_conjugate, BasisIndex, CaseTag, Op, TensorIndex};

/// Real dimension of the realified operator space: 32 x 32 complex entries,
/// two real coordinates each.
pub const REAL_DIM: usize = 2 * 32 * 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstraintError {
    #[error("operator does not commute with the real structure")]
    NotJCommuting,
    #[error("coordinate set must be nonempty")]
    EmptyCoordinateSet,
}

/// A linear or antilinear condition on an operator.
#[derive(Clone, Debug)]
pub enum Constraint {
    CommuteWith(Op),
    AnticommuteWith(Op),
    CommuteWithJ,
    SelfAdjoint,
    /// Membership in a subspace of the realified operator space.
    MemberOf(SubspaceBasis),
}

impl Constraint {
    pub fn name(&self) -> &'static str {
        match self {
            Constraint::CommuteWith(_) => "commute",
            Constraint::AnticommuteWith(_) => "anticommute",
            Constraint::CommuteWithJ => "commute-with-j",
            Constraint::SelfAdjoint => "self-adjoint",
            Constraint::MemberOf(_) => "member-of",
        }
    }
}

/// Real coordinate of the (`row`, `col`) entry (1-based), real or imaginary
/// part.
fn coord(row: usize, col: usize, imag: bool) -> u32 {
    (((row - 1) * 32 + (col - 1)) * 2 + usize::from(imag)) as u32
}

/// Realification: splits every complex entry into two real coordinates.
pub fn realify(x: &Op) -> SparseVec {
    let mut entries = Vec::new();
    for (t, v) in x.iter_nonzero() {
        let (row, col) = t.flat();
        if !v.re().is_zero() {
            entries.push((coord(row, col, false), GaussianRational::from_real(v.re().clone())));
        }
        if !v.im().is_zero() {
            entries.push((coord(row, col, true), GaussianRational::from_real(v.im().clone())));
        }
    }
    SparseVec::from_entries(REAL_DIM, entries)
}

/// Inverse of [`realify`]. Entries of `v` must be real.
pub fn unrealify(v: &SparseVec) -> Op {
    assert_eq!(v.dim(), REAL_DIM, "wrong ambient dimension");
    let mut out = Mat::zeros(32, 32);
    for (idx, value) in v.iter() {
        assert!(
            value.im().is_zero(),
            "realified vectors must have real entries"
        );
        let idx = idx as usize;
        let imag = idx % 2 == 1;
        let entry = idx / 2;
        let (row, col) = (entry / 32, entry % 32);
        let delta = if imag { value.times_i() } else { value.clone() };
        let current = out.get(row, col).clone();
        out.set(row, col, current + &delta);
    }
    Op::from_mat(out)
}

/// Pushes the two real rows expressing `sum_j coeffs_j * D_j = 0` for a
/// complex-linear functional with complex coefficients on complex entries.
fn push_complex_equation(rows: &mut Vec<SparseVec>, coeffs: &[((usize, usize), GaussianRational)]) {
    let mut re_row = Vec::new();
    let mut im_row = Vec::new();
    for ((r, c), z) in coeffs {
        let (a, b) = (z.re(), z.im());
        // (a + b i)(x + y i) = (a x - b y) + (a y + b x) i
        if !a.is_zero() {
            re_row.push((coord(*r, *c, false), GaussianRational::from_real(a.clone())));
            im_row.push((coord(*r, *c, true), GaussianRational::from_real(a.clone())));
        }
        if !b.is_zero() {
            re_row.push((coord(*r, *c, true), GaussianRational::from_real(-b.clone())));
            im_row.push((coord(*r, *c, false), GaussianRational::from_real(b.clone())));
        }
    }
    for entries in [re_row, im_row] {
        let row = SparseVec::from_entries(REAL_DIM, entries);
        if !row.is_zero() {
            rows.push(row);
        }
    }
}

/// Lowers a constraint to real-linear rows; a solution operator must
/// annihilate every row.
pub fn rows_for(constraint: &Constraint) -> Vec<SparseVec> {
    let mut rows = Vec::new();
    match constraint {
        Constraint::CommuteWith(a) | Constraint::AnticommuteWith(a) => {
            let sign = if matches!(constraint, Constraint::CommuteWith(_)) {
                GaussianRational::from_int(-1)
            } else {
                GaussianRational::one()
            };
            // Row p of a and column q of a, as sparse lists.
            let mut a_rows: Vec<Vec<(usize, GaussianRational)>> = vec![Vec::new(); 33];
            let mut a_cols: Vec<Vec<(usize, GaussianRational)>> = vec![Vec::new(); 33];
            for (t, v) in a.iter_nonzero() {
                let (r, c) = t.flat();
                a_rows[r].push((c, v.clone()));
                a_cols[c].push((r, v.clone()));
            }
            for p in 1..=32 {
                for q in 1..=32 {
                    // (aD + sign Da)[p,q] = sum_x a[p,x] D[x,q] + sign D[p,x] a[x,q]
                    let mut coeffs: Vec<((usize, usize), GaussianRational)> = Vec::new();
                    for (x, v) in &a_rows[p] {
                        coeffs.push(((*x, q), v.clone()));
                    }
                    for (x, v) in &a_cols[q] {
                        coeffs.push(((p, *x), &sign * v));
                    }
                    if !coeffs.is_empty() {
                        push_complex_equation(&mut rows, &coeffs);
                    }
                }
            }
        }
        Constraint::CommuteWithJ => {
            // D[a,b] = conj(D[ta,tb]) where t is the antilinear index pairing.
            for a in 1..=32usize {
                let ta = BasisIndex::from_flat(a).unwrap().j_partner().flat();
                for b in 1..=32usize {
                    let tb = BasisIndex::from_flat(b).unwrap().j_partner().flat();
                    if (ta, tb) < (a, b) {
                        continue; // mirror of an emitted pair
                    }
                    if (ta, tb) == (a, b) {
                        // Only the imaginary part is constrained.
                        rows.push(SparseVec::from_entries(
                            REAL_DIM,
                            vec![(coord(a, b, true), GaussianRational::one())],
                        ));
                    } else {
                        rows.push(SparseVec::from_entries(
                            REAL_DIM,
                            vec![
                                (coord(a, b, false), GaussianRational::one()),
                                (coord(ta, tb, false), GaussianRational::from_int(-1)),
                            ],
                        ));
                        rows.push(SparseVec::from_entries(
                            REAL_DIM,
                            vec![
                                (coord(a, b, true), GaussianRational::one()),
                                (coord(ta, tb, true), GaussianRational::one()),
                            ],
                        ));
                    }
                }
            }
        }
        Constraint::SelfAdjoint => {
            for p in 1..=32usize {
                for q in p..=32usize {
                    if p == q {
                        rows.push(SparseVec::from_entries(
                            REAL_DIM,
                            vec![(coord(p, q, true), GaussianRational::one())],
                        ));
                    } else {
                        rows.push(SparseVec::from_entries(
                            REAL_DIM,
                            vec![
                                (coord(p, q, false), GaussianRational::one()),
                                (coord(q, p, false), GaussianRational::from_int(-1)),
                            ],
                        ));
                        rows.push(SparseVec::from_entries(
                            REAL_DIM,
                            vec![
                                (coord(p, q, true), GaussianRational::one()),
                                (coord(q, p, true), GaussianRational::one()),
                            ],
                        ));
                    }
                }
            }
        }
        Constraint::MemberOf(space) => {
            assert_eq!(
                space.ambient_dim(),
                REAL_DIM,
                "membership subspace must live in the realified operator space"
            );
            rows.extend(space.annihilator().rows().iter().cloned());
        }
    }
    rows
}

/// Checks one constraint directly on an operator, without lowering.
pub fn check_constraint(x: &Op, constraint: &Constraint) -> bool {
    match constraint {
        Constraint::CommuteWith(a) => x.commutes_with(a),
        Constraint::AnticommuteWith(a) => x.anticommutator(a).is_zero(),
        Constraint::CommuteWithJ => j_conjugate(x) == *x,
        Constraint::SelfAdjoint => x.dagger() == *x,
        Constraint::MemberOf(space) => space.contains_vector(&realify(x)),
    }
}

/// The solution space of a constraint set, with the constraints kept for
/// re-checking and reporting.
#[derive(Clone, Debug)]
pub struct DiracFamily {
    constraints: Vec<Constraint>,
    case: Option<CaseTag>,
    space: SubspaceBasis,
}

impl DiracFamily {
    pub fn space(&self) -> &SubspaceBasis {
        &self.space
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn case(&self) -> Option<CaseTag> {
        self.case
    }

    pub fn with_case(mut self, tag: CaseTag) -> Self {
        self.case = Some(tag);
        self
    }

    pub fn real_dim(&self) -> usize {
        self.space.dim()
    }

    /// Canonical basis of the family, as operators.
    pub fn basis_ops(&self) -> Vec<Op> {
        self.space.rows().iter().map(unrealify).collect()
    }

    pub fn contains_op(&self, x: &Op) -> bool {
        self.space.contains_vector(&realify(x))
    }
}

/// Solves a constraint set. Every basis element of the result is re-checked
/// against every constraint directly; a failure would be a solver bug and
/// panics.
pub fn solve(constraints: Vec<Constraint>) -> DiracFamily {
    let mut elim = Eliminator::new(REAL_DIM);
    for c in &constraints {
        for row in rows_for(c) {
            elim.push(row);
        }
    }
    let rref = elim.into_rref();
    let null = nullspace(&rref);
    let space = SubspaceBasis::from_spanning(REAL_DIM, null);
    for v in space.rows() {
        let op = unrealify(v);
        for c in &constraints {
            assert!(
                check_constraint(&op, c),
                "solver produced a basis element violating {}",
                c.name()
            );
        }
    }
    DiracFamily {
        constraints,
        case: None,
        space,
    }
}

fn nullspace(rref: &[SparseVec]) -> Vec<SparseVec> {
    crate::linalg::sparse::nullspace_from_rref(rref, REAL_DIM)
}

/// Standard constraint list for a Dirac family: the real structure first,
/// then the grading, then the structure operator, then self-adjointness.
pub fn dirac_constraints(
    grading: Option<&Op>,
    beta: Option<&Op>,
    self_adjoint: bool,
) -> Vec<Constraint> {
    let mut constraints = vec![Constraint::CommuteWithJ];
    if let Some(g) = grading {
        constraints.push(Constraint::AnticommuteWith(g.clone()));
    }
    if let Some(b) = beta {
        constraints.push(Constraint::CommuteWith(b.clone()));
    }
    if self_adjoint {
        constraints.push(Constraint::SelfAdjoint);
    }
    constraints
}

/// Solves the standard Dirac-family constraint list.
pub fn dirac_family(grading: Option<&Op>, beta: Option<&Op>, self_adjoint: bool) -> DiracFamily {
    solve(dirac_constraints(grading, beta, self_adjoint))
}

/// Entry-level self-adjointness: the coefficient at (k,l,i,j,r,s) equals the
/// conjugate of the coefficient at the fully swapped tuple.
pub fn selfadjoint_coefficient_check(x: &Op) -> bool {
    for row in 1..=32usize {
        let a = BasisIndex::from_flat(row).unwrap();
        for col in 1..=32usize {
            let b = BasisIndex::from_flat(col).unwrap();
            let t = TensorIndex::new(a.k, b.k, a.i, b.i, a.r, b.r).unwrap();
            let swapped = TensorIndex::new(b.k, a.k, b.i, a.i, b.r, a.r).unwrap();
            if *x.entry(&t) != x.entry(&swapped).conj() {
                return false;
            }
        }
    }
    true
}

/// Entry-level commutation with the real structure: sector-(1,1)
/// coefficients mirror sector-(2,2) ones with the factor roles exchanged,
/// and sector-(1,2) mirror sector-(2,1).
pub fn j_commute_coefficient_check(x: &Op) -> bool {
    for k in 1..=4u8 {
        for l in 1..=4u8 {
            for r in 1..=4u8 {
                for s in 1..=4u8 {
                    let d11 = x.entry(&TensorIndex::new(k, l, 1, 1, r, s).unwrap());
                    let d22 = x.entry(&TensorIndex::new(r, s, 2, 2, k, l).unwrap());
                    if *d11 != d22.conj() {
                        return false;
                    }
                    let d12 = x.entry(&TensorIndex::new(k, l, 1, 2, r, s).unwrap());
                    let d21 = x.entry(&TensorIndex::new(r, s, 2, 1, k, l).unwrap());
                    if *d12 != d21.conj() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Splits a J-commuting operator into its sector-row halves: `d0` collects
/// the (1,1) and (1,2) sector blocks, `d1` the rest; `d1` is the mirror of
/// `d0` under the real structure and `d0 + d1 = d`.
pub fn split_d0(d: &Op) -> Result<(Op, Op), ConstraintError> {
    if !j_commute_coefficient_check(d) {
        return Err(ConstraintError::NotJCommuting);
    }
    let mut m0 = Mat::zeros(32, 32);
    let mut m1 = Mat::zeros(32, 32);
    for (t, v) in d.iter_nonzero() {
        let (row, col) = t.flat();
        if t.i == 1 {
            m0.set(row - 1, col - 1, v.clone());
        } else {
            m1.set(row - 1, col - 1, v.clone());
        }
    }
    let d0 = Op::from_mat(m0);
    let d1 = Op::from_mat(m1);
    debug_assert_eq!(d1, j_conjugate(&d0));
    Ok((d0, d1))
}

/// Self-adjoint part `(d + d*) / 2`.
pub fn riemannian_restriction(d: &Op) -> Op {
    (d + &d.dagger()).scale(&GaussianRational::from_fraction(1, 2))
}

/// Image of a family under restriction to the listed tensor coordinates,
/// realified: two real coordinates per tensor index, in sorted order.
pub fn coordinate_projection(
    family: &DiracFamily,
    coords: &BTreeSet<TensorIndex>,
) -> Result<SubspaceBasis, ConstraintError> {
    if coords.is_empty() {
        return Err(ConstraintError::EmptyCoordinateSet);
    }
    let index_of: Vec<(u32, u32)> = coords
        .iter()
        .map(|t| {
            let (row, col) = t.flat();
            (coord(row, col, false), coord(row, col, true))
        })
        .collect();
    let ambient = 2 * coords.len();
    let projected = family.space.rows().iter().map(|v| {
        let mut entries = Vec::new();
        for (slot, (re_coord, im_coord)) in index_of.iter().enumerate() {
            if let Some(value) = v.get(*re_coord) {
                entries.push((2 * slot as u32, value.clone()));
            }
            if let Some(value) = v.get(*im_coord) {
                entries.push((2 * slot as u32 + 1, value.clone()));
            }
        }
        SparseVec::from_entries(ambient, entries)
    });
    Ok(SubspaceBasis::from_spanning(ambient, projected))
}

/// Convenience: the two gradings by name.
pub fn grading_by_name(name: &str) -> Option<Op> {
    match name {
        "gamma" => Some(gamma()),
        "gamma-star" | "gamma_star" => Some(gamma_star()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;
    use crate::triple::embed;

    fn sample_op() -> Op {
        // A dense-ish operator with rational and imaginary parts.
        let mut m = Mat::zeros(32, 32);
        m.set(0, 0, GaussianRational::from_fraction(3, 7));
        m.set(0, 5, GaussianRational::new(
            Rational::new(1.into(), 2.into()),
            Rational::new((-4).into(), 3.into()),
        ));
        m.set(31, 2, GaussianRational::i());
        m.set(17, 17, GaussianRational::from_int(-2));
        Op::from_mat(m)
    }

    #[test]
    fn realify_round_trips() {
        for x in [Op::identity(), gamma(), gamma_star(), sample_op()] {
            assert_eq!(unrealify(&realify(&x)), x);
        }
    }

    #[test]
    fn realify_of_i_identity_hits_imaginary_slots() {
        let x = Op::identity().scale(&GaussianRational::i());
        let v = realify(&x);
        assert_eq!(v.nnz(), 32);
        for (idx, _) in v.iter() {
            assert_eq!(idx % 2, 1, "expected only imaginary coordinates");
        }
    }

    #[test]
    fn realify_is_additive() {
        let x = sample_op();
        let y = gamma();
        let mut sum = realify(&x);
        sum.add_scaled(&realify(&y), &GaussianRational::one());
        assert_eq!(sum, realify(&(&x + &y)));
    }

    #[test]
    fn commute_with_identity_is_everything() {
        let family = solve(vec![Constraint::CommuteWith(Op::identity())]);
        assert_eq!(family.real_dim(), REAL_DIM);
    }

    #[test]
    fn j_commuting_space_is_a_real_form() {
        let family = solve(vec![Constraint::CommuteWithJ]);
        assert_eq!(family.real_dim(), 1024);
    }

    #[test]
    fn selfadjoint_space_has_hermitian_dimension() {
        let family = solve(vec![Constraint::SelfAdjoint]);
        assert_eq!(family.real_dim(), 1024);
    }

    #[test]
    fn dirac_family_gamma_has_dimension_512() {
        let family = dirac_family(Some(&gamma()), None, false);
        assert_eq!(family.real_dim(), 512);
    }

    #[test]
    fn dirac_family_gamma_star_has_dimension_512() {
        let family = dirac_family(Some(&gamma_star()), None, false);
        assert_eq!(family.real_dim(), 512);
    }

    #[test]
    fn solution_spaces_shrink_monotonically() {
        let small = dirac_family(Some(&gamma()), None, true);
        let big = dirac_family(Some(&gamma()), None, false);
        assert!(big.space().contains(small.space()).unwrap());
        assert!(small.real_dim() < big.real_dim());
    }

    #[test]
    fn constraint_order_does_not_matter() {
        let a = solve(vec![
            Constraint::CommuteWithJ,
            Constraint::AnticommuteWith(gamma()),
            Constraint::SelfAdjoint,
        ]);
        let b = solve(vec![
            Constraint::SelfAdjoint,
            Constraint::AnticommuteWith(gamma()),
            Constraint::CommuteWithJ,
        ]);
        assert!(a.space().equal(b.space()).unwrap());
    }

    #[test]
    fn member_of_constraint_intersects() {
        // Members of the span of {identity, gamma} that anticommute with
        // gamma: only 0.
        let span = SubspaceBasis::from_spanning(
            REAL_DIM,
            vec![realify(&Op::identity()), realify(&gamma())],
        );
        let family = solve(vec![
            Constraint::MemberOf(span.clone()),
            Constraint::AnticommuteWith(gamma()),
        ]);
        assert_eq!(family.real_dim(), 0);
        // Members commuting with gamma: the whole span.
        let family = solve(vec![
            Constraint::MemberOf(span.clone()),
            Constraint::CommuteWith(gamma()),
        ]);
        assert!(family.space().equal(&span).unwrap());
    }

    #[test]
    fn coefficient_checks_agree_with_operator_identities() {
        let x = sample_op();
        let hermitian = &x + &x.dagger();
        assert!(selfadjoint_coefficient_check(&hermitian));
        assert!(!selfadjoint_coefficient_check(&embed(
            &Mat::unit(4, 0, 1),
            1,
            1,
            &Mat::identity(4)
        )));
        let j_sym = &x + &j_conjugate(&x);
        assert!(j_commute_coefficient_check(&j_sym));
        assert!(!j_commute_coefficient_check(&embed(
            &Mat::identity(4),
            1,
            1,
            &Mat::identity(4)
        )));
        assert_eq!(selfadjoint_coefficient_check(&x), x.dagger() == x);
        assert_eq!(j_commute_coefficient_check(&x), j_conjugate(&x) == x);
    }

    #[test]
    fn split_d0_requires_j_commuting_input() {
        let x = embed(&Mat::unit(4, 0, 1), 1, 1, &Mat::identity(4));
        assert_eq!(split_d0(&x), Err(ConstraintError::NotJCommuting));
    }

    #[test]
    fn split_d0_of_identity_is_the_sector_projector() {
        let (d0, d1) = split_d0(&Op::identity()).unwrap();
        let id4 = Mat::identity(4);
        assert_eq!(d0, embed(&id4, 1, 1, &id4));
        assert_eq!(d1, embed(&id4, 2, 2, &id4));
    }

    #[test]
    fn split_d0_reassembles() {
        let x = sample_op();
        let d = &x + &j_conjugate(&x);
        let (d0, d1) = split_d0(&d).unwrap();
        assert_eq!(&d0 + &d1, d);
        assert_eq!(d1, j_conjugate(&d0));
    }

    #[test]
    fn lemma_commutation_reduces_to_d0() {
        // A = a + JaJ^{-1} with a sector-diagonal commutes with J; for
        // J-commuting d it commutes with d iff it commutes with d0.
        let id4 = Mat::identity(4);
        let a_raw = &embed(&Mat::unit(4, 0, 0), 1, 1, &id4)
            + &embed(&Mat::from_int_rows(&[
                &[(0, 0), (2, 1), (0, 0), (0, 0)],
                &[(0, 0), (1, 0), (0, 0), (0, 0)],
                &[(0, 0), (0, 0), (0, 0), (0, 0)],
                &[(0, 0), (0, 0), (0, 0), (3, 0)],
            ]), 2, 2, &id4);
        for a in [
            &a_raw + &j_conjugate(&a_raw),
            &a_raw - &j_conjugate(&a_raw),
        ] {
            let x = sample_op();
            let d = &x + &j_conjugate(&x);
            let (d0, _) = split_d0(&d).unwrap();
            assert_eq!(a.commutes_with(&d), a.commutes_with(&d0));
            // A positive instance: d built to commute with a.
            let family = solve(vec![
                Constraint::CommuteWithJ,
                Constraint::CommuteWith(a.clone()),
            ]);
            let d = family.basis_ops().into_iter().next().unwrap();
            let (d0, _) = split_d0(&d).unwrap();
            assert!(a.commutes_with(&d) && a.commutes_with(&d0));
        }
    }

    #[test]
    fn riemannian_restriction_properties() {
        let x = sample_op();
        let r = riemannian_restriction(&x);
        assert_eq!(r.dagger(), r);
        assert_eq!(riemannian_restriction(&r), r);
        let sa = &x + &x.dagger();
        assert_eq!(riemannian_restriction(&sa), sa);
        let anti = &x - &x.dagger();
        assert!(riemannian_restriction(&anti).is_zero());
    }

    #[test]
    fn coordinate_projection_of_full_space_is_full() {
        let family = solve(vec![Constraint::CommuteWith(Op::identity())]);
        let coords: BTreeSet<TensorIndex> = [
            TensorIndex::new(1, 2, 1, 1, 1, 1).unwrap(),
            TensorIndex::new(3, 3, 2, 1, 2, 4).unwrap(),
        ]
        .into_iter()
        .collect();
        let image = coordinate_projection(&family, &coords).unwrap();
        assert_eq!(image.dim(), 4);
        assert_eq!(image.ambient_dim(), 4);
    }

    #[test]
    fn coordinate_projection_sees_forced_zeros() {
        // Anticommuting with gamma forces chirality-diagonal particle
        // entries to vanish.
        let family = dirac_family(Some(&gamma()), None, false);
        let coords: BTreeSet<TensorIndex> =
            [TensorIndex::new(1, 1, 1, 1, 1, 1).unwrap()].into_iter().collect();
        let image = coordinate_projection(&family, &coords).unwrap();
        assert!(image.is_zero());
        let coords: BTreeSet<TensorIndex> =
            [TensorIndex::new(1, 3, 1, 1, 1, 1).unwrap()].into_iter().collect();
        let image = coordinate_projection(&family, &coords).unwrap();
        assert_eq!(image.dim(), 2);
    }

    #[test]
    fn empty_coordinate_set_is_rejected() {
        let family = solve(vec![Constraint::CommuteWith(Op::identity())]);
        assert_eq!(
            coordinate_projection(&family, &BTreeSet::new()),
            Err(ConstraintError::EmptyCoordinateSet)
        );
    }
}
