//! The three algebra cases and their representations.
//!
//! Every case acts on the left M4 factor per sector, with the color factor
//! untouched: the particle sector carries two quaternion blocks (or their
//! reductions), the antiparticle sector a 4x4 block that is full, reduced to
//! C (+) M3, or tied to the particle-sector scalar in the standard-model
//! case.

use thiserror::Error;

use crate::linalg::{GaussianRational, Mat};

use super::op::{embed, Op};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("element does not match case {0:?}")]
    CaseMismatch(CaseTag),
    #[error("block has wrong shape: expected {expected}, got {got}")]
    BlockShape {
        expected: &'static str,
        got: String,
    },
    #[error("2x2 block is not quaternionic")]
    NotQuaternion,
    #[error("sign pattern must have length {expected} for this case, got {got}")]
    SignArity { expected: usize, got: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum CaseTag {
    Unreduced,
    Reduced,
    StandardModel,
}

impl CaseTag {
    pub const ALL: [CaseTag; 3] = [CaseTag::Unreduced, CaseTag::Reduced, CaseTag::StandardModel];

    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::Unreduced => "unreduced",
            CaseTag::Reduced => "reduced",
            CaseTag::StandardModel => "sm",
        }
    }
}

/// An abstract algebra element, by case.
#[derive(Clone, Debug)]
pub enum AlgebraElement {
    /// Two quaternions acting on the particle sector, a full 4x4 block on
    /// the antiparticle sector.
    Unreduced { q_r: Mat, q_l: Mat, m: Mat },
    /// The antiparticle block is reduced to a complex scalar plus a 3x3
    /// color block.
    Reduced {
        q_r: Mat,
        q_l: Mat,
        lambda: GaussianRational,
        n: Mat,
    },
    /// Standard-model embedding: `diag(lambda, conj lambda, q)` on the
    /// particle sector, `diag(lambda, m)` on the antiparticle sector.
    StandardModel {
        lambda: GaussianRational,
        q: Mat,
        m: Mat,
    },
}

/// Checks the `[[a, b], [-conj b, conj a]]` shape of a quaternion block.
pub fn is_quaternion(q: &Mat) -> bool {
    q.nrows() == 2
        && q.ncols() == 2
        && q.get(1, 1) == &q.get(0, 0).conj()
        && q.get(1, 0) == &-&q.get(0, 1).conj()
}

fn expect_shape(m: &Mat, n: usize, what: &'static str) -> Result<(), ModelError> {
    if m.nrows() != n || m.ncols() != n {
        return Err(ModelError::BlockShape {
            expected: what,
            got: format!("{}x{}", m.nrows(), m.ncols()),
        });
    }
    Ok(())
}

/// Places a 2x2 block at rows/cols `offset..offset+2` of a 4x4 matrix.
fn corner(q: &Mat, offset: usize) -> Mat {
    let mut out = Mat::zeros(4, 4);
    for r in 0..2 {
        for c in 0..2 {
            out.set(offset + r, offset + c, q.get(r, c).clone());
        }
    }
    out
}

/// Places a 3x3 block at rows/cols 1..4 of a 4x4 matrix with `lambda` in the
/// top-left corner.
fn scalar_plus_block(lambda: &GaussianRational, n: &Mat) -> Mat {
    let mut out = Mat::zeros(4, 4);
    out.set(0, 0, lambda.clone());
    for r in 0..3 {
        for c in 0..3 {
            out.set(1 + r, 1 + c, n.get(r, c).clone());
        }
    }
    out
}

/// Faithful representation of an algebra element as an operator.
pub fn rep(tag: CaseTag, element: &AlgebraElement) -> Result<Op, ModelError> {
    let id4 = Mat::identity(4);
    match (tag, element) {
        (CaseTag::Unreduced, AlgebraElement::Unreduced { q_r, q_l, m }) => {
            expect_shape(q_r, 2, "2x2")?;
            expect_shape(q_l, 2, "2x2")?;
            expect_shape(m, 4, "4x4")?;
            if !is_quaternion(q_r) || !is_quaternion(q_l) {
                return Err(ModelError::NotQuaternion);
            }
            let particle = &corner(q_r, 0) + &corner(q_l, 2);
            Ok(&embed(&particle, 1, 1, &id4) + &embed(m, 2, 2, &id4))
        }
        (CaseTag::Reduced, AlgebraElement::Reduced { q_r, q_l, lambda, n }) => {
            expect_shape(q_r, 2, "2x2")?;
            expect_shape(q_l, 2, "2x2")?;
            expect_shape(n, 3, "3x3")?;
            if !is_quaternion(q_r) || !is_quaternion(q_l) {
                return Err(ModelError::NotQuaternion);
            }
            let particle = &corner(q_r, 0) + &corner(q_l, 2);
            let anti = scalar_plus_block(lambda, n);
            Ok(&embed(&particle, 1, 1, &id4) + &embed(&anti, 2, 2, &id4))
        }
        (CaseTag::StandardModel, AlgebraElement::StandardModel { lambda, q, m }) => {
            expect_shape(q, 2, "2x2")?;
            expect_shape(m, 3, "3x3")?;
            if !is_quaternion(q) {
                return Err(ModelError::NotQuaternion);
            }
            let mut particle = corner(q, 2);
            particle.set(0, 0, lambda.clone());
            particle.set(1, 1, lambda.conj());
            let anti = scalar_plus_block(lambda, m);
            Ok(&embed(&particle, 1, 1, &id4) + &embed(&anti, 2, 2, &id4))
        }
        _ => Err(ModelError::CaseMismatch(tag)),
    }
}

/// Identity element of a case.
pub fn unit_element(tag: CaseTag) -> AlgebraElement {
    match tag {
        CaseTag::Unreduced => AlgebraElement::Unreduced {
            q_r: Mat::identity(2),
            q_l: Mat::identity(2),
            m: Mat::identity(4),
        },
        CaseTag::Reduced => AlgebraElement::Reduced {
            q_r: Mat::identity(2),
            q_l: Mat::identity(2),
            lambda: GaussianRational::one(),
            n: Mat::identity(3),
        },
        CaseTag::StandardModel => AlgebraElement::StandardModel {
            lambda: GaussianRational::one(),
            q: Mat::identity(2),
            m: Mat::identity(3),
        },
    }
}

/// Sign-scaled block-identity element, one sign per block. Zero signs are
/// allowed (the block vanishes). Arity: 3 for unreduced and standard-model,
/// 4 for reduced.
pub fn sign_element(tag: CaseTag, signs: &[i8]) -> Result<AlgebraElement, ModelError> {
    let arity = match tag {
        CaseTag::Unreduced | CaseTag::StandardModel => 3,
        CaseTag::Reduced => 4,
    };
    if signs.len() != arity {
        return Err(ModelError::SignArity {
            expected: arity,
            got: signs.len(),
        });
    }
    let s = |k: usize| GaussianRational::from_int(signs[k] as i64);
    Ok(match tag {
        CaseTag::Unreduced => AlgebraElement::Unreduced {
            q_r: Mat::identity(2).scale(&s(0)),
            q_l: Mat::identity(2).scale(&s(1)),
            m: Mat::identity(4).scale(&s(2)),
        },
        CaseTag::Reduced => AlgebraElement::Reduced {
            q_r: Mat::identity(2).scale(&s(0)),
            q_l: Mat::identity(2).scale(&s(1)),
            lambda: s(2),
            n: Mat::identity(3).scale(&s(3)),
        },
        CaseTag::StandardModel => AlgebraElement::StandardModel {
            lambda: s(0),
            q: Mat::identity(2).scale(&s(1)),
            m: Mat::identity(3).scale(&s(2)),
        },
    })
}

/// How a case's represented algebra decomposes over the two sectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub particle_blocks: Vec<(Vec<u8>, BlockKind)>,
    pub antiparticle_blocks: Vec<(Vec<u8>, BlockKind)>,
    /// Pairs of (particle block index, antiparticle block index) forced to
    /// carry the same scalar.
    pub ties: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Quaternion,
    Full,
    Scalar,
    ConjugateScalar,
}

impl BlockKind {
    pub fn name(&self) -> &'static str {
        match self {
            BlockKind::Quaternion => "quaternion",
            BlockKind::Full => "full",
            BlockKind::Scalar => "scalar",
            BlockKind::ConjugateScalar => "conjugate-scalar",
        }
    }
}

/// A case bundled with generator lists for commutant computations.
#[derive(Clone, Debug)]
pub struct AlgebraCase {
    pub tag: CaseTag,
    /// Real-linear spanning set of the represented algebra.
    pub real_generators: Vec<Op>,
    /// Complex-linear spanning set of the complexified algebra (matrix
    /// units per block, with the standard-model scalar tie preserved).
    pub complexified_generators: Vec<Op>,
    pub block_structure: BlockStructure,
}

/// Real basis of the quaternions: 1, i s1, i s2, i s3.
pub fn quaternion_units() -> [Mat; 4] {
    [
        Mat::identity(2),
        Mat::from_int_rows(&[&[(0, 0), (0, 1)], &[(0, 1), (0, 0)]]),
        Mat::from_int_rows(&[&[(0, 0), (1, 0)], &[(-1, 0), (0, 0)]]),
        Mat::from_int_rows(&[&[(0, 1), (0, 0)], &[(0, 0), (0, -1)]]),
    ]
}

impl AlgebraCase {
    pub fn new(tag: CaseTag) -> Self {
        AlgebraCase {
            tag,
            real_generators: real_generators(tag),
            complexified_generators: complexified_generators(tag),
            block_structure: block_structure(tag),
        }
    }
}

fn real_generators(tag: CaseTag) -> Vec<Op> {
    let id4 = Mat::identity(4);
    let units = quaternion_units();
    let one = GaussianRational::one();
    let i = GaussianRational::i();
    let mut gens = Vec::new();
    match tag {
        CaseTag::Unreduced => {
            for u in &units {
                gens.push(embed(&corner(u, 0), 1, 1, &id4));
            }
            for u in &units {
                gens.push(embed(&corner(u, 2), 1, 1, &id4));
            }
            for r in 0..4 {
                for c in 0..4 {
                    for coeff in [&one, &i] {
                        gens.push(embed(&Mat::unit(4, r, c).scale(coeff), 2, 2, &id4));
                    }
                }
            }
        }
        CaseTag::Reduced => {
            for u in &units {
                gens.push(embed(&corner(u, 0), 1, 1, &id4));
            }
            for u in &units {
                gens.push(embed(&corner(u, 2), 1, 1, &id4));
            }
            for coeff in [&one, &i] {
                gens.push(embed(&Mat::unit(4, 0, 0).scale(coeff), 2, 2, &id4));
            }
            for r in 1..4 {
                for c in 1..4 {
                    for coeff in [&one, &i] {
                        gens.push(embed(&Mat::unit(4, r, c).scale(coeff), 2, 2, &id4));
                    }
                }
            }
        }
        CaseTag::StandardModel => {
            // The complex scalar appears in three slots at once.
            for lambda in [one.clone(), i.clone()] {
                let mut particle = Mat::zeros(4, 4);
                particle.set(0, 0, lambda.clone());
                particle.set(1, 1, lambda.conj());
                let mut anti = Mat::zeros(4, 4);
                anti.set(0, 0, lambda);
                gens.push(&embed(&particle, 1, 1, &id4) + &embed(&anti, 2, 2, &id4));
            }
            for u in &units {
                gens.push(embed(&corner(u, 2), 1, 1, &id4));
            }
            for r in 1..4 {
                for c in 1..4 {
                    for coeff in [&one, &i] {
                        gens.push(embed(&Mat::unit(4, r, c).scale(coeff), 2, 2, &id4));
                    }
                }
            }
        }
    }
    gens
}

fn complexified_generators(tag: CaseTag) -> Vec<Op> {
    let id4 = Mat::identity(4);
    let mut gens = Vec::new();
    let quaternion_block_units = |gens: &mut Vec<Op>, offset: usize| {
        for r in 0..2 {
            for c in 0..2 {
                gens.push(embed(&Mat::unit(4, offset + r, offset + c), 1, 1, &id4));
            }
        }
    };
    match tag {
        CaseTag::Unreduced => {
            quaternion_block_units(&mut gens, 0);
            quaternion_block_units(&mut gens, 2);
            for r in 0..4 {
                for c in 0..4 {
                    gens.push(embed(&Mat::unit(4, r, c), 2, 2, &id4));
                }
            }
        }
        CaseTag::Reduced => {
            quaternion_block_units(&mut gens, 0);
            quaternion_block_units(&mut gens, 2);
            gens.push(embed(&Mat::unit(4, 0, 0), 2, 2, &id4));
            for r in 1..4 {
                for c in 1..4 {
                    gens.push(embed(&Mat::unit(4, r, c), 2, 2, &id4));
                }
            }
        }
        CaseTag::StandardModel => {
            // Complexifying the scalar separates lambda from conj lambda but
            // keeps the two lambda slots tied.
            gens.push(
                &embed(&Mat::unit(4, 0, 0), 1, 1, &id4) + &embed(&Mat::unit(4, 0, 0), 2, 2, &id4),
            );
            gens.push(embed(&Mat::unit(4, 1, 1), 1, 1, &id4));
            quaternion_block_units(&mut gens, 2);
            for r in 1..4 {
                for c in 1..4 {
                    gens.push(embed(&Mat::unit(4, r, c), 2, 2, &id4));
                }
            }
        }
    }
    gens
}

fn block_structure(tag: CaseTag) -> BlockStructure {
    match tag {
        CaseTag::Unreduced => BlockStructure {
            particle_blocks: vec![
                (vec![1, 2], BlockKind::Quaternion),
                (vec![3, 4], BlockKind::Quaternion),
            ],
            antiparticle_blocks: vec![(vec![1, 2, 3, 4], BlockKind::Full)],
            ties: vec![],
        },
        CaseTag::Reduced => BlockStructure {
            particle_blocks: vec![
                (vec![1, 2], BlockKind::Quaternion),
                (vec![3, 4], BlockKind::Quaternion),
            ],
            antiparticle_blocks: vec![
                (vec![1], BlockKind::Scalar),
                (vec![2, 3, 4], BlockKind::Full),
            ],
            ties: vec![],
        },
        CaseTag::StandardModel => BlockStructure {
            particle_blocks: vec![
                (vec![1], BlockKind::Scalar),
                (vec![2], BlockKind::ConjugateScalar),
                (vec![3, 4], BlockKind::Quaternion),
            ],
            antiparticle_blocks: vec![
                (vec![1], BlockKind::Scalar),
                (vec![2, 3, 4], BlockKind::Full),
            ],
            ties: vec![(0, 0)],
        },
    }
}
