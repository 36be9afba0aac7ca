//! Exact matrix realizations of Sp(m,ℂ), O(n,ℂ), SO(n,ℂ) and the operations
//! between them, together with membership predicates and the conjugation
//! identities that identify stabilized maps.
//!
//! Throughout, Sp(m) acts on ℂ²ᵐ preserving `J₂ₘ = [[0, I], [−I, 0]]`.

mod ops;
mod random;

pub use ops::*;
pub use random::*;

use std::fmt;

use thiserror::Error;

use crate::linalg::{CycScalar, ExactMatrix, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("matrix is not an element of {0}")]
    NotInGroup(ClassicalGroup),
    #[error("expected an element of {expected}, got {got}")]
    WrongGroup {
        expected: &'static str,
        got: ClassicalGroup,
    },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("shape {0:?} is not valid here")]
    ShapeMismatch((usize, usize)),
    #[error("symplectic predicates disagree (gram: {gram}, blocks: {blocks})")]
    PredicateDisagreement { gram: bool, blocks: bool },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A classical group with its size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalGroup {
    /// 2m × 2m matrices preserving `J₂ₘ`
    Sp(usize),
    O(usize),
    SO(usize),
    GL(usize),
}

impl ClassicalGroup {
    /// Side length of the matrices realizing the group.
    pub fn matrix_size(&self) -> usize {
        match *self {
            ClassicalGroup::Sp(m) => 2 * m,
            ClassicalGroup::O(n) | ClassicalGroup::SO(n) | ClassicalGroup::GL(n) => n,
        }
    }

    pub fn contains(&self, m: &ExactMatrix) -> Result<bool, GroupError> {
        if m.shape() != (self.matrix_size(), self.matrix_size()) {
            return Ok(false);
        }
        match self {
            ClassicalGroup::Sp(_) => is_symplectic(m),
            ClassicalGroup::O(_) => is_orthogonal(m),
            ClassicalGroup::SO(_) => is_special_orthogonal(m),
            ClassicalGroup::GL(_) => Ok(!m.det()?.is_zero()),
        }
    }
}

impl fmt::Display for ClassicalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalGroup::Sp(m) => write!(f, "Sp({m})"),
            ClassicalGroup::O(n) => write!(f, "O({n})"),
            ClassicalGroup::SO(n) => write!(f, "SO({n})"),
            ClassicalGroup::GL(n) => write!(f, "GL({n})"),
        }
    }
}

/// A matrix together with the group it is claimed to belong to.
///
/// [`GroupElement::new`] checks membership exactly. The constructions in this
/// module build their outputs without re-checking, so tests can apply the
/// predicates to them independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    matrix: ExactMatrix,
    group: ClassicalGroup,
}

impl GroupElement {
    pub fn new(matrix: ExactMatrix, group: ClassicalGroup) -> Result<Self, GroupError> {
        if !group.contains(&matrix)? {
            return Err(GroupError::NotInGroup(group));
        }
        Ok(GroupElement { matrix, group })
    }

    pub(crate) fn new_unchecked(matrix: ExactMatrix, group: ClassicalGroup) -> Self {
        debug_assert_eq!(matrix.shape(), (group.matrix_size(), group.matrix_size()));
        GroupElement { matrix, group }
    }

    pub fn identity(group: ClassicalGroup) -> Self {
        Self::new_unchecked(ExactMatrix::identity(group.matrix_size()), group)
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ExactMatrix {
        self.matrix
    }

    pub fn group(&self) -> ClassicalGroup {
        self.group
    }

    /// Re-runs the exact membership predicate for the claimed group.
    pub fn verify(&self) -> Result<bool, GroupError> {
        self.group.contains(&self.matrix)
    }

    pub(crate) fn sp_rank(&self) -> Result<usize, GroupError> {
        match self.group {
            ClassicalGroup::Sp(m) => Ok(m),
            g => Err(GroupError::WrongGroup {
                expected: "Sp",
                got: g,
            }),
        }
    }

    /// Size of an orthogonal element; SO counts as O.
    pub(crate) fn o_rank(&self) -> Result<usize, GroupError> {
        match self.group {
            ClassicalGroup::O(n) | ClassicalGroup::SO(n) => Ok(n),
            g => Err(GroupError::WrongGroup {
                expected: "O",
                got: g,
            }),
        }
    }
}

/// `J₂ₖ = [[0, I_k], [−I_k, 0]]`
pub fn symplectic_form(k: usize) -> ExactMatrix {
    let i = ExactMatrix::identity(k);
    let z = ExactMatrix::zeros(k, k);
    ExactMatrix::from_blocks(&[&[&z, &i], &[&i.neg(), &z]]).expect("square blocks")
}

/// `[A₁₁, A₁₂, A₂₁, A₂₂]` for a `2m × 2m` matrix.
pub fn sp_blocks(m: &ExactMatrix) -> [ExactMatrix; 4] {
    let k = m.rows() / 2;
    [
        m.block(0, 0, k, k),
        m.block(0, k, k, k),
        m.block(k, 0, k, k),
        m.block(k, k, k, k),
    ]
}

fn check_even_square(m: &ExactMatrix) -> Result<usize, GroupError> {
    if !m.is_square() || m.rows() % 2 != 0 {
        return Err(GroupError::ShapeMismatch(m.shape()));
    }
    Ok(m.rows() / 2)
}

/// `MᵀJM = J`
pub fn symplectic_gram_check(m: &ExactMatrix) -> Result<bool, GroupError> {
    let k = check_even_square(m)?;
    let j = symplectic_form(k);
    Ok(m.transpose().mul(&j)?.mul(m)? == j)
}

/// `A₁₁ᵀA₂₁` and `A₁₂ᵀA₂₂` symmetric and `A₁₁ᵀA₂₂ − A₂₁ᵀA₁₂ = I`.
pub fn symplectic_block_check(m: &ExactMatrix) -> Result<bool, GroupError> {
    check_even_square(m)?;
    let [a11, a12, a21, a22] = sp_blocks(m);
    let s1 = a11.transpose().mul(&a21)?;
    if s1 != s1.transpose() {
        return Ok(false);
    }
    let s2 = a12.transpose().mul(&a22)?;
    if s2 != s2.transpose() {
        return Ok(false);
    }
    let d = a11.transpose().mul(&a22)?.sub(&a21.transpose().mul(&a12)?)?;
    Ok(d.is_identity())
}

/// Exact symplectic membership. The Gram identity and the block conditions
/// are both evaluated; a disagreement is reported as an error.
pub fn is_symplectic(m: &ExactMatrix) -> Result<bool, GroupError> {
    let gram = symplectic_gram_check(m)?;
    let blocks = symplectic_block_check(m)?;
    if gram != blocks {
        return Err(GroupError::PredicateDisagreement { gram, blocks });
    }
    Ok(gram)
}

pub fn is_orthogonal(m: &ExactMatrix) -> Result<bool, GroupError> {
    if !m.is_square() {
        return Err(GroupError::ShapeMismatch(m.shape()));
    }
    Ok(m.transpose().mul(m)?.is_identity())
}

pub fn is_special_orthogonal(m: &ExactMatrix) -> Result<bool, GroupError> {
    Ok(is_orthogonal(m)? && m.det()?.is_one())
}

/// Copy of `m` with `1` added to entry `(r, c)`.
pub fn perturb_entry(m: &ExactMatrix, r: usize, c: usize) -> ExactMatrix {
    let mut out = m.clone();
    out.set(r, c, m.get(r, c) + &CycScalar::one());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_form_are_symplectic() {
        for m in 1..=3 {
            assert!(is_symplectic(&ExactMatrix::identity(2 * m)).unwrap());
            assert!(is_symplectic(&symplectic_form(m)).unwrap());
        }
    }

    #[test]
    fn form_squares_to_minus_identity() {
        let j = symplectic_form(3);
        assert_eq!(j.mul(&j).unwrap(), ExactMatrix::identity(6).neg());
        assert_eq!(j.transpose(), j.neg());
    }

    #[test]
    fn diagonal_scaling_in_sp1() {
        let half = CycScalar::from_int(1).div(&CycScalar::from_int(2)).unwrap();
        let m = ExactMatrix::diagonal(&[CycScalar::from_int(2), half]);
        assert!(is_symplectic(&m).unwrap());
        let bad = ExactMatrix::diagonal(&[CycScalar::from_int(2), CycScalar::from_int(2)]);
        assert!(!is_symplectic(&bad).unwrap());
    }

    #[test]
    fn odd_size_is_a_shape_error() {
        assert!(matches!(
            is_symplectic(&ExactMatrix::identity(3)),
            Err(GroupError::ShapeMismatch(_))
        ));
    }

    #[test]
    fn reflection_is_orthogonal_not_special() {
        let r = ExactMatrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        assert!(is_orthogonal(&r).unwrap());
        assert!(!is_special_orthogonal(&r).unwrap());
        assert!(GroupElement::new(r.clone(), ClassicalGroup::O(2)).is_ok());
        assert_eq!(
            GroupElement::new(r, ClassicalGroup::SO(2)),
            Err(GroupError::NotInGroup(ClassicalGroup::SO(2)))
        );
    }

    #[test]
    fn perturbed_identity_is_rejected() {
        let m = perturb_entry(&ExactMatrix::identity(4), 0, 0);
        assert!(!is_symplectic(&m).unwrap());
        assert!(!is_orthogonal(&m).unwrap());
    }
}
