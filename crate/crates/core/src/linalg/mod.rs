//! Exact arithmetic: the cyclotomic field ℚ(ζ₈), dense matrices over it, and
//! integer matrices with Smith normal form.

mod int_matrix;
mod matrix;
mod scalar;

pub use int_matrix::{smith_normal_form, IntMatrix, SmithForm};
pub use matrix::ExactMatrix;
pub use scalar::CycScalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
}
