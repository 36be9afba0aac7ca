//! Decisions built on the induced maps: Bezout witnesses, connectivity of
//! `J`, obstructions to a section of `f_⊗`, and the degree bookkeeping of the
//! Moore–Postnikov tower for bundles.

mod bezout;
mod connectivity;
mod decide;
mod obstruction;

pub use bezout::*;
pub use connectivity::*;
pub use decide::*;
pub use obstruction::*;

use thiserror::Error;

use crate::induced::InducedError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftingError {
    #[error("m = {m} and n = {n} are not coprime")]
    NotCoprime { m: u64, n: u64 },
    #[error("n = {0} must be odd")]
    EvenN(u64),
    #[error("hypothesis failure{}: {reason}", .degree.map(|d| format!(" at degree {d}")).unwrap_or_default())]
    HypothesisFailure { degree: Option<u64>, reason: String },
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    #[error(transparent)]
    Induced(#[from] InducedError),
}
