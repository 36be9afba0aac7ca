//! Homomorphisms of finitely generated abelian groups as integer matrices,
//! and the maps the group operations induce on homotopy groups.

mod formulas;
mod hom;

pub use formulas::*;
pub use hom::{AbHom, ImageDescriptor};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InducedError {
    #[error("{op}: out of range ({bound})")]
    OutOfRange { op: &'static str, bound: String },
    #[error("n = {0} must be odd")]
    EvenN(u64),
    #[error("m = {m} and n = {n} are not coprime")]
    NotCoprime { m: u64, n: u64 },
    #[error("(u, v) = ({u}, {v}) is not a Bezout witness for (m, n) = ({m}, {n}): need |vn - 4um^2| = 1")]
    BadBezout { m: u64, n: u64, u: u64, v: u64 },
    #[error("malformed homomorphism: {0}")]
    MalformedHom(String),
    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InducedOp {
    DirectSum,
    RFold,
    Doubling,
    TensorSpO,
    TensorQuotient,
    TensorSpSp,
    SquareTensor,
    Ttilde,
    J,
}

impl InducedOp {
    pub const ALL: [InducedOp; 9] = [
        InducedOp::DirectSum,
        InducedOp::RFold,
        InducedOp::Doubling,
        InducedOp::TensorSpO,
        InducedOp::TensorQuotient,
        InducedOp::TensorSpSp,
        InducedOp::SquareTensor,
        InducedOp::Ttilde,
        InducedOp::J,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InducedOp::DirectSum => "direct-sum",
            InducedOp::RFold => "r-fold",
            InducedOp::Doubling => "doubling",
            InducedOp::TensorSpO => "tensor-sp-o",
            InducedOp::TensorQuotient => "tensor-quotient",
            InducedOp::TensorSpSp => "tensor-sp-sp",
            InducedOp::SquareTensor => "square-tensor",
            InducedOp::Ttilde => "ttilde",
            InducedOp::J => "J",
        }
    }

    pub fn valid_range(self) -> &'static str {
        match self {
            InducedOp::DirectSum => RANGE_DIRECT_SUM,
            InducedOp::RFold => RANGE_R_FOLD,
            InducedOp::Doubling => RANGE_DOUBLING,
            InducedOp::TensorSpO => RANGE_TENSOR_SP_O,
            InducedOp::TensorQuotient => RANGE_TENSOR_QUOTIENT,
            InducedOp::TensorSpSp => RANGE_TENSOR_SP_SP,
            InducedOp::SquareTensor => RANGE_SQUARE_TENSOR,
            InducedOp::Ttilde => RANGE_TTILDE,
            InducedOp::J => RANGE_J,
        }
    }

    pub fn provenance(self) -> &'static str {
        match self {
            InducedOp::DirectSum => "block direct sum on Sp: (x, y) -> x + y",
            InducedOp::RFold => "r-fold block sum on Sp: x -> r x",
            InducedOp::Doubling => "doubling O(n) -> Sp(n): onto 2 pi_i Sp(n) for i = 3, 7 mod 8, else one side trivial",
            InducedOp::TensorSpO => "tensor Sp(m) x O(n) -> Sp(mn): (x, y) -> n x + 2m y",
            InducedOp::TensorQuotient => "tensor PSp(m) x SO(n) -> PSp(mn), n odd: (x, y) -> n x + 2m y",
            InducedOp::TensorSpSp => "tensor Sp(m) x Sp(n) -> O(4mn): n x + m y (i = 3), 4(n x + m y) (i = 7), else 0 (mod 8)",
            InducedOp::SquareTensor => "tensor square Sp(m) -> O(4m^2): 2m x (i = 3), 8m x (i = 7), else 0 (mod 8)",
            InducedOp::Ttilde => "auxiliary map PSp(m) x SO(n) -> SO(4um^2 + vn): z x + y (i = 1); v y (i = 0, 1), 2um x + v y (i = 3), 8um x + v y (i = 7), else 0 (mod 8)",
            InducedOp::J => "J = (tensor, B of the auxiliary map) on classifying spaces, read in group degree i - 1",
        }
    }
}

impl FromStr for InducedOp {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        InducedOp::ALL
            .into_iter()
            .find(|op| op.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown induced map `{s}`"))
    }
}

impl fmt::Display for InducedOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters for one formula evaluation. Which fields are required depends
/// on the operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaContext {
    pub i: u64,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub r: Option<u64>,
    pub u: Option<u64>,
    pub v: Option<u64>,
    pub z: ZParam,
}

impl FormulaContext {
    pub fn new(i: u64) -> Self {
        FormulaContext {
            i,
            m: None,
            n: None,
            r: None,
            u: None,
            v: None,
            z: ZParam::Unknown,
        }
    }
}

fn need(x: Option<u64>, name: &'static str) -> Result<u64, InducedError> {
    x.ok_or(InducedError::MissingParameter(name))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    /// `None` when the map does not involve `z`.
    pub z: Option<u8>,
    pub hom: AbHom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedResult {
    pub op: InducedOp,
    pub candidates: Vec<Candidate>,
}

impl InducedResult {
    /// True when every admissible `z` gives the same matrix.
    pub fn is_z_independent(&self) -> bool {
        self.candidates.windows(2).all(|w| w[0].hom == w[1].hom)
    }
}

pub fn evaluate(op: InducedOp, ctx: &FormulaContext) -> Result<InducedResult, InducedError> {
    let i = ctx.i;
    let single = |h: AbHom| vec![Candidate { z: None, hom: h }];
    let from_pairs = |v: Vec<(u8, AbHom)>| {
        v.into_iter()
            .map(|(z, hom)| Candidate { z: Some(z), hom })
            .collect::<Vec<_>>()
    };
    let candidates = match op {
        InducedOp::DirectSum => single(hom_direct_sum(i, need(ctx.m, "m")?, need(ctx.n, "n")?)?),
        InducedOp::RFold => single(hom_r_fold(i, need(ctx.n, "n")?, need(ctx.r, "r")?)?),
        InducedOp::Doubling => single(hom_doubling(i, need(ctx.n, "n")?)?),
        InducedOp::TensorSpO => single(hom_tensor_sp_o(i, need(ctx.m, "m")?, need(ctx.n, "n")?)?),
        InducedOp::TensorQuotient => {
            single(hom_tensor_quotient(i, need(ctx.m, "m")?, need(ctx.n, "n")?)?)
        }
        InducedOp::TensorSpSp => single(hom_tensor_sp_sp(i, need(ctx.m, "m")?, need(ctx.n, "n")?)?),
        InducedOp::SquareTensor => single(hom_square_tensor(i, need(ctx.m, "m")?)?),
        InducedOp::Ttilde => from_pairs(hom_ttilde_candidates(
            i,
            need(ctx.m, "m")?,
            need(ctx.n, "n")?,
            need(ctx.u, "u")?,
            need(ctx.v, "v")?,
            ctx.z,
        )?),
        InducedOp::J => from_pairs(hom_j_candidates(
            i,
            need(ctx.m, "m")?,
            need(ctx.n, "n")?,
            need(ctx.u, "u")?,
            need(ctx.v, "v")?,
            ctx.z,
        )?),
    };
    Ok(InducedResult { op, candidates })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn op_names_round_trip() {
        for op in InducedOp::ALL {
            assert_eq!(op.name().parse::<InducedOp>(), Ok(op));
        }
        assert_eq!("j".parse::<InducedOp>(), Ok(InducedOp::J));
    }

    #[test]
    fn dispatch() {
        let mut ctx = FormulaContext::new(3);
        ctx.m = Some(2);
        ctx.n = Some(5);
        let r = evaluate(InducedOp::TensorQuotient, &ctx).unwrap();
        assert_eq!(r.candidates.len(), 1);
        assert_eq!(
            evaluate(InducedOp::Ttilde, &ctx),
            Err(InducedError::MissingParameter("u"))
        );
        ctx.i = 1;
        ctx.u = Some(1);
        ctx.v = Some(3);
        let r = evaluate(InducedOp::Ttilde, &ctx).unwrap();
        assert_eq!(r.candidates.len(), 2);
        assert!(!r.is_z_independent());
        ctx.i = 4;
        assert!(evaluate(InducedOp::J, &ctx).unwrap().is_z_independent());
    }
}
