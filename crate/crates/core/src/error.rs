use crate::graphs::Vertex;

/// Errors raised by the algebraic and geometric operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid variable set: {0}")]
    InvalidVariableSet(&'static str),
    #[error("operands live over different variable sets")]
    VariableSetMismatch,
    #[error("exponent vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("block {block} out of range (variable set has {blocks} blocks)")]
    BlockOutOfRange { block: usize, blocks: usize },
    #[error("variable x{block}_{position} does not exist")]
    VariableOutOfRange { block: usize, position: usize },
    #[error("exponent overflow")]
    Overflow,
    #[error("{0} is undefined for the zero ideal")]
    ZeroIdeal(&'static str),
    #[error("{0} is undefined for the unit ideal")]
    UnitIdeal(&'static str),
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("edge {0} -- {1} joins two vertices of the same block")]
    IntraBlockEdge(Vertex, Vertex),
    #[error("graph has {0} vertices, transversal search supports at most 64")]
    TooManyVertices(usize),
    #[error("cover ideal routes disagree")]
    CoverRouteMismatch,
    #[error("class hint does not apply: {0}")]
    HintMismatch(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
