use thiserror::Error;

use crate::seqcore::FinSeq;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is not strictly increasing at index {index}")]
    NotIncreasing { index: usize },

    #[error("index {index} out of range for sequence of length {len}")]
    OutOfRange { index: usize, len: usize },

    #[error("invalid concatenation: {left} is not below {right}")]
    InvalidConcat { left: u32, right: u32 },

    #[error("sequence {seq} does not fit the window (N={n}, L={l})")]
    OutsideWindow { seq: FinSeq, n: u32, l: usize },

    #[error("window exhausted: length bound {l} reached while still inside T*(C)")]
    WindowExhaustion { l: usize },

    #[error("no extension of {0} inside the window reaches C*")]
    ExtensionLeavesWindow(FinSeq),

    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),

    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("carrier size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("carrier index {index} out of range for carrier of size {size}")]
    IndexOutOfCarrier { index: usize, size: usize },

    #[error("array value missing for {0}")]
    MissingValue(FinSeq),

    #[error("array value given for {0}, which is not in the family")]
    StrayValue(FinSeq),

    #[error("array mixes index values and sequence values")]
    MixedArrayValues,

    #[error("array values must be {expected}")]
    WrongValueKind { expected: &'static str },

    #[error("prefix of length {have} is too short, need at least {need}")]
    InsufficientPrefix { have: usize, need: usize },

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("y-prefix entry {0} is not binary")]
    NonBinary(u32),

    #[error("not a block: {0}")]
    NotABlock(String),

    #[error("invalid window: {0}")]
    InvalidWindow(String),
}
