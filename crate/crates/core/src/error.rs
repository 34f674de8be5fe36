use thiserror::Error;

/// Errors produced by word operations, graph construction and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("positions {i} and {j} hold the same symbol")]
    EqualSymbols { i: usize, j: usize },
    #[error("position {index} is outside a word of length {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("swap positions must be distinct and 1-based, got ({0}, {1})")]
    InvalidSwap(usize, usize),
    #[error("symbol {symbol} is outside the alphabet [1, {sigma}]")]
    SymbolOutOfRange { symbol: usize, sigma: usize },
    #[error("position {0} is not in the set")]
    Missing(usize),
    #[error("position {0} is already in the set")]
    Duplicate(usize),
    #[error("graph would have {count} vertices, above the cap of {cap}")]
    TooLarge { count: String, cap: usize },
    #[error("word {0} is not a vertex of this graph")]
    UnknownVertex(String),
    #[error("invalid Parikh vector: {0}")]
    InvalidParikh(String),
    #[error("words have different Parikh vectors")]
    ParikhMismatch,
    #[error("words have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("invalid cycle cover: {0}")]
    InvalidCover(String),
    #[error("enumeration needs a non-empty start word")]
    EmptyWord,
    #[error("checkpoint does not match the replayed enumeration: {0}")]
    CheckpointMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
