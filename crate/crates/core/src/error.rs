use thiserror::Error;

/// Errors raised by the enumeration engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("height must be at least 1")]
    ZeroHeight,

    #[error("volume bound {bound} is smaller than height {height}")]
    BoundTooSmall { height: usize, bound: u32 },

    #[error("height mismatch: {left} vs {right}")]
    HeightMismatch { left: usize, right: usize },

    #[error("index tuple {0:?} is invalid for this sequence")]
    InvalidIndex(Vec<u32>),

    #[error("integer overflow at index {0:?}")]
    Overflow(Vec<u32>),

    #[error("leading coefficient {0} is not invertible over the integers")]
    NonUnitLeading(i64),

    #[error("operation requires a triangular sequence")]
    NotTriangular,

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("{lower:?} is not below {upper:?} in the projection order")]
    NotComparable { lower: Vec<u32>, upper: Vec<u32> },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("oracle guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("series failed to stabilize at volume offset {offset}: {first} vs {second}")]
    Stabilization { offset: u32, first: i64, second: i64 },

    #[error("finite differences of order {order} do not vanish for volume {volume}")]
    NonVanishingDifference { volume: u32, order: usize },

    #[error("series with constant term {0} has no integer reciprocal")]
    NonUnitConstant(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
