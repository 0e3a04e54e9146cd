use thiserror::Error;

use crate::point::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GnsError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("least upper bound of an empty set")]
    EmptySet,

    #[error("the zero vector cannot be a gap")]
    ZeroGap,

    #[error("duplicate gap {0}")]
    DuplicateGap(Point),

    #[error("not closed under addition: {sum} = {left} + {right} with both summands in the semigroup")]
    NotClosed { sum: Point, left: Point, right: Point },

    #[error("operation requires positive genus")]
    GenusZero,

    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },

    #[error("{0} is not a special gap")]
    NotSpecialGap(Point),

    #[error("{0} is not a gap")]
    NotAGap(Point),

    #[error("semigroup has no Frobenius element")]
    NoFrobenius,

    #[error("invalid corner {0}: coordinates must be >= 1 with at least one > 1")]
    InvalidCorner(Point),

    #[error("forced gap {gap} is not a nonzero point below corner {corner}")]
    ForcedGapOutsideBox { gap: Point, corner: Point },

    #[error("box below corner {corner} has {size} points, the enumeration kernel supports at most {max}")]
    BoxTooLarge { corner: Point, size: usize, max: usize },

    #[error("expected g1 < g2 in the natural partial order, got {g1} and {g2}")]
    NotIncreasingPair { g1: Point, g2: Point },

    #[error("multiple of the zero vector")]
    ZeroBase,

    #[error("unknown export format `{0}`")]
    UnknownFormat(String),

    #[error("unknown statement id `{0}`")]
    UnknownStatement(String),

    #[error("malformed document: {0}")]
    Parse(String),
}

pub type Result<T, E = GnsError> = std::result::Result<T, E>;
