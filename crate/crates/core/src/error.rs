use thiserror::Error;

use crate::axioms::AxiomId;
use crate::pointset::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} points exceed the supported maximum of 64")]
    TooManyPoints(usize),
    #[error("point {point} is outside a universe of {n} points")]
    PointOutOfRange { point: usize, n: usize },
    #[error("subset belongs to a universe of {found} points, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("family must contain the empty set and the whole space")]
    MissingEmptyOrFull,
    #[error("union of {0} and {1} is not in the family")]
    NotClosedUnderUnion(PointSet, PointSet),
    #[error("intersection of {0} and {1} is not in the family")]
    NotClosedUnderIntersection(PointSet, PointSet),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("blocks overlap at point {0}")]
    OverlappingBlocks(usize),
    #[error("point {0} is not covered by any block")]
    UncoveredPoint(usize),
    #[error("empty block in decomposition")]
    EmptyBlock,
    #[error("enumeration is limited to 7 points, got {0}")]
    SizeTooLarge(usize),
    #[error("{0} is not a point-level axiom")]
    NotPointLevel(AxiomId),
}
