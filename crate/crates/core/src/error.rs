use thiserror::Error;

use crate::lattice::{IsometryKind, TriCell};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cells {0} and {1} are not adjacent and do not form a lozenge")]
    InvalidLozenge(TriCell, TriCell),
    #[error("center is not a symmetry center of the lattice for {0:?}")]
    IncompatibleCenter(IsometryKind),
    #[error("label {label} in set {set} is outside [1, {n}]")]
    LabelOutOfRange { set: String, label: u32, n: u32 },
    #[error("n = {0} is larger than the supported maximum of 63")]
    TooLarge(u32),
    #[error("label 1 lies in both {0} and {1}, which would remove the same cell twice")]
    FlipHypothesis(String, String),
    #[error("cell {0} is removed twice (by {1} and {2})")]
    HoleCollision(TriCell, String, String),
    #[error("hole {0} from {1} lies outside the region")]
    HoleOutsideRegion(TriCell, String),
    #[error("W-triple meets a forbidden set: {0}")]
    InvalidWTriple(String),
    #[error("U = {0:?} is not an admissible partition class")]
    InvalidUClass(Vec<u32>),
    #[error("path systems have {starts} starts but {ends} ends")]
    PathSystemMismatch { starts: usize, ends: usize },
    #[error("LGV summand for U = {0:?} is negative; start/end points are not compatible")]
    NegativeSummand(Vec<u32>),
    #[error("region has no lozenge tiling")]
    Untileable,
    #[error("region is not invariant under {0:?}")]
    NotInvariant(IsometryKind),
    #[error("spec is not {0}")]
    NotSymmetric(&'static str),
    #[error("Pochhammer base must be positive, got {0}")]
    NonPositivePochhammer(i64),
    #[error("could not assign Kasteleyn signs: {0}")]
    SignAssignment(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
