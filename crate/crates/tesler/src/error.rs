//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by constructors and operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("hook sums must contain at least one entry")]
    EmptyHookSums,
    #[error("hook sums must be nonnegative")]
    NegativeHookSum,
    #[error("index {index} out of range for size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("rows do not form an upper-triangular shape of size {expected}")]
    ShapeMismatch { expected: usize },
    #[error("entries must be nonnegative")]
    NegativeEntry,
    #[error("hook sum of row {row} does not match the prescribed value")]
    HookSumViolation { row: usize },
    #[error("netflow vector must sum to zero")]
    NetflowNotZeroSum,
    #[error("flow violates conservation at vertex {vertex}")]
    FlowConservation { vertex: usize },
    #[error("operation requires a positive leading hook sum; strip leading zeros first")]
    NotReduced,
    #[error("operation requires every hook sum positive")]
    PositiveHooksRequired,
    #[error("filling is not a valid Tesler tableau")]
    InvalidTableau,
    #[error("objects are defined against different hook sums")]
    HookSumsDiffer,
    #[error("entries do not satisfy the transportation-point invariants")]
    InvalidTransportationPoint,
    #[error("parameters outside the supported domain: {0}")]
    OutOfDomain(String),
    #[error("unsupported at this size: {0}")]
    Unsupported(String),
    #[error("division left a nonzero remainder")]
    NonExactDivision,
    #[error("malformed serialized value: {0}")]
    BadSerialization(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
