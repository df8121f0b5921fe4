//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("generator is not homogeneous")]
    NonHomogeneous,

    #[error("local algebra dimension did not stabilize by truncation degree {trunc}")]
    Unstable { trunc: u32 },

    #[error("group is not cyclic")]
    NotCyclic,

    #[error("unknown standard module `{0}`")]
    UnknownModule(String),

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("map does not commute with the group action")]
    NonEquivariant,

    #[error("degenerate plane data: {0}")]
    DegeneratePlane(String),

    #[error("hyperplane rejected: {0}")]
    BadSection(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
