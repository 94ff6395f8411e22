//! Exact enumeration of bounded-weight assignments on simple graphs.
//!
//! For a simple graph `G` on `m` vertices and a bound `n`, the library counts
//! assignments `α ∈ {0..n}^m` with `α_i + α_j ≤ n` on every edge, reconstructs
//! the exact rational generating function of those counts, extracts the
//! associated Ehrhart quasi-polynomial, and machine-checks the structural
//! properties these objects are known to satisfy (pole order, reciprocity,
//! palindromic numerators, h-vector constraints).
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals
//! throughout, no floating point anywhere.

pub mod algebra;
pub mod cli;
pub mod closed_forms;
pub mod corpus;
pub mod counting;
pub mod genfun;
pub mod graph;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("graph parse error: {0}")]
    GraphParse(String),

    #[error("unknown family: {0}")]
    UnknownFamily(String),

    #[error("invalid family parameters: {0}")]
    FamilyParams(String),

    #[error("exact division failed: {0}")]
    ExactDivision(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cost guard exceeded: {0}")]
    CostGuard(String),

    #[error("series reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
