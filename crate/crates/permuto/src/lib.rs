//! Exact-arithmetic computations with permutohedra and their relatives.
//!
//! The crate computes volumes, lattice-point counts, face/vertex
//! combinatorics, triangulations, and mixed Eulerian invariants of
//! permutohedra, generalized permutohedra (weighted Minkowski sums of
//! coordinate simplices), root polytopes, and Weyl-group weight polytopes.
//! Every quantity is computed over arbitrary-precision rationals, and most
//! quantities are available through several independent routes that
//! cross-validate each other.

pub mod algebra;
pub mod brion;
pub mod eulerian;
pub mod genperm;
pub mod minkowski;
pub mod permutohedron;
pub mod rootpoly;
pub mod tableaux;
pub mod weyl;

/// Errors shared by all modules.
///
/// `Domain` marks invalid inputs, `Resource` marks refusals of computations
/// that exceed the configured desk-scale guards, and `Internal` marks a
/// failed cross-route consistency assertion (i.e. an implementation bug).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
