//! Exact integer linear algebra: Smith normal form, integer solving, kernels,
//! and finitely generated abelian groups read off from chain complexes.
//!
//! Everything is computed over `BigInt`; no entry ever overflows.

mod group;
mod matrix;
mod smith;

use thiserror::Error;

pub use group::{
    homology_group, in_image, induced_map, is_exact_at, is_surjective, is_zero_map, AbelianGroup, ClassCoords,
    HomologyGroup,
};
pub use matrix::IntMatrix;
pub use smith::{integer_kernel, smith_normal_form, solve_integer, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("boundary composition d_k * d_(k+1) is nonzero")]
    CompositionNonzero,
    #[error("matrix does not commute with the boundary operators")]
    NotChainMap,
    #[error("vector is not a cycle")]
    NotACycle,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid abelian group: {0}")]
    InvalidGroup(String),
}
