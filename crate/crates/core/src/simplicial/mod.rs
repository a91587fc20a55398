//! Simplices, complexes and pairs, integer chains and cochains, and
//! barycentric subdivision.
//!
//! Oriented simplices are represented by their sorted vertex list plus a
//! sign; a tuple with a repeated vertex is degenerate and counts as zero.

mod chain;
mod complex;
pub mod generators;
pub mod random;
mod simplex;
mod subdivision;

use thiserror::Error;

pub use chain::{Chain, Cochain};
pub use complex::{Complex, SimplicialPair};
pub use simplex::{canonicalize, permutation_sign, Sign, Simplex, VertexId};
pub use subdivision::{barycentric_subdivision, cone, homotopy_defect, subdivide_pair, Subdivision};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("simplex {0} is not in the complex")]
    SimplexNotInComplex(Simplex),
    #[error("simplex has a repeated vertex: {0:?}")]
    RepeatedVertex(Vec<VertexId>),
    #[error("a simplex needs at least one vertex")]
    EmptySimplex,
    #[error("expected a degree-{expected} simplex, found degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("infinity part is not a subcomplex")]
    NotSubcomplex,
    #[error("pair is not full; subdivide once first")]
    NotFull,
}
