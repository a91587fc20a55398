//! Borel-Moore homology of finite pairs and the tools built on it.

mod cap;
mod duality;
mod fundamental;
mod homology;
mod mayer_vietoris;
mod star;

use thiserror::Error;

use crate::simplicial::{Simplex, SimplicialError};

pub use cap::cap_product;
pub use duality::{pd_check, PdDegree, PdReport};
pub use fundamental::{default_fundamental_cycle, fundamental_cycle, local_restriction, FundamentalClassResult};
pub use homology::{
    bm_homology, cohomology, homology, ChainBasis, CohomologyResult, DegreeCohomology, DegreeHomology, HomologyResult,
};
pub use mayer_vietoris::{mv_check, MvNode, MvReport, MvTerm};
pub use star::{star_neighborhood_vanishing, StarReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("simplex {0} is not in the complex")]
    ChainNotOnComplex(Simplex),
    #[error("chain is not a relative cycle")]
    NotARelativeCycle,
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("orientation conflict across {face}")]
    NonOrientable { face: Simplex },
    #[error("interior face {face} has {cofaces} top cofaces, expected 2")]
    NotPseudoManifold { face: Simplex, cofaces: usize },
    #[error("top simplex {0} is not reachable from the seed")]
    Disconnected(Simplex),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("simplex {0} lies at infinity")]
    SimplexAtInfinity(Simplex),
    #[error("{0} is not a top simplex of the complex")]
    NotTopSimplex(Simplex),
    #[error("no top simplex outside infinity")]
    NoTopSimplex,
    #[error("U and V are not subcomplexes covering K")]
    NotCover,
    #[error("not a subcomplex")]
    NotSubcomplex,
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}
