//! Combinatorial pseudocycles: integral cycles glued into oriented
//! pseudomanifolds, their classes in homology, and bordisms between them.

mod bordism;
mod cycle;
mod glue;
mod instance;
mod pairing;

use num_bigint::BigInt;
use thiserror::Error;

use crate::bmhomology::HomologyError;
use crate::simplicial::{Simplex, VertexId};

pub use bordism::{check_bordism, glue_equivalence, nullbordism, Bordism, BordismReport, BoundaryMatch};
pub use cycle::{phi, phi_with, psi, roundtrip, roundtrip_check, roundtrip_with, CombPseudocycle, RoundTrip};
pub use glue::{check_pseudomanifold, glue, PseudoManifold, PseudoManifoldReport};
pub use instance::{expand_to_unit, face_inclusion, instances_to_chain, SimplexInstance};
pub use pairing::{all_faces, pair_faces, FacePair, FacePairing, FaceRef};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PseudocycleError {
    #[error("degenerate simplex {0:?}")]
    DegenerateSimplex(Vec<VertexId>),
    #[error("coefficient {0} is too large to expand")]
    CoefficientTooLarge(BigInt),
    #[error("not a cycle: face {face} has multiplicity {multiplicity}")]
    NotACycle { face: Simplex, multiplicity: BigInt },
    #[error("inconsistent pairing: {0}")]
    InconsistentPairing(String),
    #[error("simplex {0} is not in the target complex")]
    NotOnTarget(Simplex),
    #[error("pushforward is not a relative cycle")]
    NotClosedRelL,
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("internal error: {0}")]
    Internal(String),
}
