use crate::bmhomology::{bm_homology, HomologyError, HomologyResult};
use crate::intlinalg::ClassCoords;
use crate::simplicial::{Chain, SimplicialPair};

use super::{
    check_pseudomanifold, expand_to_unit, glue, instances_to_chain, pair_faces, PseudoManifold, PseudoManifoldReport,
    PseudocycleError,
};

/// A glued pseudomanifold together with its map to the target pair, which is
/// carried by the instance maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombPseudocycle {
    pub m: PseudoManifold,
    pub target: SimplicialPair,
    pub report: PseudoManifoldReport,
}

impl CombPseudocycle {
    pub fn dimension(&self) -> usize {
        self.m.dimension
    }

    /// Image of the oriented top cells, reduced relative to `L`.
    pub fn pushforward(&self) -> Chain {
        self.target.relative_reduce(&instances_to_chain(self.m.dimension, &self.m.instances))
    }
}

/// Builds the pseudocycle of a relative cycle: unit expansion, face pairing,
/// gluing, and the pseudomanifold check.
pub fn psi(c: &Chain, pair: &SimplicialPair) -> Result<CombPseudocycle, PseudocycleError> {
    if let Some(s) = c.simplices().find(|s| !pair.k.contains(s)) {
        return Err(PseudocycleError::NotOnTarget(s.clone()));
    }
    let instances = expand_to_unit(c)?;
    let mut pairing = pair_faces(&instances, pair)?;
    pairing.dimension = c.degree();
    let m = glue(&instances, &pairing)?;
    let report = check_pseudomanifold(&m);
    Ok(CombPseudocycle { m, target: pair.clone(), report })
}

/// Class of the pushforward in `H_k(K, L)`.
pub fn phi(f: &CombPseudocycle) -> Result<ClassCoords, PseudocycleError> {
    phi_with(f, &bm_homology(&f.target))
}

/// [`phi`] against precomputed homology of the target.
pub fn phi_with(f: &CombPseudocycle, h: &HomologyResult) -> Result<ClassCoords, PseudocycleError> {
    h.class_coordinates(&f.pushforward()).map_err(|e| match e {
        HomologyError::NotARelativeCycle => PseudocycleError::NotClosedRelL,
        e => e.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTrip {
    pub original: ClassCoords,
    pub recovered: ClassCoords,
}

impl RoundTrip {
    pub fn agrees(&self) -> bool {
        self.original == self.recovered
    }
}

/// Coordinates of `c` next to the coordinates of `phi(psi(c))`.
pub fn roundtrip(c: &Chain, pair: &SimplicialPair) -> Result<RoundTrip, PseudocycleError> {
    let h = bm_homology(pair);
    roundtrip_with(c, pair, &h)
}

pub fn roundtrip_with(c: &Chain, pair: &SimplicialPair, h: &HomologyResult) -> Result<RoundTrip, PseudocycleError> {
    let f = psi(c, pair)?;
    let recovered = phi_with(&f, h)?;
    let original = h.class_coordinates(c).map_err(|e| match e {
        HomologyError::NotARelativeCycle => PseudocycleError::NotClosedRelL,
        e => e.into(),
    })?;
    Ok(RoundTrip { original, recovered })
}

pub fn roundtrip_check(c: &Chain, pair: &SimplicialPair) -> Result<bool, PseudocycleError> {
    Ok(roundtrip(c, pair)?.agrees())
}
