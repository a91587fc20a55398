use crate::intlinalg::{is_surjective, AbelianGroup, IntMatrix};
use crate::simplicial::{subdivide_pair, SimplicialPair};

use super::{bm_homology, cap_product, cohomology, default_fundamental_cycle, HomologyError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdDegree {
    /// Cohomological degree.
    pub q: usize,
    /// `H^q` of the complement complex.
    pub cohomology: AbelianGroup,
    /// `H_{n-q}(K, L)`.
    pub homology: AbelianGroup,
    pub matches: bool,
    /// Matrix of `α ↦ α ∩ [X]` in generator coordinates (closed case only).
    pub cap_matrix: Option<IntMatrix>,
    pub cap_isomorphism: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdReport {
    pub dimension: usize,
    /// Whether the pair had to be subdivided to make the complement full.
    pub subdivided: bool,
    pub degrees: Vec<PdDegree>,
}

impl PdReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|d| d.matches && d.cap_isomorphism.unwrap_or(true))
    }
}

/// Compares `H^q(|K| - |L|)` with `H_{n-q}(K, L)` for every `q`.
///
/// The cohomology side is computed on the full subcomplex spanned by the
/// vertices outside `L`, after one barycentric subdivision when the pair is
/// not full. When `L` is empty, the cap map with the fundamental cycle is
/// also computed and checked to be an isomorphism.
pub fn pd_check(pair: &SimplicialPair) -> Result<PdReport, HomologyError> {
    let fundamental = default_fundamental_cycle(pair)?;
    let n = fundamental.cycle.degree();
    let homology = bm_homology(pair);

    let (complement, subdivided) = if pair.is_full() {
        (pair.complement_complex()?, false)
    } else {
        let (sd_pair, _) = subdivide_pair(pair);
        (sd_pair.complement_complex()?, true)
    };
    let coh = cohomology(&complement);
    let closed = pair.l.is_empty();

    let mut degrees = Vec::with_capacity(n + 1);
    for q in 0..=n {
        let hq = coh.group(q);
        let hn = homology.group(n - q);
        let matches = hq == hn;
        let (cap_matrix, cap_isomorphism) = if closed {
            let columns = coh
                .degrees
                .get(q)
                .map(|d| d.representatives.as_slice())
                .unwrap_or_default()
                .iter()
                .map(|alpha| {
                    homology.class_coordinates(&cap_product(alpha, &fundamental.cycle)).map(|c| c.to_vec())
                })
                .collect::<Result<Vec<_>, _>>()?;
            let m = IntMatrix::from_columns(&columns, hn.num_generators());
            let iso = matches && is_surjective(&m, &hn.moduli());
            (Some(m), Some(iso))
        } else {
            (None, None)
        };
        degrees.push(PdDegree { q, cohomology: hq, homology: hn, matches, cap_matrix, cap_isomorphism });
    }
    Ok(PdReport { dimension: n, subdivided, degrees })
}
