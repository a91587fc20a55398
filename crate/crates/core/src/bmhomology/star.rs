use crate::intlinalg::AbelianGroup;
use crate::simplicial::{barycentric_subdivision, Complex};

use super::{homology, HomologyError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarReport {
    pub kdim: usize,
    /// Union of the selected closed stars, as a subcomplex of `sd K`.
    pub neighborhood: Complex,
    /// `H_l(U)` for `l = 0..=dim U`.
    pub groups: Vec<AbelianGroup>,
    pub vanishes: bool,
}

/// Builds `U`, the union of the closed stars in `sd K` of the barycenters
/// `b_s` for simplices `s` of `K` with `dim s >= dim K - kdim` meeting `a`, and
/// checks `H_l(U) = 0` for every `l > kdim`.
pub fn star_neighborhood_vanishing(k: &Complex, a: &Complex, kdim: usize) -> Result<StarReport, HomologyError> {
    if !a.is_subcomplex_of(k) {
        return Err(HomologyError::NotSubcomplex);
    }
    let n = k.dim().unwrap_or(0);
    let min_dim = n.saturating_sub(kdim);
    let a_vertices: std::collections::BTreeSet<_> = a.vertices().collect();
    let sd = barycentric_subdivision(k);
    let mut neighborhood = Complex::new();
    for s in k.iter() {
        if s.dim() < min_dim || !s.vertices().iter().any(|v| a_vertices.contains(v)) {
            continue;
        }
        let b = crate::simplicial::Simplex::vertex(sd.barycenter(s).expect("every simplex has a barycenter"));
        neighborhood = neighborhood.union(&sd.complex.closed_star(&b)?);
    }
    let groups = homology(&neighborhood).groups();
    let vanishes = groups.iter().skip(kdim + 1).all(AbelianGroup::is_trivial);
    Ok(StarReport { kdim, neighborhood, groups, vanishes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::generators::*;

    #[test]
    fn facet_of_a_tetrahedron() {
        let k = simplex(3);
        let a = Complex::from_maximal(&[vec![0, 1, 2]]).unwrap();
        let r = star_neighborhood_vanishing(&k, &a, 2).unwrap();
        assert!(r.vanishes);
        assert_eq!(r.groups[0], AbelianGroup::free(1));
    }

    #[test]
    fn empty_subset() {
        let r = star_neighborhood_vanishing(&simplex(3), &Complex::new(), 1).unwrap();
        assert!(r.neighborhood.is_empty());
        assert!(r.vanishes);
    }

    #[test]
    fn vertex_of_the_torus() {
        let k = torus();
        let a = Complex::from_maximal(&[vec![0]]).unwrap();
        let r = star_neighborhood_vanishing(&k, &a, 0).unwrap();
        assert!(r.vanishes);
        assert_eq!(r.groups, vec![AbelianGroup::free(1), AbelianGroup::trivial(), AbelianGroup::trivial()]);
        // six triangles around the vertex, each split into six
        assert_eq!(r.neighborhood.count_of_dim(2), 36);
    }

    #[test]
    fn every_level_on_the_torus() {
        let k = torus();
        let a = Complex::from_maximal(&[vec![0, 1]]).unwrap();
        for kdim in 1..=2 {
            assert!(star_neighborhood_vanishing(&k, &a, kdim).unwrap().vanishes);
        }
    }

    #[test]
    fn foreign_subset_is_rejected() {
        let a = Complex::from_maximal(&[vec![7, 8]]).unwrap();
        assert!(star_neighborhood_vanishing(&simplex(2), &a, 1).is_err());
    }
}
