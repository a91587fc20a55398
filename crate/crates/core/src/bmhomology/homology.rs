use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::intlinalg::{homology_group, AbelianGroup, ClassCoords, HomologyGroup, IntMatrix};
use crate::simplicial::{Chain, Cochain, Complex, Simplex, SimplicialPair};

use super::HomologyError;

/// Ordered bases of the relative chain groups `C_d(K) / C_d(L)`.
#[derive(Clone, Debug)]
pub struct ChainBasis {
    bases: Vec<Vec<Simplex>>,
    index: Vec<BTreeMap<Simplex, usize>>,
    k: Complex,
    l: Complex,
}

impl ChainBasis {
    pub fn new(pair: &SimplicialPair) -> Self {
        let top = pair.k.dim().map_or(0, |d| d + 1);
        let bases: Vec<Vec<Simplex>> = (0..=top).map(|d| pair.relative_simplices(d)).collect();
        let index = bases
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
            .collect();
        ChainBasis { bases, index, k: pair.k.clone(), l: pair.l.clone() }
    }

    pub fn basis(&self, d: usize) -> &[Simplex] {
        self.bases.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, d: usize) -> usize {
        self.basis(d).len()
    }

    /// Relative boundary matrix `C_d -> C_{d-1}`; rows index degree `d - 1`.
    pub fn boundary_matrix(&self, d: usize) -> IntMatrix {
        let cols = self.rank(d);
        if d == 0 {
            return IntMatrix::zeros(0, cols);
        }
        let rows = self.rank(d - 1);
        let mut m = IntMatrix::zeros(rows, cols);
        for (j, s) in self.basis(d).iter().enumerate() {
            for (p, f) in s.facets() {
                if let Some(&i) = self.index[d - 1].get(&f) {
                    m[(i, j)] = BigInt::from(if p % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        m
    }

    /// Coordinates of a chain after dropping its terms at infinity.
    pub fn to_vector(&self, c: &Chain) -> Result<Vec<BigInt>, HomologyError> {
        let d = c.degree();
        let mut v = vec![BigInt::zero(); self.rank(d)];
        for (s, a) in c.iter() {
            if !self.k.contains(s) {
                return Err(HomologyError::ChainNotOnComplex(s.clone()));
            }
            if self.l.contains(s) {
                continue;
            }
            let i = self.index.get(d).and_then(|m| m.get(s)).expect("relative simplex is indexed");
            v[*i] = a.clone();
        }
        Ok(v)
    }

    pub fn to_chain(&self, d: usize, v: &[BigInt]) -> Chain {
        let mut c = Chain::zero(d);
        for (s, a) in self.basis(d).iter().zip(v) {
            c.add_term(s.clone(), a.clone());
        }
        c
    }

    pub fn cochain_to_vector(&self, a: &Cochain) -> Vec<BigInt> {
        self.basis(a.degree()).iter().map(|s| a.value(s)).collect()
    }

    pub fn to_cochain(&self, d: usize, v: &[BigInt]) -> Cochain {
        let mut a = Cochain::zero(d);
        for (s, x) in self.basis(d).iter().zip(v) {
            a.set(s.clone(), x.clone());
        }
        a
    }
}

/// Homology in one degree with representative cycles.
#[derive(Clone, Debug)]
pub struct DegreeHomology {
    pub degree: usize,
    pub group: AbelianGroup,
    /// Torsion generators in factor order, then free generators.
    pub representatives: Vec<Chain>,
    data: HomologyGroup,
}

/// `H_*(K, L; Z)` in degrees `0..=dim K`.
#[derive(Clone, Debug)]
pub struct HomologyResult {
    pub basis: ChainBasis,
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyResult {
    pub fn group(&self, d: usize) -> AbelianGroup {
        self.degrees.get(d).map(|h| h.group.clone()).unwrap_or_default()
    }

    pub fn groups(&self) -> Vec<AbelianGroup> {
        self.degrees.iter().map(|h| h.group.clone()).collect()
    }

    pub fn degree(&self, d: usize) -> Option<&DegreeHomology> {
        self.degrees.get(d)
    }

    /// Class of a relative cycle against the stored generators.
    pub fn class_coordinates(&self, c: &Chain) -> Result<ClassCoords, HomologyError> {
        let d = c.degree();
        let v = self.basis.to_vector(c)?;
        match self.degrees.get(d) {
            Some(h) => h.data.coordinates(&v).map_err(|_| HomologyError::NotARelativeCycle),
            None if v.iter().all(Zero::is_zero) => Ok(ClassCoords { torsion: vec![], free: vec![] }),
            None => Err(HomologyError::NotARelativeCycle),
        }
    }

    pub fn is_relative_cycle(&self, c: &Chain) -> Result<bool, HomologyError> {
        let v = self.basis.to_vector(c)?;
        Ok(match self.degrees.get(c.degree()) {
            Some(h) => h.data.is_cycle(&v),
            None => v.iter().all(Zero::is_zero),
        })
    }
}

/// Borel-Moore homology of `|K| - |L|`, computed as `H_*(K, L; Z)`.
pub fn bm_homology(pair: &SimplicialPair) -> HomologyResult {
    let basis = ChainBasis::new(pair);
    let mut degrees = Vec::new();
    if let Some(top) = pair.k.dim() {
        for d in 0..=top {
            let dk = basis.boundary_matrix(d);
            let dk1 = basis.boundary_matrix(d + 1);
            let data = homology_group(&dk, &dk1).expect("simplicial boundary squares to zero");
            let representatives = data.representatives().map(|v| basis.to_chain(d, v)).collect();
            degrees.push(DegreeHomology { degree: d, group: data.group.clone(), representatives, data });
        }
    }
    HomologyResult { basis, degrees }
}

/// Ordinary homology of a complex.
pub fn homology(k: &Complex) -> HomologyResult {
    bm_homology(&SimplicialPair::closed(k.clone()))
}

/// Cohomology in one degree with representative cocycles.
#[derive(Clone, Debug)]
pub struct DegreeCohomology {
    pub degree: usize,
    pub group: AbelianGroup,
    pub representatives: Vec<Cochain>,
    data: HomologyGroup,
}

/// `H^*(K; Z)` in degrees `0..=dim K`.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub basis: ChainBasis,
    pub degrees: Vec<DegreeCohomology>,
}

impl CohomologyResult {
    pub fn group(&self, q: usize) -> AbelianGroup {
        self.degrees.get(q).map(|h| h.group.clone()).unwrap_or_default()
    }

    pub fn class_coordinates(&self, a: &Cochain) -> Result<ClassCoords, HomologyError> {
        let v = self.basis.cochain_to_vector(a);
        match self.degrees.get(a.degree()) {
            Some(h) => h.data.coordinates(&v).map_err(|_| HomologyError::NotACocycle),
            None => Ok(ClassCoords { torsion: vec![], free: vec![] }),
        }
    }
}

/// Simplicial cohomology of `k`, from the transposed boundary matrices.
pub fn cohomology(k: &Complex) -> CohomologyResult {
    let basis = ChainBasis::new(&SimplicialPair::closed(k.clone()));
    let mut degrees = Vec::new();
    if let Some(top) = k.dim() {
        for q in 0..=top {
            let delta_q = basis.boundary_matrix(q + 1).transpose();
            let delta_prev = if q == 0 {
                IntMatrix::zeros(basis.rank(0), 0)
            } else {
                basis.boundary_matrix(q).transpose()
            };
            let data = homology_group(&delta_q, &delta_prev).expect("coboundary squares to zero");
            let representatives = data.representatives().map(|v| basis.to_cochain(q, v)).collect();
            degrees.push(DegreeCohomology { degree: q, group: data.group.clone(), representatives, data });
        }
    }
    CohomologyResult { basis, degrees }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::generators::*;

    fn z(rank: usize) -> AbelianGroup {
        AbelianGroup::free(rank)
    }

    fn z2() -> AbelianGroup {
        AbelianGroup::new(0, vec![BigInt::from(2)]).unwrap()
    }

    #[test]
    fn open_cells() {
        for n in 1..=4 {
            let h = bm_homology(&simplex_pair(n));
            for d in 0..=n {
                let expected = if d == n { z(1) } else { AbelianGroup::trivial() };
                assert_eq!(h.group(d), expected, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn mobius_rel_boundary() {
        let h = bm_homology(&mobius_pair());
        assert_eq!(h.groups(), vec![AbelianGroup::trivial(), z2(), AbelianGroup::trivial()]);
    }

    #[test]
    fn open_annulus() {
        let h = bm_homology(&cylinder_pair());
        assert_eq!(h.groups(), vec![AbelianGroup::trivial(), z(1), z(1)]);
    }

    #[test]
    fn closed_surfaces() {
        assert_eq!(homology(&torus()).groups(), vec![z(1), z(2), z(1)]);
        assert_eq!(homology(&torus_grid(4, 3)).groups(), vec![z(1), z(2), z(1)]);
        assert_eq!(homology(&sphere(2)).groups(), vec![z(1), AbelianGroup::trivial(), z(1)]);
        assert_eq!(homology(&sphere(1)).groups(), vec![z(1), z(1)]);
    }

    #[test]
    fn empty_complex_has_no_homology() {
        let h = homology(&Complex::new());
        assert!(h.degrees.is_empty());
        assert!(h.group(0).is_trivial());
    }

    #[test]
    fn representatives_are_independent_relative_cycles() {
        for pair in [mobius_pair(), cylinder_pair(), SimplicialPair::closed(torus())] {
            let h = bm_homology(&pair);
            for dh in &h.degrees {
                let n = dh.representatives.len();
                for (i, r) in dh.representatives.iter().enumerate() {
                    assert!(pair.relative_reduce(&r.boundary()).is_zero());
                    let coords = h.class_coordinates(r).unwrap().to_vec();
                    let mut e = vec![BigInt::zero(); n];
                    e[i] = BigInt::from(1);
                    assert_eq!(coords, e);
                }
            }
        }
    }

    #[test]
    fn cohomology_of_torus_and_projective_like() {
        let c = cohomology(&torus());
        assert_eq!((0..3).map(|q| c.group(q)).collect::<Vec<_>>(), vec![z(1), z(2), z(1)]);
        // Moebius strip deformation retracts to a circle.
        let m = cohomology(&mobius_pair().k);
        assert_eq!((0..3).map(|q| m.group(q)).collect::<Vec<_>>(), vec![z(1), z(1), AbelianGroup::trivial()]);
    }

    #[test]
    fn chain_off_the_complex_is_rejected() {
        let h = homology(&sphere(1));
        let c = Chain::from_simplex(Simplex::new(vec![0, 9]).unwrap(), 1);
        assert!(matches!(h.class_coordinates(&c), Err(HomologyError::ChainNotOnComplex(_))));
    }
}
