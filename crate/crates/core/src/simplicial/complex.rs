use std::collections::BTreeSet;

use super::{Chain, Simplex, SimplicialError, VertexId};

/// A finite abstract simplicial complex, closed under taking faces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Complex {
    simplices: BTreeSet<Simplex>,
}

impl Complex {
    pub fn new() -> Self {
        Self::default()
    }

    /// The complex generated by the given vertex lists (faces are added).
    pub fn from_maximal<V: AsRef<[VertexId]>>(generators: &[V]) -> Result<Self, SimplicialError> {
        let mut k = Complex::new();
        for g in generators {
            k.insert_closed(&Simplex::new(g.as_ref().to_vec())?);
        }
        Ok(k)
    }

    pub fn from_simplices(simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut k = Complex::new();
        for s in simplices {
            k.insert_closed(&s);
        }
        k
    }

    /// Inserts `s` and all of its faces.
    pub fn insert_closed(&mut self, s: &Simplex) {
        if self.simplices.contains(s) {
            return;
        }
        for f in s.faces() {
            self.simplices.insert(f);
        }
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.iter().next_back().map(Simplex::dim)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn simplices_of_dim(&self, d: usize) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().filter(move |s| s.dim() == d)
    }

    pub fn count_of_dim(&self, d: usize) -> usize {
        self.simplices_of_dim(d).count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.simplices_of_dim(0).map(|s| s.vertices()[0])
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.vertices().max()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().map(|s| if s.dim() % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.simplices
            .iter()
            .filter(|s| !self.simplices.iter().any(|t| t.dim() > s.dim() && s.is_face_of(t)))
            .cloned()
            .collect()
    }

    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.simplices.iter().all(|s| other.contains(s))
    }

    pub fn union(&self, other: &Complex) -> Complex {
        Complex { simplices: self.simplices.union(&other.simplices).cloned().collect() }
    }

    pub fn intersection(&self, other: &Complex) -> Complex {
        Complex { simplices: self.simplices.intersection(&other.simplices).cloned().collect() }
    }

    /// Simplices of dimension at most `l`.
    pub fn skeleton(&self, l: usize) -> Complex {
        Complex { simplices: self.simplices.iter().filter(|s| s.dim() <= l).cloned().collect() }
    }

    /// Simplices all of whose vertices satisfy `keep`.
    pub fn full_subcomplex(&self, mut keep: impl FnMut(VertexId) -> bool) -> Complex {
        Complex {
            simplices: self.simplices.iter().filter(|s| s.vertices().iter().all(|&v| keep(v))).cloned().collect(),
        }
    }

    /// All cofaces of `s` (simplices containing it), including `s`.
    pub fn open_star(&self, s: &Simplex) -> Result<BTreeSet<Simplex>, SimplicialError> {
        if !self.contains(s) {
            return Err(SimplicialError::SimplexNotInComplex(s.clone()));
        }
        Ok(self.simplices.iter().filter(|t| s.is_face_of(t)).cloned().collect())
    }

    /// The subcomplex generated by the open star.
    pub fn closed_star(&self, s: &Simplex) -> Result<Complex, SimplicialError> {
        Ok(Complex::from_simplices(self.open_star(s)?))
    }

    /// Cofaces of `s` of exactly one dimension higher.
    pub fn cofacets<'a>(&'a self, s: &'a Simplex) -> impl Iterator<Item = &'a Simplex> + 'a {
        let d = s.dim() + 1;
        self.simplices_of_dim(d).filter(move |t| s.is_face_of(t))
    }

    /// Checks face-closure; complexes built through this API always satisfy it.
    pub fn is_closed(&self) -> bool {
        self.simplices.iter().all(|s| s.facets().all(|(_, f)| self.contains(&f)))
    }
}

/// A finite complex `k` with a subcomplex `l` treated as lying at infinity.
/// The modelled space is `|k| - |l|`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialPair {
    pub k: Complex,
    pub l: Complex,
}

impl SimplicialPair {
    pub fn new(k: Complex, l: Complex) -> Result<Self, SimplicialError> {
        if !l.is_subcomplex_of(&k) {
            return Err(SimplicialError::NotSubcomplex);
        }
        Ok(SimplicialPair { k, l })
    }

    /// The pair `(k, {})`.
    pub fn closed(k: Complex) -> Self {
        SimplicialPair { k, l: Complex::new() }
    }

    /// Simplices of `k` not in `l`, of dimension `d`, in canonical order.
    pub fn relative_simplices(&self, d: usize) -> Vec<Simplex> {
        self.k.simplices_of_dim(d).filter(|s| !self.l.contains(s)).cloned().collect()
    }

    pub fn is_at_infinity(&self, s: &Simplex) -> bool {
        self.l.contains(s)
    }

    /// Drops every term carried by `l`.
    pub fn relative_reduce(&self, c: &Chain) -> Chain {
        c.filter(|s| !self.l.contains(s))
    }

    /// Whether every simplex of `k` spanned by vertices of `l` already lies in `l`.
    pub fn is_full(&self) -> bool {
        let lv: BTreeSet<VertexId> = self.l.vertices().collect();
        self.k
            .iter()
            .filter(|s| s.vertices().iter().all(|v| lv.contains(v)))
            .all(|s| self.l.contains(s))
    }

    /// Full subcomplex of `k` on the vertices outside `l`; a deformation retract
    /// of `|k| - |l|` when the pair is full.
    pub fn complement_complex(&self) -> Result<Complex, SimplicialError> {
        if !self.is_full() {
            return Err(SimplicialError::NotFull);
        }
        let lv: BTreeSet<VertexId> = self.l.vertices().collect();
        Ok(self.k.full_subcomplex(|v| !lv.contains(&v)))
    }
}

#[cfg(test)]
mod tests {
    use super::super::generators::{simplex, simplex_pair};
    use super::super::barycentric_subdivision;
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn closure_on_construction() {
        let k = Complex::from_maximal(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(k.len(), 7);
        assert!(k.is_closed());
        assert_eq!(k.dim(), Some(2));
        assert_eq!(Complex::new().dim(), None);
    }

    #[test]
    fn skeleta() {
        let k = simplex(2);
        assert_eq!(k.skeleton(0).len(), 3);
        let g = k.skeleton(1);
        assert_eq!((g.count_of_dim(0), g.count_of_dim(1), g.count_of_dim(2)), (3, 3, 0));
        assert_eq!(k.skeleton(2), k);
    }

    #[test]
    fn stars() {
        let k = simplex(2);
        let top = s(&[0, 1, 2]);
        assert_eq!(k.open_star(&top).unwrap(), BTreeSet::from([top.clone()]));
        assert_eq!(k.closed_star(&s(&[1])).unwrap(), k);
        assert!(matches!(k.open_star(&s(&[7])), Err(SimplicialError::SimplexNotInComplex(_))));
    }

    #[test]
    fn open_star_of_center_in_subdivided_triangle() {
        let sd = barycentric_subdivision(&simplex(2));
        let center = Simplex::vertex(sd.barycenter(&s(&[0, 1, 2])).unwrap());
        let star = sd.complex.open_star(&center).unwrap();
        let by_dim = |d| star.iter().filter(|t| t.dim() == d).count();
        assert_eq!((by_dim(0), by_dim(1), by_dim(2)), (1, 6, 6));
    }

    #[test]
    fn relative_reduce_cases() {
        let pair = simplex_pair(2);
        let in_l = Chain::from_simplex(s(&[0, 1]), 3);
        assert!(pair.relative_reduce(&in_l).is_zero());
        let top = Chain::from_simplex(s(&[0, 1, 2]), 1);
        assert_eq!(pair.relative_reduce(&top), top);
        assert!(pair.relative_reduce(&top.boundary()).is_zero());
    }

    #[test]
    fn fullness_and_complement() {
        let pair = simplex_pair(2);
        assert!(!pair.is_full());
        assert!(matches!(pair.complement_complex(), Err(SimplicialError::NotFull)));

        let (sd_pair, _) = super::super::subdivide_pair(&pair);
        assert!(sd_pair.is_full());
        let comp = sd_pair.complement_complex().unwrap();
        // Only the barycenter of the 2-simplex lies off the subdivided boundary.
        assert_eq!(comp.len(), 1);

        let closed = SimplicialPair::closed(simplex(3));
        assert_eq!(closed.complement_complex().unwrap(), simplex(3));
    }

    #[test]
    fn pair_requires_subcomplex() {
        let k = simplex(1);
        let l = Complex::from_maximal(&[vec![5]]).unwrap();
        assert!(matches!(SimplicialPair::new(k, l), Err(SimplicialError::NotSubcomplex)));
    }
}
