use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;

use super::SimplicialError;

pub type VertexId = usize;

/// Orientation sign of an ordered vertex tuple relative to its sorted form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`
    pub fn parity(k: usize) -> Sign {
        if k % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.to_i64())
    }

    pub fn from_i64(x: i64) -> Option<Sign> {
        match x {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// An abstract simplex, stored as its strictly increasing vertex list.
///
/// Ordering is by dimension first, then lexicographic, so ordered sets of
/// simplices come out graded.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Builds a simplex from distinct vertices in any order. The orientation of
    /// the input order is discarded; use [`canonicalize`] to keep it.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self, SimplicialError> {
        if vertices.is_empty() {
            return Err(SimplicialError::EmptySimplex);
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(SimplicialError::RepeatedVertex(vertices));
        }
        Ok(Simplex { vertices })
    }

    pub fn vertex(v: VertexId) -> Self {
        Simplex { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Whether every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.contains_vertex(*v))
    }

    /// The codimension-one face opposite vertex position `p`.
    pub fn facet(&self, p: usize) -> Option<Simplex> {
        if self.vertices.len() < 2 {
            return None;
        }
        let mut v = self.vertices.clone();
        v.remove(p);
        Some(Simplex { vertices: v })
    }

    /// `(p, face)` pairs for the codimension-one faces, in position order.
    pub fn facets(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        (0..self.vertices.len()).filter_map(move |p| self.facet(p).map(|f| (p, f)))
    }

    /// Every nonempty face, including the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity((1 << n) - 1);
        for mask in 1u64..(1u64 << n) {
            let v = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.vertices[i]).collect();
            out.push(Simplex { vertices: v });
        }
        out
    }

    /// Proper nonempty faces.
    pub fn proper_faces(&self) -> Vec<Simplex> {
        let mut f = self.faces();
        f.retain(|s| s.vertices.len() < self.vertices.len());
        f
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Sorts an ordered vertex tuple, returning the simplex and the parity of the
/// sorting permutation. Returns `None` when a vertex repeats (degenerate).
pub fn canonicalize(ordered: &[VertexId]) -> Option<(Simplex, Sign)> {
    if ordered.is_empty() {
        return None;
    }
    let mut v = ordered.to_vec();
    // Insertion sort, counting transpositions.
    let mut swaps = 0usize;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((Simplex { vertices: v }, Sign::parity(swaps)))
}

/// Sign of a permutation given in one-line notation (`perm[i]` is the image of `i`).
pub fn permutation_sign(perm: &[usize]) -> Sign {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    Sign::parity(transpositions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonicalize_examples() {
        let s = Simplex::new(vec![0, 1, 2]).unwrap();
        assert_eq!(canonicalize(&[0, 1, 2]), Some((s.clone(), Sign::Plus)));
        assert_eq!(canonicalize(&[1, 0, 2]), Some((s, Sign::Minus)));
        assert_eq!(canonicalize(&[0, 0, 1]), None);
        assert_eq!(canonicalize(&[2, 1, 2]), None);
    }

    #[test]
    fn graded_ordering() {
        let a = Simplex::new(vec![5]).unwrap();
        let b = Simplex::new(vec![0, 1]).unwrap();
        assert!(a < b);
        assert_eq!(b.dim(), 1);
    }

    #[test]
    fn repeated_vertex_rejected() {
        assert!(Simplex::new(vec![3, 3]).is_err());
        assert!(Simplex::new(vec![]).is_err());
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), Sign::Plus);
        assert_eq!(permutation_sign(&[1, 0, 2]), Sign::Minus);
        assert_eq!(permutation_sign(&[1, 2, 0]), Sign::Plus);
        assert_eq!(permutation_sign(&[]), Sign::Plus);
    }

    fn perm_strategy() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, Vec<usize>)> {
        (1usize..7).prop_flat_map(|n| {
            let base: Vec<usize> = (0..n).collect();
            (
                proptest::collection::vec(0usize..100, n),
                Just(base.clone()).prop_shuffle(),
                Just(base).prop_shuffle(),
            )
        })
    }

    proptest! {
        #[test]
        fn canonicalize_is_sign_equivariant((raw, pi, rho) in perm_strategy()) {
            // distinct vertex labels
            let mut verts: Vec<usize> = raw.iter().enumerate().map(|(i, x)| x * 10 + i).collect();
            verts.dedup();
            let permuted: Vec<usize> = pi.iter().map(|&i| verts[i]).collect();
            let (s0, e0) = canonicalize(&verts).unwrap();
            let (s1, e1) = canonicalize(&permuted).unwrap();
            prop_assert_eq!(&s0, &s1);
            prop_assert_eq!(e1, e0 * permutation_sign(&pi));

            // composing two permutations multiplies signs
            let twice: Vec<usize> = rho.iter().map(|&i| permuted[i]).collect();
            let (_, e2) = canonicalize(&twice).unwrap();
            prop_assert_eq!(e2, e0 * permutation_sign(&pi) * permutation_sign(&rho));
        }
    }
}
