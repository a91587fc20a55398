use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::simplicial::{permutation_sign, Sign, Simplex, SimplicialPair, VertexId};

use super::{PseudocycleError, SimplexInstance};

/// Face `face` (the corner removed) of instance `instance`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceRef {
    pub instance: usize,
    pub face: usize,
}

/// An ordered pair of identified faces.
///
/// `perm` sends corner `j` of the face of `b` to the corner of the face of
/// `a` with the same image: `face(b)[j] = face(a)[perm[j]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePair {
    pub a: FaceRef,
    pub b: FaceRef,
    pub perm: Vec<usize>,
}

impl FacePair {
    pub fn sign(&self) -> Sign {
        permutation_sign(&self.perm)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FacePairing {
    /// Dimension of the instances (faces have one less).
    pub dimension: usize,
    /// Both orders of every identified pair, sorted by `a`.
    pub pairs: Vec<FacePair>,
    /// Faces whose image lies in `L`.
    pub at_infinity: Vec<FaceRef>,
    /// Faces left over that are neither paired nor at infinity. Empty for
    /// cycles; the boundary of a bordism otherwise.
    pub free: Vec<FaceRef>,
}

impl FacePairing {
    pub fn partner(&self, f: FaceRef) -> Option<&FacePair> {
        self.pairs
            .binary_search_by(|p| p.a.cmp(&f))
            .ok()
            .map(|i| &self.pairs[i])
    }

    /// Checks symmetry, bijectivity, agreement of the glued faces and the
    /// sign condition against `instances`.
    pub fn validate(&self, instances: &[SimplexInstance]) -> Result<(), PseudocycleError> {
        let bad = |msg: String| Err(PseudocycleError::InconsistentPairing(msg));
        let k = self.dimension;
        if let Some(i) = instances.iter().find(|i| i.dim() != k) {
            return bad(format!("instance {} has dimension {}, expected {k}", i.id, i.dim()));
        }
        let mut seen: BTreeMap<FaceRef, usize> = BTreeMap::new();
        let all = self.pairs.iter().map(|p| p.a).chain(self.at_infinity.iter().copied()).chain(self.free.iter().copied());
        for f in all {
            if f.instance >= instances.len() || f.face > k || k == 0 {
                return bad(format!("face {f:?} does not exist"));
            }
            *seen.entry(f).or_default() += 1;
        }
        if let Some((f, n)) = seen.iter().find(|(_, n)| **n != 1) {
            return bad(format!("face {f:?} is listed {n} times"));
        }
        if k > 0 && seen.len() != instances.len() * (k + 1) {
            return bad(format!("{} of {} faces are accounted for", seen.len(), instances.len() * (k + 1)));
        }
        for p in &self.pairs {
            if p.a == p.b {
                return bad(format!("face {:?} is paired with itself", p.a));
            }
            let mut sorted = p.perm.clone();
            sorted.sort_unstable();
            if sorted != (0..k).collect::<Vec<_>>() {
                return bad(format!("{:?} is not a permutation of the face corners", p.perm));
            }
            let (ia, ib) = (&instances[p.a.instance], &instances[p.b.instance]);
            let (fa, fb) = (ia.face_tuple(p.a.face), ib.face_tuple(p.b.face));
            if (0..k).any(|j| fb[j] != fa[p.perm[j]]) {
                return bad(format!("faces {:?} = {fa:?} and {:?} = {fb:?} do not agree", p.a, p.b));
            }
            let want = -(Sign::parity(p.a.face + p.b.face) * ia.orientation * ib.orientation);
            if p.sign() != want {
                return bad(format!("pair {:?} - {:?} glues with the wrong sign", p.a, p.b));
            }
            let reverse = self.partner(p.b).filter(|r| r.b == p.a);
            match reverse {
                Some(r) if (0..k).all(|j| r.perm[p.perm[j]] == j) => {}
                _ => return bad(format!("pair {:?} - {:?} has no inverse partner", p.a, p.b)),
            }
        }
        Ok(())
    }

    /// Unordered pairs, each listed once with `a < b`.
    pub fn unordered(&self) -> impl Iterator<Item = &FacePair> {
        self.pairs.iter().filter(|p| p.a < p.b)
    }
}

/// `perm` with `to[j] = from[perm[j]]`.
pub(crate) fn matching_perm(from: &[VertexId], to: &[VertexId]) -> Vec<usize> {
    to.iter()
        .map(|v| from.iter().position(|w| w == v).expect("faces have the same vertex set"))
        .collect()
}

fn make_pair(instances: &[SimplexInstance], a: FaceRef, b: FaceRef) -> FacePair {
    let fa = instances[a.instance].face_tuple(a.face);
    let fb = instances[b.instance].face_tuple(b.face);
    FacePair { a, b, perm: matching_perm(&fa, &fb) }
}

/// Faces of `instances` grouped by underlying simplex, split by induced
/// orientation; faces in `L` are returned separately.
pub(crate) fn bucket_faces(
    instances: &[SimplexInstance],
    pair: &SimplicialPair,
) -> (BTreeMap<Simplex, [Vec<FaceRef>; 2]>, Vec<FaceRef>) {
    let mut buckets: BTreeMap<Simplex, [Vec<FaceRef>; 2]> = BTreeMap::new();
    let mut at_infinity = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        if inst.dim() == 0 {
            continue;
        }
        for p in 0..=inst.dim() {
            let f = FaceRef { instance: i, face: p };
            let (s, sign) = inst.face_orientation(p);
            if pair.l.contains(&s) {
                at_infinity.push(f);
            } else {
                let slot = usize::from(sign == Sign::Minus);
                buckets.entry(s).or_default()[slot].push(f);
            }
        }
    }
    (buckets, at_infinity)
}

/// Pairs `plus[i]` with `minus[i]` and returns the leftovers.
pub(crate) fn match_bucket(
    instances: &[SimplexInstance],
    plus: &[FaceRef],
    minus: &[FaceRef],
    pairs: &mut Vec<FacePair>,
) -> Vec<FaceRef> {
    let n = plus.len().min(minus.len());
    for (a, b) in plus.iter().zip(minus) {
        pairs.push(make_pair(instances, *a, *b));
        pairs.push(make_pair(instances, *b, *a));
    }
    plus[n..].iter().chain(&minus[n..]).copied().collect()
}

pub(crate) fn finish(dimension: usize, mut pairs: Vec<FacePair>, mut at_infinity: Vec<FaceRef>, mut free: Vec<FaceRef>) -> FacePairing {
    pairs.sort_by(|x, y| x.a.cmp(&y.a));
    at_infinity.sort();
    free.sort();
    FacePairing { dimension, pairs, at_infinity, free }
}

/// Pairs the faces of a relative cycle given as unit instances.
///
/// Faces over the same simplex are matched positive against negative in
/// instance order; faces in `L` are left unpaired. Any other unmatched face
/// means the instances do not form a relative cycle.
pub fn pair_faces(instances: &[SimplexInstance], pair: &SimplicialPair) -> Result<FacePairing, PseudocycleError> {
    let dimension = instances.first().map_or(0, SimplexInstance::dim);
    if let Some(i) = instances.iter().find(|i| i.dim() != dimension) {
        return Err(PseudocycleError::DegreeMismatch { expected: dimension, found: i.dim() });
    }
    let (buckets, at_infinity) = bucket_faces(instances, pair);
    let mut pairs = Vec::new();
    for (s, [plus, minus]) in &buckets {
        let left = match_bucket(instances, plus, minus, &mut pairs);
        if !left.is_empty() {
            let multiplicity = BigInt::from(plus.len()) - BigInt::from(minus.len());
            return Err(PseudocycleError::NotACycle { face: s.clone(), multiplicity });
        }
    }
    Ok(finish(dimension, pairs, at_infinity, Vec::new()))
}

/// Every face of every instance, used by exhaustive checks.
pub fn all_faces(instances: &[SimplexInstance]) -> BTreeSet<FaceRef> {
    instances
        .iter()
        .enumerate()
        .filter(|(_, inst)| inst.dim() > 0)
        .flat_map(|(i, inst)| (0..=inst.dim()).map(move |p| FaceRef { instance: i, face: p }))
        .collect()
}
