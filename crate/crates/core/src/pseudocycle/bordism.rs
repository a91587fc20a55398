use std::collections::BTreeMap;

use crate::bmhomology::bm_homology;
use crate::intlinalg::solve_integer;
use crate::simplicial::{permutation_sign, Chain, Sign, Simplex, SimplicialPair};

use super::pairing::{bucket_faces, finish, match_bucket, matching_perm};
use super::{
    check_pseudomanifold, expand_to_unit, glue, phi_with, psi, CombPseudocycle, FaceRef, PseudoManifold,
    PseudocycleError,
};

/// Identification of a boundary face of `w` with a top cell of `m_r`.
///
/// `perm` satisfies `m_r.map[j] = face(w)[perm[j]]`; `sign` is `+` for
/// `r = 1` and `-` for `r = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatch {
    pub r: usize,
    pub instance: usize,
    pub face: FaceRef,
    pub perm: Vec<usize>,
    pub sign: Sign,
}

/// `w` with `∂w = m1 ⊔ -m0` away from infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bordism {
    pub w: PseudoManifold,
    pub m0: CombPseudocycle,
    pub m1: CombPseudocycle,
    pub boundary0: Vec<BoundaryMatch>,
    pub boundary1: Vec<BoundaryMatch>,
    pub target: SimplicialPair,
}

fn degree_ok(c: &Chain, k: usize) -> Result<Chain, PseudocycleError> {
    if c.is_zero() {
        Ok(Chain::zero(k))
    } else if c.degree() != k {
        Err(PseudocycleError::DegreeMismatch { expected: k, found: c.degree() })
    } else {
        Ok(c.clone())
    }
}

/// Glues the unit instances of `tilde_c` into a bordism from `c0` to `c1`.
///
/// Faces of `tilde_c` over the same simplex are matched first against the
/// top cells of `c1` (same orientation) and `c0` (opposite orientation), in
/// instance order; the rest are paired with each other. `c0` and `c1` are
/// reduced relative to `L` first. A simplex carried by both `c0` and `c1` that
/// `tilde_c` does not touch cannot be matched and is reported as a mismatch.
pub fn glue_equivalence(
    tilde_c: &Chain,
    c0: &Chain,
    c1: &Chain,
    pair: &SimplicialPair,
) -> Result<Bordism, PseudocycleError> {
    let k = if tilde_c.is_zero() {
        [c0, c1].iter().find(|c| !c.is_zero()).map_or(0, |c| c.degree())
    } else {
        tilde_c.degree().checked_sub(1).ok_or(PseudocycleError::DegreeMismatch { expected: 1, found: 0 })?
    };
    let c0 = pair.relative_reduce(&degree_ok(c0, k)?);
    let c1 = pair.relative_reduce(&degree_ok(c1, k)?);
    if let Some(s) = tilde_c.simplices().find(|s| !pair.k.contains(s)) {
        return Err(PseudocycleError::NotOnTarget(s.clone()));
    }
    let m0 = psi(&c0, pair)?;
    let m1 = psi(&c1, pair)?;
    let instances = expand_to_unit(tilde_c)?;
    let (buckets, at_infinity) = bucket_faces(&instances, pair);

    // top cells of c_r by simplex, split by orientation
    let mut cells: BTreeMap<Simplex, [[Vec<usize>; 2]; 2]> = BTreeMap::new();
    for (r, m) in [&m0, &m1].into_iter().enumerate() {
        for (i, inst) in m.m.instances.iter().enumerate() {
            let (s, sign) = inst.image();
            cells.entry(s).or_default()[r][usize::from(sign == Sign::Minus)].push(i);
        }
    }

    let mut pairs = Vec::new();
    let mut free = Vec::new();
    let mut matches: [Vec<BoundaryMatch>; 2] = [Vec::new(), Vec::new()];
    let mut simplices: Vec<&Simplex> = buckets.keys().chain(cells.keys()).collect();
    simplices.sort();
    simplices.dedup();
    let empty: [Vec<FaceRef>; 2] = Default::default();
    for s in simplices {
        let faces = buckets.get(s).unwrap_or(&empty);
        let own = cells.get(s).cloned().unwrap_or_default();
        let mut rest: [Vec<FaceRef>; 2] = Default::default();
        for (slot, list) in faces.iter().enumerate() {
            // a face of orientation `slot` bounds c1 cells of the same
            // orientation and c0 cells of the opposite one
            let wanted = own[1][slot].iter().map(|&i| (1, i)).chain(own[0][1 - slot].iter().map(|&i| (0, i)));
            let wanted: Vec<(usize, usize)> = wanted.collect();
            if wanted.len() > list.len() {
                return Err(PseudocycleError::BoundaryMismatch(format!(
                    "{s}: {} boundary cells but only {} faces of the bounding chain",
                    wanted.len(),
                    list.len()
                )));
            }
            for (&(r, i), &f) in wanted.iter().zip(list) {
                let m = if r == 0 { &m0 } else { &m1 };
                let face = instances[f.instance].face_tuple(f.face);
                let perm = matching_perm(&face, &m.m.instances[i].map);
                let sign = if r == 1 { Sign::Plus } else { Sign::Minus };
                matches[r].push(BoundaryMatch { r, instance: i, face: f, perm, sign });
                free.push(f);
            }
            rest[slot] = list[wanted.len()..].to_vec();
        }
        let left = match_bucket(&instances, &rest[0], &rest[1], &mut pairs);
        if !left.is_empty() {
            return Err(PseudocycleError::BoundaryMismatch(format!(
                "{s}: {} faces of the bounding chain are not matched by c1 - c0",
                left.len()
            )));
        }
    }
    let pairing = finish(k + 1, pairs, at_infinity, free);
    let w = glue(&instances, &pairing)?;
    let [mut boundary0, mut boundary1] = matches;
    boundary0.sort_by_key(|b| b.instance);
    boundary1.sort_by_key(|b| b.instance);
    Ok(Bordism { w, m0, m1, boundary0, boundary1, target: pair.clone() })
}

/// A bordism from the empty pseudocycle to `f` when `f` is null-homologous.
pub fn nullbordism(f: &CombPseudocycle) -> Result<Option<Bordism>, PseudocycleError> {
    let h = bm_homology(&f.target);
    if !phi_with(f, &h)?.is_zero() {
        return Ok(None);
    }
    let k = f.dimension();
    let z = f.pushforward();
    let rhs = h.basis.to_vector(&z)?;
    let d = h.basis.boundary_matrix(k + 1);
    let x = solve_integer(&d, &rhs).ok_or_else(|| {
        PseudocycleError::Internal("class is zero but no bounding chain was found".to_string())
    })?;
    let tilde_c = h.basis.to_chain(k + 1, &x);
    glue_equivalence(&tilde_c, &Chain::zero(k), &z, &f.target).map(Some)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BordismReport {
    pub interior_faces: usize,
    pub boundary0_cells: usize,
    pub boundary1_cells: usize,
    pub at_infinity: usize,
    pub failures: Vec<String>,
}

impl BordismReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies `∂w = m1 ⊔ -m0`: every free face of `w` bounds exactly one cell
/// of `m0` or `m1`, with the recorded sign equal to the induced one.
pub fn check_bordism(b: &Bordism) -> BordismReport {
    let inner = check_pseudomanifold(&b.w);
    let mut failures = inner.failures;
    let mut used: BTreeMap<FaceRef, usize> = BTreeMap::new();
    for (r, (list, m)) in [(&b.boundary0, &b.m0), (&b.boundary1, &b.m1)].into_iter().enumerate() {
        let mut hits = vec![0usize; m.m.instances.len()];
        for bm in list {
            let expected = if r == 1 { Sign::Plus } else { Sign::Minus };
            let (Some(wi), Some(mi)) = (b.w.instances.get(bm.face.instance), m.m.instances.get(bm.instance)) else {
                failures.push(format!("boundary{r} match {bm:?} refers to a missing cell"));
                continue;
            };
            *used.entry(bm.face).or_default() += 1;
            hits[bm.instance] += 1;
            let face = wi.face_tuple(bm.face.face);
            if bm.r != r || bm.perm.len() != mi.map.len() || (0..bm.perm.len()).any(|j| face.get(bm.perm[j]) != Some(&mi.map[j])) {
                failures.push(format!("boundary{r} cell {} does not agree with face {:?}", bm.instance, bm.face));
                continue;
            }
            let induced = Sign::parity(bm.face.face) * permutation_sign(&bm.perm) * wi.orientation * mi.orientation;
            if bm.sign != expected || induced != bm.sign {
                failures.push(format!(
                    "boundary{r} cell {} at face {:?}: recorded sign {:?}, induced {:?}",
                    bm.instance, bm.face, bm.sign, induced
                ));
            }
        }
        for (i, n) in hits.iter().enumerate().filter(|(_, n)| **n != 1) {
            failures.push(format!("boundary{r} cell {i} is matched {n} times"));
        }
    }
    for f in &b.w.gluing.free {
        if used.get(f) != Some(&1) {
            failures.push(format!("free face {f:?} is not matched to exactly one boundary cell"));
        }
    }
    if let Some(f) = used.keys().find(|f| !b.w.gluing.free.contains(f)) {
        failures.push(format!("face {f:?} is matched but not free"));
    }
    BordismReport {
        interior_faces: inner.interior_faces,
        boundary0_cells: b.boundary0.len(),
        boundary1_cells: b.boundary1.len(),
        at_infinity: b.w.gluing.at_infinity.len(),
        failures,
    }
}
