use std::collections::BTreeMap;

use crate::simplicial::Sign;

use super::pairing::FaceRef;
use super::{face_inclusion, FacePairing, PseudocycleError, SimplexInstance};

/// The quotient of `⊔ {i} x Δ^k` by a face pairing, as a cell structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoManifold {
    pub dimension: usize,
    pub instances: Vec<SimplexInstance>,
    pub gluing: FacePairing,
    /// Number of quotient cells in each dimension `0..=k`.
    pub cell_counts: Vec<usize>,
    /// Quotient vertex of every corner of every instance.
    pub corner_cells: Vec<Vec<usize>>,
    /// Quotient `(k-1)`-cell of every face of every instance.
    pub face_cells: Vec<Vec<usize>>,
}

impl PseudoManifold {
    pub fn empty(dimension: usize) -> Self {
        PseudoManifold {
            dimension,
            instances: Vec::new(),
            gluing: FacePairing { dimension, ..FacePairing::default() },
            cell_counts: vec![0; dimension + 1],
            corner_cells: Vec::new(),
            face_cells: Vec::new(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cell_counts
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Glues the instances along `pairing`.
///
/// A cell of the quotient is a class of `(instance, corner subset)`; the pair
/// `(a, b, τ)` identifies corners `ι_b(j)` of `b` with `ι_a(τ(j))` of `a` on
/// every subset of the face.
pub fn glue(instances: &[SimplexInstance], pairing: &FacePairing) -> Result<PseudoManifold, PseudocycleError> {
    pairing.validate(instances)?;
    let k = pairing.dimension;
    if instances.is_empty() {
        let mut m = PseudoManifold::empty(k);
        m.gluing = pairing.clone();
        return Ok(m);
    }
    if k >= 20 {
        return Err(PseudocycleError::InconsistentPairing(format!("dimension {k} is too large to glue")));
    }
    let width = 1usize << (k + 1);
    let node = |i: usize, mask: usize| i * width + mask;
    let mut uf = UnionFind((0..instances.len() * width).collect());

    for p in pairing.unordered() {
        for t in 1usize..(1 << k) {
            let (mut mask_a, mut mask_b) = (0usize, 0usize);
            for j in (0..k).filter(|j| t >> j & 1 == 1) {
                mask_b |= 1 << face_inclusion(p.b.face, j);
                mask_a |= 1 << face_inclusion(p.a.face, p.perm[j]);
            }
            uf.union(node(p.a.instance, mask_a), node(p.b.instance, mask_b));
        }
    }

    let mut ids: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); k + 1];
    let mut cell_of = |uf: &mut UnionFind, i: usize, mask: usize| {
        let d = mask.count_ones() as usize - 1;
        let root = uf.find(node(i, mask));
        let next = ids[d].len();
        *ids[d].entry(root).or_insert(next)
    };
    let mut corner_cells = Vec::with_capacity(instances.len());
    let mut face_cells = Vec::with_capacity(instances.len());
    for i in 0..instances.len() {
        for mask in 1..width {
            cell_of(&mut uf, i, mask);
        }
        corner_cells.push((0..=k).map(|j| cell_of(&mut uf, i, 1 << j)).collect());
        face_cells.push(if k == 0 {
            Vec::new()
        } else {
            (0..=k).map(|p| cell_of(&mut uf, i, (width - 1) & !(1 << p))).collect()
        });
    }
    Ok(PseudoManifold {
        dimension: k,
        instances: instances.to_vec(),
        gluing: pairing.clone(),
        cell_counts: ids.iter().map(BTreeMap::len).collect(),
        corner_cells,
        face_cells,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoManifoldReport {
    pub dimension: usize,
    pub top_cells: usize,
    pub interior_faces: usize,
    pub boundary_faces: usize,
    /// Cells of dimension `k - 2` (the set the smooth model would remove).
    pub codim2_cells: usize,
    pub failures: Vec<String>,
}

impl PseudoManifoldReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every `(k-1)`-cell must have two top cofaces inducing opposite
/// orientations, or one coface when it is a recorded boundary face.
pub fn check_pseudomanifold(m: &PseudoManifold) -> PseudoManifoldReport {
    let k = m.dimension;
    let mut report = PseudoManifoldReport {
        dimension: k,
        top_cells: m.instances.len(),
        interior_faces: 0,
        boundary_faces: 0,
        codim2_cells: if k >= 2 { m.cell_counts[k - 2] } else { 0 },
        failures: Vec::new(),
    };
    if k == 0 {
        return report;
    }
    let mut members: BTreeMap<usize, Vec<FaceRef>> = BTreeMap::new();
    for (i, cells) in m.face_cells.iter().enumerate() {
        for (p, &c) in cells.iter().enumerate() {
            members.entry(c).or_default().push(FaceRef { instance: i, face: p });
        }
    }
    let boundary = |f: &FaceRef| m.gluing.at_infinity.contains(f) || m.gluing.free.contains(f);
    for (cell, faces) in &members {
        match faces.as_slice() {
            [f] if boundary(f) => report.boundary_faces += 1,
            [f] => report.failures.push(format!("face cell {cell} ({f:?}) has one coface but is not a boundary face")),
            [a, b] => {
                let Some(p) = m.gluing.partner(*a).filter(|p| p.b == *b) else {
                    report.failures.push(format!("face cell {cell} joins {a:?} and {b:?} without a pairing"));
                    continue;
                };
                let (ia, ib) = (&m.instances[a.instance], &m.instances[b.instance]);
                let induced = Sign::parity(a.face + b.face) * p.sign() * ia.orientation * ib.orientation;
                if induced == Sign::Minus {
                    report.interior_faces += 1;
                } else {
                    report.failures.push(format!("face cell {cell}: {a:?} and {b:?} induce the same orientation"));
                }
            }
            more => report.failures.push(format!("face cell {cell} has {} cofaces", more.len())),
        }
    }
    report
}
