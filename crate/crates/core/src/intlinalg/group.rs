use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::smith::{smith_normal_form, solve_integer, SmithForm};
use super::{IntMatrix, LinalgError};

/// A finitely generated abelian group `Z^rank + Z/t_1 + ... + Z/t_m` with
/// `1 < t_1 | t_2 | ... | t_m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    /// Validates the invariant-factor ordering.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self, LinalgError> {
        if torsion.iter().any(|t| t <= &BigInt::one()) {
            return Err(LinalgError::InvalidGroup("torsion factors must exceed 1".into()));
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(LinalgError::InvalidGroup("torsion factors must form a divisibility chain".into()));
        }
        Ok(AbelianGroup { rank, torsion })
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Number of generators in the torsion-then-free coordinate layout.
    pub fn num_generators(&self) -> usize {
        self.torsion.len() + self.rank
    }

    /// Per-coordinate moduli in the torsion-then-free layout; `0` marks a free coordinate.
    pub fn moduli(&self) -> Vec<BigInt> {
        self.torsion
            .iter()
            .cloned()
            .chain(std::iter::repeat(BigInt::zero()).take(self.rank))
            .collect()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coordinates of a homology class against a fixed generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassCoords {
    /// Residues modulo the corresponding invariant factor, in `[0, t_i)`.
    pub torsion: Vec<BigInt>,
    pub free: Vec<BigInt>,
}

impl ClassCoords {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().chain(&self.free).all(Zero::is_zero)
    }

    /// Torsion coordinates followed by free ones.
    pub fn to_vec(&self) -> Vec<BigInt> {
        self.torsion.iter().chain(&self.free).cloned().collect()
    }
}

/// `ker(d_k) / im(d_{k+1})` together with the data needed to read off the
/// class of any cycle.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    pub group: AbelianGroup,
    /// Chain vectors generating the torsion summands, in factor order.
    pub torsion_reps: Vec<Vec<BigInt>>,
    /// Chain vectors generating the free part.
    pub free_reps: Vec<Vec<BigInt>>,
    d_k: IntMatrix,
    d_kplus1: IntMatrix,
    /// Rows of the inverse column transform projecting a cycle onto kernel coordinates.
    kernel_projection: IntMatrix,
    /// Row transform of the relation matrix in kernel coordinates.
    relation_u: IntMatrix,
    torsion_index: Vec<usize>,
    free_index: Vec<usize>,
}

impl HomologyGroup {
    /// Dimension of the underlying chain group.
    pub fn chain_dim(&self) -> usize {
        self.d_k.cols()
    }

    /// Torsion representatives followed by free ones.
    pub fn representatives(&self) -> impl Iterator<Item = &Vec<BigInt>> {
        self.torsion_reps.iter().chain(&self.free_reps)
    }

    pub fn is_cycle(&self, z: &[BigInt]) -> bool {
        self.d_k.mul_vec(z).iter().all(Zero::is_zero)
    }

    pub fn coordinates(&self, z: &[BigInt]) -> Result<ClassCoords, LinalgError> {
        if z.len() != self.chain_dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.chain_dim(),
                found: z.len(),
            });
        }
        if !self.is_cycle(z) {
            return Err(LinalgError::NotACycle);
        }
        let x = self.kernel_projection.mul_vec(z);
        let y = self.relation_u.mul_vec(&x);
        let torsion = self
            .torsion_index
            .iter()
            .zip(&self.group.torsion)
            .map(|(&i, t)| y[i].mod_floor(t))
            .collect();
        let free = self.free_index.iter().map(|&i| y[i].clone()).collect();
        Ok(ClassCoords { torsion, free })
    }

    pub fn is_boundary(&self, z: &[BigInt]) -> Result<bool, LinalgError> {
        Ok(self.coordinates(z)?.is_zero())
    }
}

/// Computes `ker(d_k) / im(d_kplus1)` with representative cycles.
///
/// `d_k` maps the degree-k chain group (its columns) to degree k-1, and
/// `d_kplus1` maps degree k+1 into the degree-k chain group (its rows).
pub fn homology_group(d_k: &IntMatrix, d_kplus1: &IntMatrix) -> Result<HomologyGroup, LinalgError> {
    let n = d_k.cols();
    if d_kplus1.rows() != n {
        return Err(LinalgError::DimensionMismatch { expected: n, found: d_kplus1.rows() });
    }
    if !(d_k * d_kplus1).is_zero() {
        return Err(LinalgError::CompositionNonzero);
    }

    let outer: SmithForm = smith_normal_form(d_k);
    let r = outer.rank();
    let kernel_basis = outer.v.column_range(r, n);
    let kernel_projection = outer.v_inv.row_range(r, n);
    // The first r rows of v_inv * d_kplus1 vanish because d_k * d_kplus1 = 0.
    let relations = &kernel_projection * d_kplus1;

    let inner = smith_normal_form(&relations);
    let m = n - r;
    let mut torsion_index = Vec::new();
    let mut torsion = Vec::new();
    for i in 0..inner.rank() {
        let f = &inner.d[(i, i)];
        if !f.is_one() {
            torsion_index.push(i);
            torsion.push(f.clone());
        }
    }
    let free_index: Vec<usize> = (inner.rank()..m).collect();

    let rep = |i: usize| kernel_basis.mul_vec(&inner.u_inv.column(i));
    let torsion_reps = torsion_index.iter().map(|&i| rep(i)).collect();
    let free_reps = free_index.iter().map(|&i| rep(i)).collect();

    Ok(HomologyGroup {
        group: AbelianGroup { rank: free_index.len(), torsion },
        torsion_reps,
        free_reps,
        d_k: d_k.clone(),
        d_kplus1: d_kplus1.clone(),
        kernel_projection,
        relation_u: inner.u,
        torsion_index,
        free_index,
    })
}

/// Matrix of the map induced on homology by the chain-level matrix `f`.
///
/// Columns follow the source generators (torsion then free); rows follow the
/// target coordinates in the same layout, with torsion rows reduced modulo
/// their invariant factor.
pub fn induced_map(
    f: &IntMatrix,
    source: &HomologyGroup,
    target: &HomologyGroup,
) -> Result<IntMatrix, LinalgError> {
    if f.cols() != source.chain_dim() || f.rows() != target.chain_dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: source.chain_dim(),
            found: f.cols(),
        });
    }
    // Cycles must go to cycles, boundaries to boundaries.
    for z in integer_kernel_columns(&source.d_k) {
        if !target.is_cycle(&f.mul_vec(&z)) {
            return Err(LinalgError::NotChainMap);
        }
    }
    for b in source.d_kplus1.columns() {
        if !target.is_boundary(&f.mul_vec(&b))? {
            return Err(LinalgError::NotChainMap);
        }
    }
    let columns: Vec<Vec<BigInt>> = source
        .representatives()
        .map(|z| target.coordinates(&f.mul_vec(z)).map(|c| c.to_vec()))
        .collect::<Result<_, _>>()?;
    Ok(IntMatrix::from_columns(&columns, target.group.num_generators()))
}

fn integer_kernel_columns(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    super::integer_kernel(a).columns().collect()
}

fn relation_matrix(moduli: &[BigInt]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = moduli
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(i, m)| {
            let mut c = vec![BigInt::zero(); moduli.len()];
            c[i] = m.clone();
            c
        })
        .collect();
    IntMatrix::from_columns(&cols, moduli.len())
}

fn is_zero_mod(v: &[BigInt], moduli: &[BigInt]) -> bool {
    v.iter().zip(moduli).all(|(x, m)| if m.is_zero() { x.is_zero() } else { x.is_multiple_of(m) })
}

/// Whether the columns of `map` all vanish in the group with the given moduli.
pub fn is_zero_map(map: &IntMatrix, target_moduli: &[BigInt]) -> bool {
    map.columns().all(|c| is_zero_mod(&c, target_moduli))
}

/// Whether `v` lies in the subgroup generated by the columns of `map`, in the
/// group with the given moduli.
pub fn in_image(map: &IntMatrix, moduli: &[BigInt], v: &[BigInt]) -> bool {
    let a = map.hstack(&relation_matrix(moduli));
    solve_integer(&a, v).is_some()
}

/// Whether a map between coordinate groups is onto.
pub fn is_surjective(map: &IntMatrix, target_moduli: &[BigInt]) -> bool {
    let n = target_moduli.len();
    (0..n).all(|i| {
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::one();
        in_image(map, target_moduli, &e)
    })
}

/// Exactness of `A --alpha--> G --beta--> C` at `G`, for groups given by
/// coordinate moduli (torsion or free per coordinate, no ordering required).
///
/// `alpha` has `g_moduli.len()` rows; `beta` has `g_moduli.len()` columns and
/// `c_moduli.len()` rows.
pub fn is_exact_at(alpha: &IntMatrix, g_moduli: &[BigInt], beta: &IntMatrix, c_moduli: &[BigInt]) -> bool {
    let n = g_moduli.len();
    assert_eq!(alpha.rows(), n);
    assert_eq!(beta.cols(), n);
    assert_eq!(beta.rows(), c_moduli.len());
    if !is_zero_map(&(beta * alpha), c_moduli) {
        return false;
    }
    // ker beta = projection of ker [beta | R_C] onto the first n coordinates.
    let block = beta.hstack(&relation_matrix(c_moduli));
    let kernel = super::integer_kernel(&block);
    let exact = kernel.columns().all(|col| in_image(alpha, g_moduli, &col[..n]));
    exact
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn triangle_boundary() -> IntMatrix {
        // vertices 0,1,2; edges [0,1],[0,2],[1,2]
        IntMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]], 3)
    }

    #[test]
    fn circle_homology() {
        let d1 = triangle_boundary();
        let h1 = homology_group(&d1, &IntMatrix::zeros(3, 0)).unwrap();
        assert_eq!(h1.group, AbelianGroup::free(1));
        let d0 = IntMatrix::zeros(0, 3);
        let h0 = homology_group(&d0, &d1).unwrap();
        assert_eq!(h0.group, AbelianGroup::free(1));
    }

    #[test]
    fn point_homology() {
        let h = homology_group(&IntMatrix::zeros(0, 1), &IntMatrix::zeros(1, 0)).unwrap();
        assert_eq!(h.group, AbelianGroup::free(1));
    }

    #[test]
    fn torsion_from_doubling() {
        // Z --2--> Z gives Z/2 in the target.
        let h = homology_group(&IntMatrix::zeros(0, 1), &IntMatrix::from_rows(&[vec![2]], 1)).unwrap();
        assert_eq!(h.group, AbelianGroup::new(0, vec![BigInt::from(2)]).unwrap());
        let c = h.coordinates(&[BigInt::from(3)]).unwrap();
        assert_eq!(c.torsion, vec![BigInt::one()]);
        assert!(h.is_boundary(&[BigInt::from(4)]).unwrap());
    }

    #[test]
    fn composition_nonzero_rejected() {
        let a = IntMatrix::identity(1);
        let b = IntMatrix::identity(1);
        assert!(matches!(homology_group(&a, &b), Err(LinalgError::CompositionNonzero)));
    }

    #[test]
    fn doubling_map_on_circle() {
        // Hexagon circle (6 vertices, edges [i,i+1] oriented forward) mapped onto
        // the triangle circle by i -> i mod 3; each triangle edge is hit twice.
        let hex_d1 = IntMatrix::from_fn(6, 6, |v, e| {
            let (a, b) = (e, (e + 1) % 6);
            if v == b {
                BigInt::one()
            } else if v == a {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        let tri_d1 = triangle_boundary();
        // hexagon edge e = [e, e+1] maps to triangle edge between e%3 and (e+1)%3.
        let f = IntMatrix::from_fn(3, 6, |t, e| {
            let (a, b) = (e % 3, (e + 1) % 3);
            let (lo, hi, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
            let idx = match (lo, hi) {
                (0, 1) => 0,
                (0, 2) => 1,
                _ => 2,
            };
            if idx == t { BigInt::from(s) } else { BigInt::zero() }
        });
        let src = homology_group(&hex_d1, &IntMatrix::zeros(6, 0)).unwrap();
        let dst = homology_group(&tri_d1, &IntMatrix::zeros(3, 0)).unwrap();
        let m = induced_map(&f, &src, &dst).unwrap();
        assert_eq!(m[(0, 0)].abs(), BigInt::from(2));

        let id = induced_map(&IntMatrix::identity(3), &dst, &dst).unwrap();
        assert_eq!(id, IntMatrix::identity(1));
        let zero = induced_map(&IntMatrix::zeros(3, 6), &src, &dst).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn non_chain_map_detected() {
        let tri = homology_group(&triangle_boundary(), &IntMatrix::zeros(3, 0)).unwrap();
        let mut f = IntMatrix::identity(3);
        f[(0, 0)] = BigInt::zero();
        assert!(matches!(induced_map(&f, &tri, &tri), Err(LinalgError::NotChainMap)));
    }

    #[test]
    fn exactness_of_short_sequence() {
        // 0 -> Z --2--> Z -> Z/2 -> 0
        let two = IntMatrix::from_rows(&[vec![2]], 1);
        let proj = IntMatrix::from_rows(&[vec![1]], 1);
        let z = [BigInt::zero()];
        let z2 = [BigInt::from(2)];
        assert!(is_exact_at(&two, &z, &proj, &z2));
        assert!(is_surjective(&proj, &z2));
        assert!(!is_exact_at(&IntMatrix::zeros(1, 1), &z, &proj, &z2));
    }
}
