use std::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::intlinalg::{is_exact_at, AbelianGroup, IntMatrix};
use crate::simplicial::Complex;

use super::{homology, HomologyError, HomologyResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MvTerm {
    /// `H_d(U ∩ V)`
    Intersection,
    /// `H_d(U) ⊕ H_d(V)`
    Sum,
    /// `H_d(K)`
    Total,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvNode {
    pub degree: usize,
    pub term: MvTerm,
    pub group: AbelianGroup,
    pub exact: bool,
}

impl MvNode {
    pub fn label(&self) -> String {
        match self.term {
            MvTerm::Intersection => format!("H_{}(U∩V)", self.degree),
            MvTerm::Sum => format!("H_{}(U)+H_{}(V)", self.degree, self.degree),
            MvTerm::Total => format!("H_{}(K)", self.degree),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvReport {
    /// Nodes in sequence order, from the top degree down.
    pub nodes: Vec<MvNode>,
    /// Connecting maps `H_d(K) -> H_{d-1}(U ∩ V)` for `d >= 1`.
    pub connecting: Vec<(usize, IntMatrix)>,
}

impl MvReport {
    pub fn is_exact(&self) -> bool {
        self.nodes.iter().all(|n| n.exact)
    }
}

fn coords(h: &HomologyResult, c: &crate::simplicial::Chain) -> Result<Vec<BigInt>, HomologyError> {
    Ok(h.class_coordinates(c)?.to_vec())
}

fn direct_sum(a: &AbelianGroup, b: &AbelianGroup) -> Vec<BigInt> {
    let mut m = a.moduli();
    m.extend(b.moduli());
    m
}

/// Builds the Mayer-Vietoris sequence of the cover `K = U ∪ V` by
/// subcomplexes and checks exactness at every node.
///
/// The connecting map sends a cycle `z` of `K` to the boundary of its part
/// carried by `U`, which lies in `U ∩ V`. `degrees` restricts which nodes are
/// reported; all maps are computed regardless.
pub fn mv_check(
    k: &Complex,
    u: &Complex,
    v: &Complex,
    degrees: Option<RangeInclusive<usize>>,
) -> Result<MvReport, HomologyError> {
    if !u.is_subcomplex_of(k) || !v.is_subcomplex_of(k) || &u.union(v) != k {
        return Err(HomologyError::NotCover);
    }
    let Some(top) = k.dim() else {
        return Ok(MvReport { nodes: Vec::new(), connecting: Vec::new() });
    };
    let w = u.intersection(v);
    let (hk, hu, hv, hw) = (homology(k), homology(u), homology(v), homology(&w));

    let mut phi = Vec::with_capacity(top + 1);
    let mut psi = Vec::with_capacity(top + 1);
    let mut delta = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let (gu, gv, gk, gw) = (hu.group(d), hv.group(d), hk.group(d), hw.group(d));
        let sum_len = gu.num_generators() + gv.num_generators();

        let mut cols = Vec::new();
        for r in hw.degree(d).map(|x| x.representatives.as_slice()).unwrap_or_default() {
            let mut c = coords(&hu, r)?;
            c.extend(coords(&hv, r)?);
            cols.push(c);
        }
        phi.push(IntMatrix::from_columns(&cols, sum_len));

        let mut cols = Vec::new();
        for r in hu.degree(d).map(|x| x.representatives.as_slice()).unwrap_or_default() {
            cols.push(coords(&hk, r)?);
        }
        for r in hv.degree(d).map(|x| x.representatives.as_slice()).unwrap_or_default() {
            cols.push(coords(&hk, &-r)?);
        }
        psi.push(IntMatrix::from_columns(&cols, gk.num_generators()));

        let rows = if d == 0 { 0 } else { hw.group(d - 1).num_generators() };
        let mut cols = Vec::new();
        for z in hk.degree(d).map(|x| x.representatives.as_slice()).unwrap_or_default() {
            if d == 0 {
                cols.push(Vec::new());
                continue;
            }
            let in_u = z.filter(|s| u.contains(s));
            cols.push(coords(&hw, &in_u.boundary())?);
        }
        delta.push(IntMatrix::from_columns(&cols, rows));
        let _ = gw;
    }

    let g = |h: &HomologyResult, d: usize| h.group(d);
    let mut nodes = Vec::new();
    for d in (0..=top).rev() {
        let sum_mod = direct_sum(&g(&hu, d), &g(&hv, d));
        // incoming map to H_d(U∩V) comes from H_{d+1}(K)
        let incoming = if d == top {
            IntMatrix::zeros(g(&hw, d).num_generators(), 0)
        } else {
            delta[d + 1].clone()
        };
        let exact_w = is_exact_at(&incoming, &g(&hw, d).moduli(), &phi[d], &sum_mod);
        let exact_s = is_exact_at(&phi[d], &sum_mod, &psi[d], &g(&hk, d).moduli());
        let down = if d == 0 { Vec::new() } else { g(&hw, d - 1).moduli() };
        let exact_k = is_exact_at(&psi[d], &g(&hk, d).moduli(), &delta[d], &down);

        let sum_group = AbelianGroup {
            rank: g(&hu, d).rank + g(&hv, d).rank,
            torsion: g(&hu, d).torsion.iter().chain(&g(&hv, d).torsion).cloned().collect(),
        };
        for (term, group, exact) in [
            (MvTerm::Intersection, g(&hw, d), exact_w),
            (MvTerm::Sum, sum_group, exact_s),
            (MvTerm::Total, g(&hk, d), exact_k),
        ] {
            if degrees.as_ref().map_or(true, |r| r.contains(&d)) {
                nodes.push(MvNode { degree: d, term, group, exact });
            }
        }
    }
    let connecting = (1..=top)
        .filter(|d| degrees.as_ref().map_or(true, |r| r.contains(d)))
        .map(|d| (d, delta[d].clone()))
        .collect();
    Ok(MvReport { nodes, connecting })
}
