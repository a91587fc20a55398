use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;

use crate::simplicial::{canonicalize, Chain, Sign, Simplex, SimplicialPair, VertexId};

use super::HomologyError;

/// A coherently oriented relative fundamental cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalClassResult {
    /// Sum of the top simplices outside infinity, each with coefficient +-1.
    pub cycle: Chain,
    /// Orientation of each top simplex relative to its sorted vertex order.
    pub orientation: BTreeMap<Simplex, Sign>,
}

impl FundamentalClassResult {
    /// The vertex order realizing the orientation of `s` (sorted, or with the
    /// first two vertices swapped).
    pub fn oriented_tuple(&self, s: &Simplex) -> Option<Vec<VertexId>> {
        let sign = *self.orientation.get(s)?;
        let mut v = s.vertices().to_vec();
        if sign == Sign::Minus && v.len() >= 2 {
            v.swap(0, 1);
        }
        Some(v)
    }

    /// Local value of the cycle at `s` read against its own orientation label.
    pub fn local_value(&self, s: &Simplex) -> Option<BigInt> {
        let sign = self.orientation.get(s)?;
        Some(self.cycle.coefficient(s) * sign.to_bigint())
    }
}

/// Propagates the orientation of `seed` across interior codimension-one faces.
///
/// Every codimension-one simplex outside infinity must have exactly two top
/// cofaces, and the top simplices outside infinity must be connected through
/// such faces. Propagation is breadth-first with neighbours visited in
/// canonical simplex order.
pub fn fundamental_cycle(pair: &SimplicialPair, seed: &[VertexId]) -> Result<FundamentalClassResult, HomologyError> {
    let n = pair.k.dim().ok_or(HomologyError::NoTopSimplex)?;
    let (seed_simplex, seed_sign) =
        canonicalize(seed).ok_or_else(|| HomologyError::InvalidSeed(format!("{seed:?} repeats a vertex")))?;
    let tops = pair.relative_simplices(n);
    if !tops.contains(&seed_simplex) {
        return Err(HomologyError::InvalidSeed(format!("{seed_simplex} is not a top simplex outside infinity")));
    }

    // interior face -> [(top, position of the removed vertex)]
    let mut cofaces: BTreeMap<Simplex, Vec<(usize, usize)>> = BTreeMap::new();
    if n > 0 {
        for f in pair.relative_simplices(n - 1) {
            cofaces.insert(f, Vec::new());
        }
        for (t, s) in tops.iter().enumerate() {
            for (p, f) in s.facets() {
                if let Some(list) = cofaces.get_mut(&f) {
                    list.push((t, p));
                }
            }
        }
        if let Some((f, list)) = cofaces.iter().find(|(_, l)| l.len() != 2) {
            return Err(HomologyError::NotPseudoManifold { face: f.clone(), cofaces: list.len() });
        }
    }

    let mut neighbours: Vec<Vec<(usize, usize, usize, &Simplex)>> = vec![Vec::new(); tops.len()];
    for (f, list) in &cofaces {
        let [(a, pa), (b, pb)] = [list[0], list[1]];
        neighbours[a].push((b, pa, pb, f));
        neighbours[b].push((a, pb, pa, f));
    }
    for list in &mut neighbours {
        list.sort_by(|x, y| tops[x.0].cmp(&tops[y.0]).then(x.3.cmp(y.3)));
    }

    let mut sign: Vec<Option<Sign>> = vec![None; tops.len()];
    let start = tops.iter().position(|s| *s == seed_simplex).expect("seed checked above");
    sign[start] = Some(seed_sign);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        let st = sign[t].expect("queued simplices are oriented");
        for &(u, pt, pu, f) in &neighbours[t] {
            // induced orientations on f must cancel
            let want = -(st * Sign::parity(pt + pu));
            match sign[u] {
                None => {
                    sign[u] = Some(want);
                    queue.push_back(u);
                }
                Some(su) if su != want => return Err(HomologyError::NonOrientable { face: f.clone() }),
                Some(_) => {}
            }
        }
    }

    if let Some(t) = sign.iter().position(Option::is_none) {
        return Err(HomologyError::Disconnected(tops[t].clone()));
    }

    let mut cycle = Chain::zero(n);
    let mut orientation = BTreeMap::new();
    for (s, sg) in tops.into_iter().zip(sign) {
        let sg = sg.expect("all oriented");
        cycle.add_term(s.clone(), sg.to_bigint());
        orientation.insert(s, sg);
    }
    Ok(FundamentalClassResult { cycle, orientation })
}

/// Fundamental cycle seeded at the first top simplex outside infinity, with
/// its sorted orientation.
pub fn default_fundamental_cycle(pair: &SimplicialPair) -> Result<FundamentalClassResult, HomologyError> {
    let n = pair.k.dim().ok_or(HomologyError::NoTopSimplex)?;
    let seed = pair.relative_simplices(n).into_iter().next().ok_or(HomologyError::NoTopSimplex)?;
    fundamental_cycle(pair, seed.vertices())
}

/// Coefficient of the top simplex `s` in `c`, read against the sorted orientation of `s`.
pub fn local_restriction(c: &Chain, s: &Simplex, pair: &SimplicialPair) -> Result<BigInt, HomologyError> {
    if pair.is_at_infinity(s) {
        return Err(HomologyError::SimplexAtInfinity(s.clone()));
    }
    if Some(s.dim()) != pair.k.dim() || !pair.k.contains(s) {
        return Err(HomologyError::NotTopSimplex(s.clone()));
    }
    Ok(c.coefficient(s))
}
