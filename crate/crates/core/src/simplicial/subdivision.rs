use std::collections::BTreeMap;

use super::{Chain, Complex, Simplex, SimplicialError, SimplicialPair, VertexId};

/// A barycentric subdivision together with the barycenter assignment.
///
/// Each vertex `{v}` keeps its id `v`; every simplex of positive dimension
/// gets a fresh id, assigned in canonical simplex order starting just above
/// the largest original vertex id. Both complexes therefore live on a common
/// vertex set, which lets chains of `k` and of `sd k` be compared directly.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: Complex,
    barycenters: BTreeMap<Simplex, VertexId>,
    origin: BTreeMap<VertexId, Simplex>,
}

impl Subdivision {
    pub fn barycenter(&self, s: &Simplex) -> Option<VertexId> {
        self.barycenters.get(s).copied()
    }

    /// The simplex of the original complex whose barycenter is `v`.
    pub fn origin(&self, v: VertexId) -> Option<&Simplex> {
        self.origin.get(&v)
    }

    pub fn barycenters(&self) -> impl Iterator<Item = (&Simplex, VertexId)> {
        self.barycenters.iter().map(|(s, v)| (s, *v))
    }

    fn bary(&self, s: &Simplex) -> Result<VertexId, SimplicialError> {
        self.barycenter(s).ok_or_else(|| SimplicialError::SimplexNotInComplex(s.clone()))
    }

    /// The subdivision chain map: `sd(v) = v`, `sd(s) = b_s * sd(boundary s)`.
    pub fn sd_chain(&self, c: &Chain) -> Result<Chain, SimplicialError> {
        let mut out = Chain::zero(c.degree());
        for (s, a) in c.iter() {
            out = &out + &self.sd_simplex(s)?.scale(a);
        }
        Ok(out)
    }

    fn sd_simplex(&self, s: &Simplex) -> Result<Chain, SimplicialError> {
        if s.dim() == 0 {
            self.bary(s)?;
            return Ok(Chain::from_simplex(s.clone(), 1));
        }
        let b = self.bary(s)?;
        let inner = self.sd_chain(&Chain::from_simplex(s.clone(), 1).boundary())?;
        Ok(cone(b, &inner))
    }

    /// A chain homotopy `D` with `sd(c) - c = boundary(D c) + D(boundary c)`,
    /// defined by `D(v) = 0` and `D(s) = b_s * (sd s - s - D(boundary s))`.
    pub fn homotopy(&self, c: &Chain) -> Result<Chain, SimplicialError> {
        let mut out = Chain::zero(c.degree() + 1);
        for (s, a) in c.iter() {
            out = &out + &self.homotopy_simplex(s)?.scale(a);
        }
        Ok(out)
    }

    fn homotopy_simplex(&self, s: &Simplex) -> Result<Chain, SimplicialError> {
        if s.dim() == 0 {
            self.bary(s)?;
            return Ok(Chain::zero(1));
        }
        let b = self.bary(s)?;
        let unit = Chain::from_simplex(s.clone(), 1);
        let inner = &(&self.sd_simplex(s)? - &unit) - &self.homotopy(&unit.boundary())?;
        Ok(cone(b, &inner))
    }
}

/// Cone with the apex placed first: `[v0..vk] -> [apex, v0..vk]`, canonicalized.
pub fn cone(apex: VertexId, c: &Chain) -> Chain {
    let mut out = Chain::zero(c.degree() + 1);
    for (s, a) in c.iter() {
        let mut tuple = Vec::with_capacity(s.vertices().len() + 1);
        tuple.push(apex);
        tuple.extend_from_slice(s.vertices());
        out.add_oriented(&tuple, a.clone());
    }
    out
}

/// Barycentric subdivision: one vertex per simplex, one simplex per strictly
/// increasing flag of simplices.
pub fn barycentric_subdivision(k: &Complex) -> Subdivision {
    let mut next = k.max_vertex().map_or(0, |m| m + 1);
    let mut barycenters = BTreeMap::new();
    let mut origin = BTreeMap::new();
    for s in k.iter() {
        let b = if s.dim() == 0 {
            s.vertices()[0]
        } else {
            let b = next;
            next += 1;
            b
        };
        barycenters.insert(s.clone(), b);
        origin.insert(b, s.clone());
    }

    // flags ending at s, as barycenter lists
    let mut flags: BTreeMap<&Simplex, Vec<Vec<VertexId>>> = BTreeMap::new();
    for s in k.iter() {
        let b = barycenters[s];
        let mut here = vec![vec![b]];
        for f in s.proper_faces() {
            for flag in &flags[&f] {
                let mut g = flag.clone();
                g.push(b);
                here.push(g);
            }
        }
        flags.insert(s, here);
    }

    let complex = Complex::from_simplices(
        flags.values().flatten().map(|f| Simplex::new(f.clone()).expect("flag barycenters are distinct")),
    );
    Subdivision { complex, barycenters, origin }
}

/// Subdivides a pair; the subdivided infinity part is the set of flags inside `l`.
pub fn subdivide_pair(pair: &SimplicialPair) -> (SimplicialPair, Subdivision) {
    let sd = barycentric_subdivision(&pair.k);
    let l = Complex::from_simplices(
        sd.complex
            .iter()
            .filter(|t| t.vertices().iter().all(|v| sd.origin(*v).is_some_and(|o| pair.l.contains(o))))
            .cloned(),
    );
    let out = SimplicialPair { k: sd.complex.clone(), l };
    (out, sd)
}

/// `sd(c) - c - boundary(D c) - D(boundary c)`; zero when the homotopy identity holds.
pub fn homotopy_defect(sd: &Subdivision, c: &Chain) -> Result<Chain, SimplicialError> {
    let lhs = &sd.sd_chain(c)? - c;
    let d = sd.homotopy(c)?;
    let rhs = if c.degree() == 0 {
        d.boundary()
    } else {
        &d.boundary() + &sd.homotopy(&c.boundary())?
    };
    Ok(&lhs - &rhs)
}

#[cfg(test)]
mod tests {
    use super::super::generators::simplex;
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    /// Number of strict chains S_1 < ... < S_len of nonempty subsets of an n-set.
    fn flag_count(n: usize, len: usize) -> usize {
        let subsets: Vec<u32> = (1u32..(1 << n)).collect();
        fn go(subsets: &[u32], last: u32, remaining: usize) -> usize {
            if remaining == 0 {
                return 1;
            }
            subsets
                .iter()
                .filter(|&&t| t != last && t & last == last)
                .map(|&t| go(subsets, t, remaining - 1))
                .sum()
        }
        subsets.iter().map(|&t| go(&subsets, t, len - 1)).sum()
    }

    #[test]
    fn counts_match_flag_enumeration() {
        for n in 1..=4 {
            let sd = barycentric_subdivision(&simplex(n - 1));
            for len in 1..=n {
                assert_eq!(sd.complex.count_of_dim(len - 1), flag_count(n, len), "n={n} len={len}");
            }
        }
        let sd2 = barycentric_subdivision(&simplex(2));
        assert_eq!(sd2.complex.count_of_dim(2), 6);
        assert_eq!(sd2.complex.count_of_dim(1), 12);
        let sd1 = barycentric_subdivision(&simplex(1));
        assert_eq!((sd1.complex.count_of_dim(0), sd1.complex.count_of_dim(1)), (3, 2));
        let pt = barycentric_subdivision(&simplex(0));
        assert_eq!(pt.complex, simplex(0));
    }

    #[test]
    fn sd_of_edge() {
        let sd = barycentric_subdivision(&simplex(1));
        let b = sd.barycenter(&s(&[0, 1])).unwrap();
        let got = sd.sd_chain(&Chain::from_simplex(s(&[0, 1]), 1)).unwrap();
        let expected = Chain::from_oriented(1, vec![(vec![b, 1], 1), (vec![b, 0], -1)]).unwrap();
        assert_eq!(got, expected);
        assert!(sd.sd_chain(&Chain::zero(1)).unwrap().is_zero());
    }

    #[test]
    fn homotopy_identity_on_triangle() {
        let sd = barycentric_subdivision(&simplex(2));
        let c = Chain::from_simplex(s(&[0, 1, 2]), 1);
        assert!(homotopy_defect(&sd, &c).unwrap().is_zero());
        let sdc = sd.sd_chain(&c).unwrap();
        assert_eq!(sdc.len(), 6);
        assert_eq!(sdc.boundary(), sd.sd_chain(&c.boundary()).unwrap());
    }

    #[test]
    fn unknown_simplex_is_an_error() {
        let sd = barycentric_subdivision(&simplex(1));
        assert!(sd.sd_chain(&Chain::from_simplex(s(&[0, 5]), 1)).is_err());
    }

    #[test]
    fn deterministic_ids() {
        let a = barycentric_subdivision(&simplex(3));
        let b = barycentric_subdivision(&simplex(3));
        assert_eq!(a.complex, b.complex);
        assert_eq!(a.barycenter(&s(&[0, 1, 2, 3])), b.barycenter(&s(&[0, 1, 2, 3])));
    }
}
