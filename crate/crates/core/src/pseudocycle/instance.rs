use num_traits::{Signed, ToPrimitive};

use crate::simplicial::{canonicalize, Chain, Sign, Simplex, VertexId};

use super::PseudocycleError;

/// One copy `{i} x Δ^k` together with a linear map to the target complex.
///
/// `map[j]` is the image of corner `j`; the corner order is the orientation.
/// Degree-0 instances have no corner order to reorder, so they carry an
/// explicit sign instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplexInstance {
    pub id: usize,
    pub map: Vec<VertexId>,
    pub orientation: Sign,
}

impl SimplexInstance {
    pub fn new(id: usize, map: Vec<VertexId>, orientation: Sign) -> Result<Self, PseudocycleError> {
        if map.is_empty() || canonicalize(&map).is_none() {
            return Err(PseudocycleError::DegenerateSimplex(map));
        }
        Ok(SimplexInstance { id, map, orientation })
    }

    pub fn dim(&self) -> usize {
        self.map.len() - 1
    }

    /// Image tuple of face `p` (corner `p` removed).
    pub fn face_tuple(&self, p: usize) -> Vec<VertexId> {
        let mut t = self.map.clone();
        t.remove(p);
        t
    }

    /// Underlying simplex of the image and the sign of the instance relative
    /// to its sorted orientation.
    pub fn image(&self) -> (Simplex, Sign) {
        let (s, sign) = canonicalize(&self.map).expect("instance vertices are distinct");
        (s, sign * self.orientation)
    }

    /// Orientation induced on face `p` by the boundary formula, relative to
    /// the sorted order of the face's vertices.
    pub fn face_orientation(&self, p: usize) -> (Simplex, Sign) {
        let (s, sign) = canonicalize(&self.face_tuple(p)).expect("instance vertices are distinct");
        (s, sign * Sign::parity(p) * self.orientation)
    }
}

/// Corner inclusion `Δ^{k-1} -> Δ^k` skipping corner `p`.
pub fn face_inclusion(p: usize, j: usize) -> usize {
    if j < p {
        j
    } else {
        j + 1
    }
}

/// Expands `c` into unit-multiplicity instances: `a·s` becomes `|a|` copies of
/// `s`, with the first two corners swapped when `a < 0`.
pub fn expand_to_unit(c: &Chain) -> Result<Vec<SimplexInstance>, PseudocycleError> {
    let mut out = Vec::new();
    for (s, a) in c.iter() {
        let count = a.abs().to_usize().ok_or_else(|| PseudocycleError::CoefficientTooLarge(a.clone()))?;
        let mut map = s.vertices().to_vec();
        let mut orientation = Sign::Plus;
        if a.is_negative() {
            if map.len() >= 2 {
                map.swap(0, 1);
            } else {
                orientation = Sign::Minus;
            }
        }
        for _ in 0..count {
            out.push(SimplexInstance::new(out.len(), map.clone(), orientation)?);
        }
    }
    Ok(out)
}

/// The chain `Σ_i σ_i` with each instance canonicalized.
pub fn instances_to_chain(degree: usize, instances: &[SimplexInstance]) -> Chain {
    let mut c = Chain::zero(degree);
    for inst in instances {
        let (s, sign) = inst.image();
        c.add_term(s, sign.to_bigint());
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let two = expand_to_unit(&Chain::from_simplex(s(&[0, 1, 2]), 2)).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.iter().all(|i| i.map == vec![0, 1, 2]));
        assert_eq!(two.iter().map(|i| i.id).collect::<Vec<_>>(), vec![0, 1]);

        let neg = expand_to_unit(&Chain::from_simplex(s(&[0, 1, 2]), -1)).unwrap();
        assert_eq!(neg[0].map, vec![1, 0, 2]);
        assert_eq!(neg[0].orientation, Sign::Plus);

        assert!(expand_to_unit(&Chain::zero(2)).unwrap().is_empty());

        let point = expand_to_unit(&Chain::from_simplex(s(&[4]), -2)).unwrap();
        assert!(point.iter().all(|i| i.orientation == Sign::Minus));
    }

    #[test]
    fn expansion_recovers_the_chain() {
        let c = &(&Chain::from_simplex(s(&[0, 1, 3]), 3) - &Chain::from_simplex(s(&[1, 2, 3]), 2))
            + &Chain::from_simplex(s(&[0, 2, 3]), -1);
        assert_eq!(instances_to_chain(2, &expand_to_unit(&c).unwrap()), c);
        let p = Chain::from_simplex(s(&[5]), -3);
        assert_eq!(instances_to_chain(0, &expand_to_unit(&p).unwrap()), p);
    }

    #[test]
    fn degenerate_maps_are_rejected() {
        assert!(matches!(
            SimplexInstance::new(0, vec![1, 1, 2], Sign::Plus),
            Err(PseudocycleError::DegenerateSimplex(_))
        ));
    }

    #[test]
    fn face_orientation_follows_the_boundary_sign() {
        let i = SimplexInstance::new(0, vec![0, 1, 2], Sign::Plus).unwrap();
        // ∂[0,1,2] = [1,2] - [0,2] + [0,1]
        assert_eq!(i.face_orientation(0), (s(&[1, 2]), Sign::Plus));
        assert_eq!(i.face_orientation(1), (s(&[0, 2]), Sign::Minus));
        assert_eq!(i.face_orientation(2), (s(&[0, 1]), Sign::Plus));
        assert_eq!(face_inclusion(1, 0), 0);
        assert_eq!(face_inclusion(1, 1), 2);
    }
}
