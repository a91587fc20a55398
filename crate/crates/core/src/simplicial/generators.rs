//! Fixture complexes and pairs.

use super::{Complex, SimplicialPair, VertexId};

fn build(gens: &[Vec<VertexId>]) -> Complex {
    Complex::from_maximal(gens).expect("fixture simplices have distinct vertices")
}

/// The full n-simplex on vertices `0..=n`.
pub fn simplex(n: usize) -> Complex {
    build(&[(0..=n).collect()])
}

/// `(simplex(n), boundary of simplex(n))`; models an open n-cell.
pub fn simplex_pair(n: usize) -> SimplicialPair {
    let k = simplex(n);
    let l = k.skeleton(n.saturating_sub(1));
    let l = if n == 0 { Complex::new() } else { l };
    SimplicialPair { k, l }
}

/// The boundary of the (n+1)-simplex.
pub fn sphere(n: usize) -> Complex {
    simplex(n + 1).skeleton(n)
}

/// Seven-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus() -> Complex {
    let mut gens = Vec::new();
    for i in 0..7 {
        gens.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        gens.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    build(&gens)
}

/// Torus from a `rows x cols` grid of squares, each cut along a diagonal.
/// Vertex `(r, c)` has id `r * cols + c`. Needs `rows, cols >= 3`.
pub fn torus_grid(rows: usize, cols: usize) -> Complex {
    assert!(rows >= 3 && cols >= 3, "grid torus needs at least 3 rows and columns");
    let id = |r: usize, c: usize| (r % rows) * cols + (c % cols);
    let mut gens = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let (a, b, d, e) = (id(r, c), id(r, c + 1), id(r + 1, c), id(r + 1, c + 1));
            gens.push(vec![a, b, e]);
            gens.push(vec![a, d, e]);
        }
    }
    build(&gens)
}

/// Rows `first..=last` of [`torus_grid`] squares, as a closed subcomplex.
pub fn torus_grid_band(rows: usize, cols: usize, first: usize, last: usize) -> Complex {
    let id = |r: usize, c: usize| (r % rows) * cols + (c % cols);
    let mut gens = Vec::new();
    for r in first..=last {
        for c in 0..cols {
            let (a, b, d, e) = (id(r, c), id(r, c + 1), id(r + 1, c), id(r + 1, c + 1));
            gens.push(vec![a, b, e]);
            gens.push(vec![a, d, e]);
        }
    }
    build(&gens)
}

/// Five-vertex Moebius strip with its boundary circle at infinity.
pub fn mobius_pair() -> SimplicialPair {
    let k = build(&(0..5).map(|i| vec![i, (i + 1) % 5, (i + 2) % 5]).collect::<Vec<_>>());
    let l = build(&(0..5).map(|i| vec![i, (i + 2) % 5]).collect::<Vec<_>>());
    SimplicialPair { k, l }
}

/// Annulus between the triangle circles `0,1,2` and `3,4,5`.
pub fn cylinder() -> Complex {
    build(&[vec![0, 1, 3], vec![1, 3, 4], vec![1, 2, 4], vec![2, 4, 5], vec![0, 2, 5], vec![0, 3, 5]])
}

/// The two boundary circles of [`cylinder`]: outer `0,1,2`, inner `3,4,5`.
pub fn cylinder_circles() -> (Complex, Complex) {
    (
        build(&[vec![0, 1], vec![1, 2], vec![0, 2]]),
        build(&[vec![3, 4], vec![4, 5], vec![3, 5]]),
    )
}

/// The annulus with both boundary circles at infinity; models an open annulus.
pub fn cylinder_pair() -> SimplicialPair {
    let (outer, inner) = cylinder_circles();
    SimplicialPair { k: cylinder(), l: outer.union(&inner) }
}

/// Disjoint union; the vertices of `b` are shifted past those of `a`.
pub fn disjoint_union(a: &Complex, b: &Complex) -> Complex {
    let shift = a.max_vertex().map_or(0, |m| m + 1);
    let mut out = a.clone();
    for s in b.iter() {
        let moved: Vec<VertexId> = s.vertices().iter().map(|v| v + shift).collect();
        out.insert_closed(&super::Simplex::new(moved).expect("shift keeps vertices distinct"));
    }
    out
}

/// Cone on `k` with a new apex vertex just above the largest id.
pub fn cone(k: &Complex) -> Complex {
    let apex = k.max_vertex().map_or(0, |m| m + 1);
    let mut out = k.clone();
    out.insert_closed(&super::Simplex::vertex(apex));
    for s in k.iter() {
        let mut v = s.vertices().to_vec();
        v.push(apex);
        out.insert_closed(&super::Simplex::new(v).expect("apex is fresh"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(k: &Complex) -> Vec<usize> {
        (0..=k.dim().unwrap_or(0)).map(|d| k.count_of_dim(d)).collect()
    }

    #[test]
    fn documented_counts() {
        let p = simplex_pair(2);
        assert_eq!((p.k.len(), p.l.len()), (7, 6));
        assert_eq!(counts(&sphere(1)), vec![3, 3]);
        assert_eq!(counts(&torus()), vec![7, 21, 14]);
        assert_eq!(counts(&mobius_pair().k), vec![5, 10, 5]);
        assert_eq!(counts(&mobius_pair().l), vec![5, 5]);
        assert_eq!(counts(&cylinder()), vec![6, 12, 6]);
    }

    #[test]
    fn euler_characteristics() {
        for n in 0..=4 {
            assert_eq!(simplex(n).euler_characteristic(), 1);
        }
        for n in 1..=3 {
            assert_eq!(sphere(n).euler_characteristic(), 1 + if n % 2 == 0 { 1 } else { -1 });
        }
        assert_eq!(torus().euler_characteristic(), 0);
        assert_eq!(torus_grid(4, 3).euler_characteristic(), 0);
        assert_eq!(mobius_pair().k.euler_characteristic(), 0);
        assert_eq!(cylinder().euler_characteristic(), 0);
    }

    #[test]
    fn surfaces_have_two_triangles_per_edge() {
        for k in [torus(), torus_grid(3, 3), torus_grid(4, 3), sphere(2)] {
            for e in k.simplices_of_dim(1) {
                assert_eq!(k.cofacets(e).count(), 2, "edge {e}");
            }
        }
    }

    #[test]
    fn fixtures_are_valid_pairs() {
        let pairs = [simplex_pair(1), simplex_pair(3), mobius_pair(), cylinder_pair()];
        for p in pairs {
            assert!(p.k.is_closed() && p.l.is_closed());
            assert!(p.l.is_subcomplex_of(&p.k));
        }
    }

    #[test]
    fn unions_and_cones() {
        let two = disjoint_union(&sphere(1), &sphere(1));
        assert_eq!(two.count_of_dim(0), 6);
        assert_eq!(two.euler_characteristic(), 0);
        let c = cone(&sphere(1));
        assert_eq!(c.euler_characteristic(), 1);
        assert_eq!(c.count_of_dim(2), 3);
    }

    #[test]
    fn grid_bands() {
        let band = torus_grid_band(4, 3, 0, 1);
        assert_eq!(band.count_of_dim(2), 12);
        assert_eq!(band.euler_characteristic(), 0);
        assert!(band.is_subcomplex_of(&torus_grid(4, 3)));
    }
}
