//! Seeded random complexes, chains and cochains for property suites.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use super::{Chain, Cochain, Complex, Simplex};

/// A complex on at most `max_vertices` vertices generated by a few random
/// simplices of dimension at most `max_dim`.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, max_dim: usize) -> Complex {
    let n = rng.gen_range(max_dim.max(1) + 1..=max_vertices.max(max_dim + 2));
    let vertices: Vec<usize> = (0..n).collect();
    let generators = rng.gen_range(1..=4);
    let mut k = Complex::new();
    for _ in 0..generators {
        let d = rng.gen_range(0..=max_dim.min(n - 1));
        let picked: Vec<usize> = vertices.choose_multiple(rng, d + 1).copied().collect();
        k.insert_closed(&Simplex::new(picked).expect("choose_multiple yields distinct vertices"));
    }
    k
}

/// Random chain on the degree-`degree` simplices of `k`, coefficients in `-3..=3`.
pub fn random_chain<R: Rng + ?Sized>(rng: &mut R, k: &Complex, degree: usize) -> Chain {
    let mut c = Chain::zero(degree);
    for s in k.simplices_of_dim(degree) {
        let a: i64 = rng.gen_range(-3..=3);
        c.add_term(s.clone(), BigInt::from(a));
    }
    c
}

/// Random cochain on the degree-`degree` simplices of `k`, values in `-3..=3`.
pub fn random_cochain<R: Rng + ?Sized>(rng: &mut R, k: &Complex, degree: usize) -> Cochain {
    let mut a = Cochain::zero(degree);
    for s in k.simplices_of_dim(degree) {
        let v: i64 = rng.gen_range(-3..=3);
        a.set(s.clone(), BigInt::from(v));
    }
    a
}
