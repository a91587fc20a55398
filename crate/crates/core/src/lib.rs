//! Integral Borel-Moore homology of finite simplicial pairs, and the passage
//! between integral cycles and combinatorial pseudocycles.
//!
//! A space is modelled as `|K| - |L|` for a finite simplicial pair `(K, L)`;
//! its Borel-Moore homology is the relative homology `H_*(K, L; Z)`.
//!
//! - [`intlinalg`]: Smith normal form, integer solving, homology of integer
//!   chain complexes.
//! - [`simplicial`]: simplices, chains, cochains, subdivision, fixtures.
//! - [`bmhomology`]: homology of pairs, fundamental cycles, cap products,
//!   duality and Mayer-Vietoris checks.
//! - [`pseudocycle`]: gluing cycles into pseudomanifolds and back, bordisms.

pub mod bmhomology;
pub mod intlinalg;
pub mod pseudocycle;
pub mod simplicial;
