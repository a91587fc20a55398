use std::collections::btree_map::{self, BTreeMap};
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{canonicalize, Complex, Simplex, SimplicialError, VertexId};

/// A finite integer chain of a fixed degree. Zero coefficients are never stored.
#[derive(Clone, Default)]
pub struct Chain {
    degree: usize,
    coeffs: BTreeMap<Simplex, BigInt>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, coeffs: BTreeMap::new() }
    }

    pub fn from_simplex(s: Simplex, a: impl Into<BigInt>) -> Self {
        let mut c = Chain::zero(s.dim());
        c.add_term(s, a.into());
        c
    }

    /// Chain from ordered vertex tuples; each tuple is canonicalized and
    /// degenerate tuples contribute nothing.
    pub fn from_oriented<A: Into<BigInt>>(
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<VertexId>, A)>,
    ) -> Result<Self, SimplicialError> {
        let mut c = Chain::zero(degree);
        for (tuple, a) in terms {
            if tuple.len() != degree + 1 {
                return Err(SimplicialError::DegreeMismatch { expected: degree, found: tuple.len().saturating_sub(1) });
            }
            c.add_oriented(&tuple, a.into());
        }
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, s: &Simplex) -> BigInt {
        self.coeffs.get(s).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Simplex, BigInt> {
        self.coeffs.iter()
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.coeffs.keys()
    }

    pub fn add_term(&mut self, s: Simplex, a: BigInt) {
        assert_eq!(s.dim(), self.degree, "simplex {s} has wrong dimension for a degree-{} chain", self.degree);
        if a.is_zero() {
            return;
        }
        match self.coeffs.entry(s) {
            btree_map::Entry::Vacant(e) => {
                e.insert(a);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += a;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `a` times the oriented simplex given by an ordered tuple.
    pub fn add_oriented(&mut self, ordered: &[VertexId], a: BigInt) {
        if let Some((s, sign)) = canonicalize(ordered) {
            self.add_term(s, sign.to_bigint() * a);
        }
    }

    pub fn scale(&self, k: &BigInt) -> Chain {
        if k.is_zero() {
            return Chain::zero(self.degree);
        }
        Chain { degree: self.degree, coeffs: self.coeffs.iter().map(|(s, a)| (s.clone(), a * k)).collect() }
    }

    /// Alternating sum of codimension-one faces. Degree-0 chains map to zero.
    pub fn boundary(&self) -> Chain {
        if self.degree == 0 {
            return Chain::zero(0);
        }
        let mut out = Chain::zero(self.degree - 1);
        for (s, a) in &self.coeffs {
            for (p, f) in s.facets() {
                if p % 2 == 0 {
                    out.add_term(f, a.clone());
                } else {
                    out.add_term(f, -a);
                }
            }
        }
        out
    }

    /// Union of the closures of all simplices with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<Simplex> {
        self.coeffs.keys().flat_map(|s| s.faces()).collect()
    }

    /// Keeps only the terms whose simplex satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Simplex) -> bool) -> Chain {
        Chain {
            degree: self.degree,
            coeffs: self.coeffs.iter().filter(|(s, _)| keep(s)).map(|(s, a)| (s.clone(), a.clone())).collect(),
        }
    }

    /// Whether every simplex of the chain belongs to `k`.
    pub fn lives_on(&self, k: &Complex) -> bool {
        self.coeffs.keys().all(|s| k.contains(s))
    }
}

impl PartialEq for Chain {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.degree == other.degree || self.coeffs.is_empty())
    }
}

impl Eq for Chain {}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, a)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if a.is_one() {
                write!(f, "{s}")?;
            } else {
                write!(f, "({a}){s}")?;
            }
        }
        Ok(())
    }
}

fn combine(a: &Chain, b: &Chain, negate_b: bool) -> Chain {
    let degree = if a.is_zero() { b.degree } else { a.degree };
    assert!(
        a.is_zero() || b.is_zero() || a.degree == b.degree,
        "adding chains of degrees {} and {}",
        a.degree,
        b.degree
    );
    let mut out = Chain { degree, coeffs: a.coeffs.clone() };
    for (s, x) in &b.coeffs {
        out.add_term(s.clone(), if negate_b { -x } else { x.clone() });
    }
    out
}

impl Add for &Chain {
    type Output = Chain;

    fn add(self, rhs: &Chain) -> Chain {
        combine(self, rhs, false)
    }
}

impl Sub for &Chain {
    type Output = Chain;

    fn sub(self, rhs: &Chain) -> Chain {
        combine(self, rhs, true)
    }
}

impl Neg for &Chain {
    type Output = Chain;

    fn neg(self) -> Chain {
        Chain { degree: self.degree, coeffs: self.coeffs.iter().map(|(s, a)| (s.clone(), -a)).collect() }
    }
}

impl Add for Chain {
    type Output = Chain;

    fn add(self, rhs: Chain) -> Chain {
        &self + &rhs
    }
}

impl Sub for Chain {
    type Output = Chain;

    fn sub(self, rhs: Chain) -> Chain {
        &self - &rhs
    }
}

impl Neg for Chain {
    type Output = Chain;

    fn neg(self) -> Chain {
        -&self
    }
}

/// An integer cochain: a finitely supported function on degree-q simplices.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    values: BTreeMap<Simplex, BigInt>,
}

impl Cochain {
    pub fn zero(degree: usize) -> Self {
        Cochain { degree, values: BTreeMap::new() }
    }

    pub fn indicator(s: Simplex) -> Self {
        let mut c = Cochain::zero(s.dim());
        c.set(s, BigInt::one());
        c
    }

    /// The cochain taking value `a` on every degree-q simplex of `k`.
    pub fn constant(k: &Complex, degree: usize, a: impl Into<BigInt>) -> Self {
        let a = a.into();
        let mut c = Cochain::zero(degree);
        for s in k.simplices_of_dim(degree) {
            c.set(s.clone(), a.clone());
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn set(&mut self, s: Simplex, a: BigInt) {
        assert_eq!(s.dim(), self.degree, "simplex {s} has wrong dimension for a degree-{} cochain", self.degree);
        if a.is_zero() {
            self.values.remove(&s);
        } else {
            self.values.insert(s, a);
        }
    }

    pub fn value(&self, s: &Simplex) -> BigInt {
        self.values.get(s).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Simplex, BigInt> {
        self.values.iter()
    }

    /// Canonical pairing with a chain of the same degree.
    pub fn evaluate(&self, c: &Chain) -> BigInt {
        if c.degree() != self.degree {
            return BigInt::zero();
        }
        c.iter().map(|(s, a)| a * self.value(s)).sum()
    }

    /// `(delta a)(sigma) = a(boundary sigma)` on every degree-(q+1) simplex of `k`.
    pub fn coboundary(&self, k: &Complex) -> Cochain {
        let mut out = Cochain::zero(self.degree + 1);
        for s in k.simplices_of_dim(self.degree + 1) {
            let v = self.evaluate(&Chain::from_simplex(s.clone(), 1).boundary());
            out.set(s.clone(), v);
        }
        out
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain(deg {}) {{", self.degree)?;
        for (s, a) in &self.values {
            write!(f, " {s}:{a}")?;
        }
        write!(f, " }}")
    }
}

impl Add for &Cochain {
    type Output = Cochain;

    fn add(self, rhs: &Cochain) -> Cochain {
        assert!(self.is_zero() || rhs.is_zero() || self.degree == rhs.degree);
        let mut out = self.clone();
        if out.is_zero() {
            out.degree = rhs.degree;
        }
        for (s, a) in &rhs.values {
            let v = out.value(s) + a;
            out.set(s.clone(), v);
        }
        out
    }
}
