//! JSON file formats for complexes, pairs, chains and covers.

use std::fs;
use std::path::{Path, PathBuf};

use bmh_core::simplicial::{Chain, Complex, Simplex, SimplicialPair, VertexId};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFile {
    #[serde(default)]
    pub vertices: Vec<VertexId>,
    #[serde(default)]
    pub simplices: Vec<Vec<VertexId>>,
    #[serde(default)]
    pub infinity: Vec<Vec<VertexId>>,
}

fn generated(lists: &[Vec<VertexId>], extra: &[VertexId]) -> Result<Complex, CliError> {
    let mut k = Complex::new();
    for s in lists.iter().cloned().chain(extra.iter().map(|&v| vec![v])) {
        let s = Simplex::new(s.clone()).map_err(|e| CliError::Input(format!("bad simplex {s:?}: {e}")))?;
        k.insert_closed(&s);
    }
    Ok(k)
}

fn maximal(k: &Complex) -> Vec<Vec<VertexId>> {
    k.maximal_simplices().iter().map(|s| s.vertices().to_vec()).collect()
}

impl PairFile {
    pub fn from_pair(pair: &SimplicialPair) -> Self {
        PairFile { vertices: pair.k.vertices().collect(), simplices: maximal(&pair.k), infinity: maximal(&pair.l) }
    }

    pub fn from_complex(k: &Complex) -> Self {
        PairFile { vertices: k.vertices().collect(), simplices: maximal(k), infinity: Vec::new() }
    }

    pub fn complex(&self) -> Result<Complex, CliError> {
        generated(&self.simplices, &self.vertices)
    }

    pub fn to_pair(&self) -> Result<SimplicialPair, CliError> {
        let k = self.complex()?;
        let l = generated(&self.infinity, &[])?;
        SimplicialPair::new(k, l).map_err(|e| CliError::Input(format!("invalid pair: {e}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub s: Vec<VertexId>,
    pub a: i64,
}

/// A chain as a list of terms, or `{"degree": d, "terms": [...]}` when the
/// degree cannot be read off the terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChainFile {
    Terms(Vec<Term>),
    WithDegree { degree: usize, terms: Vec<Term> },
}

impl ChainFile {
    pub fn from_chain(c: &Chain) -> Result<Self, CliError> {
        let terms = c
            .iter()
            .map(|(s, a)| {
                let a = a.to_i64().ok_or_else(|| CliError::Input(format!("coefficient {a} does not fit in 64 bits")))?;
                Ok(Term { s: s.vertices().to_vec(), a })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(if terms.is_empty() { ChainFile::WithDegree { degree: c.degree(), terms } } else { ChainFile::Terms(terms) })
    }

    /// Parses the terms, canonicalizing vertex order; `default_degree` is used
    /// for an empty list.
    pub fn to_chain(&self, default_degree: usize) -> Result<Chain, CliError> {
        let (terms, degree) = match self {
            ChainFile::Terms(t) => (t, t.first().map_or(default_degree, |t| t.s.len().saturating_sub(1))),
            ChainFile::WithDegree { degree, terms } => (terms, *degree),
        };
        let mut c = Chain::zero(degree);
        for t in terms {
            if t.s.len() != degree + 1 {
                return Err(CliError::Input(format!("term {:?} does not have degree {degree}", t.s)));
            }
            c.add_oriented(&t.s, BigInt::from(t.a));
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFile {
    pub k: PairFile,
    pub u: PairFile,
    pub v: PairFile,
}

/// `path` as given, or inside the fixture directory when it does not exist.
pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    let alt = fixture_dir().join(path);
    if alt.exists() {
        alt
    } else {
        path.to_path_buf()
    }
}

pub fn fixture_dir() -> PathBuf {
    std::env::var_os("BMH_FIXTURES").map_or_else(|| PathBuf::from("fixtures"), PathBuf::from)
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let path = resolve(path);
    let text = fs::read_to_string(&path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
