//! Serializable certificates and reports.

use bmh_core::intlinalg::{AbelianGroup, ClassCoords, IntMatrix};
use bmh_core::pseudocycle::{Bordism, BordismReport, BoundaryMatch, FaceRef, PseudoManifold, PseudoManifoldReport};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
pub fn int(b: &BigInt) -> Value {
    b.to_i64().map_or_else(|| Value::String(b.to_string()), Value::from)
}

pub fn ints(v: &[BigInt]) -> Vec<Value> {
    v.iter().map(int).collect()
}

pub fn coords(c: &ClassCoords) -> Vec<Value> {
    ints(&c.to_vec())
}

pub fn matrix(m: &IntMatrix) -> Vec<Vec<Value>> {
    (0..m.rows()).map(|i| ints(&m.row(i))).collect()
}

fn face(f: &FaceRef) -> [usize; 2] {
    [f.instance, f.face]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupCert {
    pub degree: usize,
    pub rank: usize,
    pub torsion: Vec<Value>,
    pub group: String,
}

impl GroupCert {
    pub fn new(degree: usize, g: &AbelianGroup) -> Self {
        GroupCert { degree, rank: g.rank, torsion: ints(&g.torsion), group: g.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceCert {
    pub id: usize,
    pub map: Vec<usize>,
    pub orientation: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCert {
    pub a: [usize; 2],
    pub b: [usize; 2],
    pub perm: Vec<usize>,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCert {
    pub passed: bool,
    pub interior_faces: usize,
    pub boundary_faces: usize,
    pub codim2_cells: usize,
    pub failures: Vec<String>,
}

impl From<&PseudoManifoldReport> for CheckCert {
    fn from(r: &PseudoManifoldReport) -> Self {
        CheckCert {
            passed: r.passed(),
            interior_faces: r.interior_faces,
            boundary_faces: r.boundary_faces,
            codim2_cells: r.codim2_cells,
            failures: r.failures.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudomanifoldCert {
    pub dimension: usize,
    pub instances: Vec<InstanceCert>,
    pub pairs: Vec<PairCert>,
    pub at_infinity: Vec<[usize; 2]>,
    pub free: Vec<[usize; 2]>,
    pub cell_counts: Vec<usize>,
    pub euler_characteristic: i64,
    pub check: CheckCert,
}

impl PseudomanifoldCert {
    pub fn new(m: &PseudoManifold, report: &PseudoManifoldReport) -> Self {
        PseudomanifoldCert {
            dimension: m.dimension,
            instances: m
                .instances
                .iter()
                .map(|i| InstanceCert { id: i.id, map: i.map.clone(), orientation: i.orientation.to_i64() })
                .collect(),
            pairs: m
                .gluing
                .pairs
                .iter()
                .map(|p| PairCert { a: face(&p.a), b: face(&p.b), perm: p.perm.clone(), sign: p.sign().to_i64() })
                .collect(),
            at_infinity: m.gluing.at_infinity.iter().map(face).collect(),
            free: m.gluing.free.iter().map(face).collect(),
            cell_counts: m.cell_counts.clone(),
            euler_characteristic: m.euler_characteristic(),
            check: report.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchCert {
    pub instance: usize,
    pub face: [usize; 2],
    pub perm: Vec<usize>,
    pub sign: i64,
}

impl From<&BoundaryMatch> for MatchCert {
    fn from(b: &BoundaryMatch) -> Self {
        MatchCert { instance: b.instance, face: face(&b.face), perm: b.perm.clone(), sign: b.sign.to_i64() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BordismCheckCert {
    pub passed: bool,
    pub interior_faces: usize,
    pub boundary0_cells: usize,
    pub boundary1_cells: usize,
    pub at_infinity: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BordismCert {
    pub dimension: usize,
    pub w: PseudomanifoldCert,
    pub m0: PseudomanifoldCert,
    pub m1: PseudomanifoldCert,
    pub boundary0: Vec<MatchCert>,
    pub boundary1: Vec<MatchCert>,
    pub check: BordismCheckCert,
}

impl BordismCert {
    pub fn new(b: &Bordism, r: &BordismReport) -> Self {
        let w_report = bmh_core::pseudocycle::check_pseudomanifold(&b.w);
        BordismCert {
            dimension: b.m1.dimension(),
            w: PseudomanifoldCert::new(&b.w, &w_report),
            m0: PseudomanifoldCert::new(&b.m0.m, &b.m0.report),
            m1: PseudomanifoldCert::new(&b.m1.m, &b.m1.report),
            boundary0: b.boundary0.iter().map(MatchCert::from).collect(),
            boundary1: b.boundary1.iter().map(MatchCert::from).collect(),
            check: BordismCheckCert {
                passed: r.passed(),
                interior_faces: r.interior_faces,
                boundary0_cells: r.boundary0_cells,
                boundary1_cells: r.boundary1_cells,
                at_infinity: r.at_infinity,
                failures: r.failures.clone(),
            },
        }
    }
}
