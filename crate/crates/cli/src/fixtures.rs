//! Generator fixtures written by `bmh fixtures`, and the command matrix run
//! over them.

use std::fs;
use std::path::Path;

use bmh_core::bmhomology::default_fundamental_cycle;
use bmh_core::simplicial::generators::*;
use bmh_core::simplicial::{Chain, Complex, Simplex, SimplicialPair};

use crate::formats::{to_json, ChainFile, CoverFile, PairFile};
use crate::CliError;

/// Pair fixtures by file name.
pub fn pair_fixtures() -> Vec<(String, SimplicialPair)> {
    let mut out: Vec<(String, SimplicialPair)> = (1..=4).map(|n| (format!("simplex{n}.json"), simplex_pair(n))).collect();
    for n in 1..=3 {
        out.push((format!("sphere{n}.json"), SimplicialPair::closed(sphere(n))));
    }
    out.push(("torus.json".into(), SimplicialPair::closed(torus())));
    out.push(("mobius.json".into(), mobius_pair()));
    out.push(("cylinder.json".into(), cylinder_pair()));
    out.push(("prism.json".into(), SimplicialPair::closed(cylinder())));
    out.push(("disk.json".into(), SimplicialPair::closed(simplex(2))));
    out
}

fn mu(pair: &SimplicialPair) -> Chain {
    default_fundamental_cycle(pair).expect("fixture is orientable").cycle
}

/// Cycle fixtures by file name, with the pair file they live on.
pub fn cycle_fixtures() -> Vec<(String, String, Chain)> {
    let circle = Chain::from_simplex(Simplex::new(vec![0, 1, 2]).expect("valid"), 1).boundary();
    let prism_mu = mu(&cylinder_pair());
    vec![
        ("triangle_circle.cycle.json".into(), "sphere1.json".into(), circle.clone()),
        ("torus_mu.cycle.json".into(), "torus.json".into(), mu(&SimplicialPair::closed(torus()))),
        ("sphere2_mu.cycle.json".into(), "sphere2.json".into(), mu(&SimplicialPair::closed(sphere(2)))),
        ("cylinder_mu.cycle.json".into(), "cylinder.json".into(), prism_mu.clone()),
        ("prism_circles.cycle.json".into(), "prism.json".into(), prism_mu.boundary()),
        ("prism_mu.chain.json".into(), "prism.json".into(), prism_mu),
    ]
}

pub fn cover_fixtures() -> Vec<(String, CoverFile)> {
    let hemi = |v: &[Vec<usize>]| Complex::from_maximal(v).expect("valid");
    let sphere_cover = CoverFile {
        k: PairFile::from_complex(&sphere(2)),
        u: PairFile::from_complex(&hemi(&[vec![0, 1, 2], vec![0, 1, 3]])),
        v: PairFile::from_complex(&hemi(&[vec![0, 2, 3], vec![1, 2, 3]])),
    };
    let torus_cover = CoverFile {
        k: PairFile::from_complex(&torus_grid(4, 3)),
        u: PairFile::from_complex(&torus_grid_band(4, 3, 0, 1)),
        v: PairFile::from_complex(&torus_grid_band(4, 3, 2, 3)),
    };
    vec![("sphere2_hemispheres.cover.json".into(), sphere_cover), ("torus_annuli.cover.json".into(), torus_cover)]
}

/// Writes every fixture into `dir` and returns the file names in order.
pub fn write_fixtures(dir: &Path) -> Result<Vec<String>, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut files = Vec::new();
    let mut write = |name: &str, body: String| -> Result<(), CliError> {
        fs::write(dir.join(name), body).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
        files.push(name.to_string());
        Ok(())
    };
    for (name, pair) in pair_fixtures() {
        write(&name, to_json(&PairFile::from_pair(&pair)))?;
    }
    for (name, _, c) in cycle_fixtures() {
        write(&name, to_json(&ChainFile::from_chain(&c)?))?;
    }
    for (name, cover) in cover_fixtures() {
        write(&name, to_json(&cover))?;
    }
    Ok(files)
}

/// Every command over the fixtures in `dir`, with the expected exit code.
pub fn command_matrix(dir: &Path) -> Vec<(Vec<String>, i32)> {
    let p = |name: &str| dir.join(name).display().to_string();
    let cmd = |parts: &[&str]| parts.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let mut out = Vec::new();
    for (name, pair) in pair_fixtures() {
        out.push((cmd(&["bmh", "homology", &p(&name)]), 0));
        let orientable = default_fundamental_cycle(&pair).is_ok();
        let code = if orientable { 0 } else { 1 };
        out.push((cmd(&["bmh", "fundamental", &p(&name)]), code));
        out.push((cmd(&["bmh", "pd", &p(&name)]), code));
        out.push((cmd(&["bmh", "roundtrip", &p(&name)]), 0));
    }
    for (name, pair_name, _) in cycle_fixtures() {
        let is_cycle = !name.ends_with(".chain.json");
        out.push((cmd(&["bmh", "glue", &p(&name), &p(&pair_name)]), if is_cycle { 0 } else { 1 }));
        if is_cycle {
            out.push((cmd(&["bmh", "roundtrip", &p(&pair_name), &p(&name)]), 0));
        }
    }
    // the circle bounds in the disk and in the prism, not on its own
    out.push((cmd(&["bmh", "nullbordism", &p("triangle_circle.cycle.json"), &p("disk.json")]), 0));
    out.push((cmd(&["bmh", "nullbordism", &p("triangle_circle.cycle.json"), &p("sphere1.json")]), 1));
    out.push((cmd(&["bmh", "nullbordism", &p("prism_circles.cycle.json"), &p("prism.json")]), 0));
    out.push((cmd(&["bmh", "nullbordism", &p("torus_mu.cycle.json"), &p("torus.json")]), 1));
    for (name, _) in cover_fixtures() {
        out.push((cmd(&["bmh", "mv", &p(&name)]), 0));
    }
    out.push((cmd(&["bmh", "homology", &p("missing.json")]), 2));
    out
}
