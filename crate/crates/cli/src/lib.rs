//! `bmh`: command-line front end over `bmh-core`.
//!
//! Every command prints a JSON report (or a short text summary) and exits
//! with 0 on pass, 1 on a mathematical failure and 2 on bad input.

pub mod certs;
pub mod fixtures;
pub mod formats;

use std::ffi::OsString;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use bmh_core::bmhomology::{
    bm_homology, default_fundamental_cycle, fundamental_cycle, mv_check, pd_check, HomologyError,
};
use bmh_core::pseudocycle::{check_bordism, nullbordism, phi_with, psi, roundtrip_with, PseudocycleError};
use bmh_core::simplicial::random::random_chain;
use bmh_core::simplicial::{Chain, SimplicialPair};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use certs::{coords, matrix, BordismCert, GroupCert, PseudomanifoldCert};
use formats::{fixture_dir, read_json, to_json, ChainFile, CoverFile, PairFile};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

/// Variant name followed by the message, e.g. `NonOrientable: ...`.
fn describe<E: std::fmt::Debug + std::fmt::Display>(e: &E) -> String {
    let debug = format!("{e:?}");
    let name: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
    format!("{name}: {e}")
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::InvalidSeed(_)
            | HomologyError::ChainNotOnComplex(_)
            | HomologyError::NotCover
            | HomologyError::NotSubcomplex
            | HomologyError::Simplicial(_) => CliError::Input(describe(&e)),
            _ => CliError::Math(describe(&e)),
        }
    }
}

impl From<PseudocycleError> for CliError {
    fn from(e: PseudocycleError) -> Self {
        match e {
            PseudocycleError::Homology(h) => h.into(),
            PseudocycleError::NotOnTarget(_)
            | PseudocycleError::DegenerateSimplex(_)
            | PseudocycleError::CoefficientTooLarge(_)
            | PseudocycleError::DegreeMismatch { .. } => CliError::Input(describe(&e)),
            _ => CliError::Math(describe(&e)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "bmh", version, about = "Integral Borel-Moore homology and combinatorial pseudocycles")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    /// Degrees to report, `a..b` (inclusive) or a single degree.
    #[arg(long, global = true, value_parser = parse_degrees)]
    pub degrees: Option<RangeInclusive<usize>>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// H_*(K, L) with representatives.
    Homology { pair: PathBuf },
    /// Coherently oriented fundamental cycle.
    Fundamental {
        pair: PathBuf,
        /// Seed top simplex as an ordered vertex list, e.g. `1,0,2`.
        #[arg(long, value_delimiter = ',')]
        simplex: Option<Vec<usize>>,
    },
    /// Glue a cycle into a pseudomanifold certificate.
    Glue { cycle: PathBuf, pair: PathBuf },
    /// Check that phi(psi(c)) has the class of c; without a cycle file, on
    /// every generator and on seeded random combinations.
    Roundtrip { pair: PathBuf, cycle: Option<PathBuf> },
    /// Compare H^q of the complement with H_{n-q}(K, L).
    Pd { pair: PathBuf },
    /// Exactness of the Mayer-Vietoris sequence of a cover file.
    Mv { cover: PathBuf },
    /// Bordism from the empty pseudocycle when the class vanishes.
    Nullbordism { cycle: PathBuf, pair: PathBuf },
    /// Write the generator fixtures (default: $BMH_FIXTURES or ./fixtures).
    Fixtures { dir: Option<PathBuf> },
}

fn parse_degrees(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected `a..b` or a single degree, got `{s}`");
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        Ok(a..=b)
    } else {
        let d: usize = s.trim().parse().map_err(|_| bad())?;
        Ok(d..=d)
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

struct Report {
    pass: bool,
    json: Value,
    text: String,
}

fn pair_from(path: &PathBuf) -> Result<SimplicialPair, CliError> {
    read_json::<PairFile>(path)?.to_pair()
}

fn chain_from(path: &PathBuf, pair: &SimplicialPair) -> Result<Chain, CliError> {
    read_json::<ChainFile>(path)?.to_chain(pair.k.dim().unwrap_or(0))
}

fn keep(degrees: &Option<RangeInclusive<usize>>, d: usize) -> bool {
    degrees.as_ref().map_or(true, |r| r.contains(&d))
}

fn group_line(groups: &[(usize, String)]) -> String {
    if groups.is_empty() {
        return "H_*=0".to_string();
    }
    groups.iter().map(|(d, g)| format!("H_{d}={g}")).collect::<Vec<_>>().join(", ")
}

fn cmd_homology(cli: &Cli, pair: &PathBuf) -> Result<Report, CliError> {
    let pair = pair_from(pair)?;
    let h = bm_homology(&pair);
    let mut degrees = Vec::new();
    let mut line = Vec::new();
    for dh in h.degrees.iter().filter(|d| keep(&cli.degrees, d.degree)) {
        let reps = dh.representatives.iter().map(ChainFile::from_chain).collect::<Result<Vec<_>, _>>()?;
        line.push((dh.degree, dh.group.to_string()));
        degrees.push(json!({ "homology": GroupCert::new(dh.degree, &dh.group), "representatives": reps }));
    }
    Ok(Report { pass: true, json: json!({ "degrees": degrees }), text: group_line(&line) })
}

fn cmd_fundamental(pair: &PathBuf, simplex: &Option<Vec<usize>>) -> Result<Report, CliError> {
    let pair = pair_from(pair)?;
    let f = match simplex {
        Some(s) => fundamental_cycle(&pair, s)?,
        None => default_fundamental_cycle(&pair)?,
    };
    let orientation: Vec<Value> = f
        .orientation
        .keys()
        .map(|s| json!({ "s": s.vertices(), "tuple": f.oriented_tuple(s) }))
        .collect();
    let boundary_at_infinity = pair.relative_reduce(&f.cycle.boundary()).is_zero();
    let text = format!(
        "fundamental cycle of dimension {} on {} top simplices; boundary at infinity: {}",
        f.cycle.degree(),
        f.cycle.len(),
        boundary_at_infinity
    );
    Ok(Report {
        pass: boundary_at_infinity,
        json: json!({
            "dimension": f.cycle.degree(),
            "cycle": ChainFile::from_chain(&f.cycle)?,
            "orientation": orientation,
            "boundary_at_infinity": boundary_at_infinity,
        }),
        text,
    })
}

fn cmd_glue(cycle: &PathBuf, pair: &PathBuf) -> Result<Report, CliError> {
    let pair = pair_from(pair)?;
    let c = chain_from(cycle, &pair)?;
    let f = psi(&c, &pair)?;
    let cert = PseudomanifoldCert::new(&f.m, &f.report);
    let text = format!(
        "glued {} top cells: cells {:?}, euler characteristic {}, {} interior and {} boundary faces; {}",
        f.m.instances.len(),
        f.m.cell_counts,
        f.m.euler_characteristic(),
        f.report.interior_faces,
        f.report.boundary_faces,
        if f.report.passed() { "pass" } else { "fail" }
    );
    Ok(Report { pass: f.report.passed(), json: serde_json::to_value(&cert).expect("serializable"), text })
}

fn cmd_roundtrip(cli: &Cli, pair: &PathBuf, cycle: &Option<PathBuf>) -> Result<Report, CliError> {
    let pair = pair_from(pair)?;
    let h = bm_homology(&pair);
    let mut cases: Vec<(String, Chain)> = Vec::new();
    match cycle {
        Some(path) => cases.push((path.display().to_string(), chain_from(path, &pair)?)),
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            for dh in h.degrees.iter().filter(|d| keep(&cli.degrees, d.degree)) {
                let d = dh.degree;
                for (i, r) in dh.representatives.iter().enumerate() {
                    cases.push((format!("H_{d} generator {i}"), r.clone()));
                }
                if !dh.representatives.is_empty() {
                    for t in 0..3 {
                        let mut z = Chain::zero(d);
                        for r in &dh.representatives {
                            z = &z + &r.scale(&BigInt::from(rng.gen_range(-3i64..=3)));
                        }
                        cases.push((format!("H_{d} random combination {t}"), z));
                    }
                }
                let x = random_chain(&mut rng, &pair.k, d + 1);
                cases.push((format!("boundary in degree {d}"), pair.relative_reduce(&x.boundary())));
            }
        }
    }
    let mut results = Vec::new();
    let mut pass = true;
    for (label, c) in &cases {
        let r = roundtrip_with(c, &pair, &h)?;
        pass &= r.agrees();
        results.push(json!({
            "case": label,
            "degree": c.degree(),
            "original": coords(&r.original),
            "recovered": coords(&r.recovered),
            "agrees": r.agrees(),
        }));
    }
    let agreeing = results.iter().filter(|r| r["agrees"] == true).count();
    let text = format!("roundtrip: {agreeing}/{} cases agree", results.len());
    Ok(Report { pass, json: json!({ "cases": results }), text })
}

fn cmd_pd(cli: &Cli, pair: &PathBuf) -> Result<Report, CliError> {
    let pair = pair_from(pair)?;
    let r = pd_check(&pair)?;
    let mut degrees = Vec::new();
    let mut lines = Vec::new();
    for d in r.degrees.iter().filter(|d| keep(&cli.degrees, d.q)) {
        degrees.push(json!({
            "q": d.q,
            "cohomology": GroupCert::new(d.q, &d.cohomology),
            "homology": GroupCert::new(r.dimension - d.q, &d.homology),
            "matches": d.matches,
            "cap_matrix": d.cap_matrix.as_ref().map(matrix),
            "cap_isomorphism": d.cap_isomorphism,
        }));
        lines.push(format!(
            "H^{}={} vs H_{}={}: {}",
            d.q,
            d.cohomology,
            r.dimension - d.q,
            d.homology,
            if d.matches && d.cap_isomorphism.unwrap_or(true) { "match" } else { "mismatch" }
        ));
    }
    Ok(Report {
        pass: r.passed(),
        json: json!({ "dimension": r.dimension, "subdivided": r.subdivided, "degrees": degrees }),
        text: lines.join("\n"),
    })
}

fn cmd_mv(cli: &Cli, cover: &PathBuf) -> Result<Report, CliError> {
    let cover: CoverFile = read_json(cover)?;
    let (k, u, v) = (cover.k.complex()?, cover.u.complex()?, cover.v.complex()?);
    let r = mv_check(&k, &u, &v, cli.degrees.clone())?;
    let nodes: Vec<Value> = r
        .nodes
        .iter()
        .map(|n| json!({ "node": n.label(), "degree": n.degree, "group": n.group.to_string(), "exact": n.exact }))
        .collect();
    let connecting: Vec<Value> =
        r.connecting.iter().map(|(d, m)| json!({ "degree": d, "matrix": matrix(m) })).collect();
    let text = r
        .nodes
        .iter()
        .map(|n| format!("{} = {}: {}", n.label(), n.group, if n.exact { "exact" } else { "NOT exact" }))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report { pass: r.is_exact(), json: json!({ "nodes": nodes, "connecting": connecting }), text })
}

fn cmd_nullbordism(cycle: &PathBuf, pair: &PathBuf) -> Result<Report, CliError> {
    let pair = pair_from(pair)?;
    let c = chain_from(cycle, &pair)?;
    let f = psi(&c, &pair)?;
    let class = phi_with(&f, &bm_homology(&pair))?;
    match nullbordism(&f)? {
        None => Ok(Report {
            pass: false,
            json: json!({ "result": "nonzero class", "class": coords(&class), "bordism": null }),
            text: format!("nonzero class {:?}", class.to_vec().iter().map(ToString::to_string).collect::<Vec<_>>()),
        }),
        Some(b) => {
            let report = check_bordism(&b);
            let cert = BordismCert::new(&b, &report);
            let text = format!(
                "bordism with {} top cells, {} boundary cells; check {}",
                b.w.instances.len(),
                b.boundary1.len() + b.boundary0.len(),
                if report.passed() { "pass" } else { "fail" }
            );
            Ok(Report {
                pass: report.passed(),
                json: json!({ "result": "bordism", "class": coords(&class), "bordism": cert }),
                text,
            })
        }
    }
}

fn cmd_fixtures(dir: &Option<PathBuf>) -> Result<Report, CliError> {
    let dir = dir.clone().unwrap_or_else(fixture_dir);
    let files = fixtures::write_fixtures(&dir)?;
    let text = format!("wrote {} files to {}", files.len(), dir.display());
    Ok(Report { pass: true, json: json!({ "dir": dir.display().to_string(), "files": files }), text })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Homology { .. } => "homology",
        Command::Fundamental { .. } => "fundamental",
        Command::Glue { .. } => "glue",
        Command::Roundtrip { .. } => "roundtrip",
        Command::Pd { .. } => "pd",
        Command::Mv { .. } => "mv",
        Command::Nullbordism { .. } => "nullbordism",
        Command::Fixtures { .. } => "fixtures",
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Homology { pair } => cmd_homology(cli, pair),
        Command::Fundamental { pair, simplex } => cmd_fundamental(pair, simplex),
        Command::Glue { cycle, pair } => cmd_glue(cycle, pair),
        Command::Roundtrip { pair, cycle } => cmd_roundtrip(cli, pair, cycle),
        Command::Pd { pair } => cmd_pd(cli, pair),
        Command::Mv { cover } => cmd_mv(cli, cover),
        Command::Nullbordism { cycle, pair } => cmd_nullbordism(cycle, pair),
        Command::Fixtures { dir } => cmd_fixtures(dir),
    };
    let name = command_name(&cli.command);
    let (code, json, text) = match result {
        Ok(r) => {
            let status = if r.pass { "pass" } else { "fail" };
            (i32::from(!r.pass), json!({ "command": name, "status": status, "report": r.json }), r.text)
        }
        Err(e) => {
            let status = if e.exit_code() == 2 { "error" } else { "fail" };
            (e.exit_code(), json!({ "command": name, "status": status, "error": e.to_string() }), format!("{status}: {e}"))
        }
    };
    let output = match cli.format {
        Format::Json => to_json(&json),
        Format::Text => format!("{text}\n"),
    };
    Outcome { code, output }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            Outcome { code, output: e.to_string() }
        }
    }
}
