//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::ExitCode;

use bmh::fixtures::{command_matrix, write_fixtures};
use bmh_core::bmhomology::{
    bm_homology, cap_product, default_fundamental_cycle, homology, local_restriction, mv_check, pd_check,
    star_neighborhood_vanishing, HomologyError,
};
use bmh_core::intlinalg::AbelianGroup;
use bmh_core::pseudocycle::{
    all_faces, check_bordism, expand_to_unit, nullbordism, pair_faces, phi, psi, roundtrip_check, FacePairing,
    SimplexInstance,
};
use bmh_core::simplicial::generators::*;
use bmh_core::simplicial::random::{random_chain, random_cochain, random_complex};
use bmh_core::simplicial::{barycentric_subdivision, homotopy_defect, Chain, Complex, Cochain, Sign, Simplex, SimplicialPair};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s(v: &[usize]) -> Simplex {
    Simplex::new(v.to_vec()).unwrap()
}

fn fixture_complexes() -> Vec<(&'static str, Complex)> {
    vec![
        ("simplex3", simplex(3)),
        ("sphere2", sphere(2)),
        ("sphere3", sphere(3)),
        ("torus", torus()),
        ("mobius", mobius_pair().k),
        ("cylinder", cylinder()),
    ]
}

fn chain_complex_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..100 {
        let k = random_complex(&mut rng, 8, 4);
        let d = trial % (k.dim().unwrap() + 1);
        let c = random_chain(&mut rng, &k, d);
        let b = c.boundary();
        ensure(b.boundary().is_zero(), || format!("∂∂ ≠ 0 on trial {trial}"))?;
        ensure(b.simplices().all(|f| c.simplices().any(|t| f.is_face_of(t))), || {
            format!("support of ∂c escapes c on trial {trial}")
        })?;
        let a = random_cochain(&mut rng, &k, d);
        ensure(a.coboundary(&k).coboundary(&k).is_zero(), || format!("δδ ≠ 0 on trial {trial}"))?;
    }
    Ok(())
}

fn subdivision_homotopy() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let delta = simplex(3);
    let sd = barycentric_subdivision(&delta);
    for trial in 0..100 {
        let c = random_chain(&mut rng, &delta, trial % 4);
        let defect = homotopy_defect(&sd, &c).map_err(|e| e.to_string())?;
        ensure(defect.is_zero(), || format!("homotopy identity fails on trial {trial}: {defect}"))?;
        let chain_map = sd.sd_chain(&c.boundary()).unwrap() == sd.sd_chain(&c).unwrap().boundary();
        ensure(chain_map, || format!("sd is not a chain map on trial {trial}"))?;
    }
    for (name, k) in fixture_complexes() {
        let sd = barycentric_subdivision(&k);
        for d in 0..=k.dim().unwrap() {
            let c = random_chain(&mut rng, &k, d);
            ensure(homotopy_defect(&sd, &c).unwrap().is_zero(), || format!("{name}: identity fails in degree {d}"))?;
            ensure(sd.sd_chain(&c.boundary()).unwrap() == sd.sd_chain(&c).unwrap().boundary(), || {
                format!("{name}: sd is not a chain map in degree {d}")
            })?;
        }
    }
    Ok(())
}

fn cap_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, k) in fixture_complexes() {
        let n = k.dim().unwrap();
        for trial in 0..100 {
            let q = trial % (n + 1);
            let a = random_cochain(&mut rng, &k, q);
            let m = random_chain(&mut rng, &k, n);
            let p = n - q;
            let sign = BigInt::from(if p % 2 == 0 { 1 } else { -1 });
            let rhs = &cap_product(&a.coboundary(&k), &m).scale(&sign) + &cap_product(&a, &m.boundary());
            ensure(cap_product(&a, &m).boundary() == rhs, || format!("{name}: boundary formula fails, trial {trial}"))?;
        }
        let one = Cochain::constant(&k, 0, 1);
        for d in 0..=n {
            let c = random_chain(&mut rng, &k, d);
            ensure(cap_product(&one, &c) == c, || format!("{name}: unit cap is not the identity in degree {d}"))?;
        }
    }
    Ok(())
}

fn borel_moore_fixtures() -> Outcome {
    let z = AbelianGroup::free;
    let zero = AbelianGroup::trivial;
    for n in 1..=4 {
        let got = bm_homology(&simplex_pair(n)).groups();
        let want: Vec<AbelianGroup> = (0..=n).map(|d| if d == n { z(1) } else { zero() }).collect();
        ensure(got == want, || format!("simplex_pair({n}): {got:?}"))?;
    }
    let cyl = bm_homology(&cylinder_pair()).groups();
    ensure(cyl == vec![zero(), z(1), z(1)], || format!("cylinder_pair: {cyl:?}"))?;
    let mob = bm_homology(&mobius_pair()).groups();
    let z2 = AbelianGroup::new(0, vec![BigInt::from(2)]).unwrap();
    ensure(mob.get(1) == Some(&z2) && mob.get(2) == Some(&zero()), || format!("mobius_pair: {mob:?}"))
}

fn fundamental_class() -> Outcome {
    for (name, pair) in [("torus", SimplicialPair::closed(torus())), ("sphere2", SimplicialPair::closed(sphere(2)))] {
        let f = default_fundamental_cycle(&pair).map_err(|e| format!("{name}: {e}"))?;
        ensure(pair.relative_reduce(&f.cycle.boundary()).is_zero(), || format!("{name}: ∂μ not in L"))?;
        for t in pair.relative_simplices(2) {
            let v = local_restriction(&f.cycle, &t, &pair).map_err(|e| e.to_string())?;
            ensure(v.abs().is_one(), || format!("{name}: local restriction {v} at {t}"))?;
        }
    }
    match default_fundamental_cycle(&mobius_pair()) {
        Err(HomologyError::NonOrientable { .. }) => Ok(()),
        other => Err(format!("mobius: expected NonOrientable, got {other:?}")),
    }
}

fn fixture_cycles() -> Vec<(&'static str, SimplicialPair, Chain)> {
    let circle = Chain::from_simplex(s(&[0, 1, 2]), 1).boundary();
    let mu = |p: &SimplicialPair| default_fundamental_cycle(p).unwrap().cycle;
    let torus_pair = SimplicialPair::closed(torus());
    let sphere_pair = SimplicialPair::closed(sphere(2));
    let h1 = &homology(&torus()).degrees[1].representatives;
    let combo = &h1[0].scale(&BigInt::from(2)) + &h1[1].scale(&BigInt::from(3));
    vec![
        ("triangle circle", SimplicialPair::closed(sphere(1)), circle),
        ("torus μ", torus_pair.clone(), mu(&torus_pair)),
        ("sphere(2) μ", sphere_pair.clone(), mu(&sphere_pair)),
        ("cylinder μ rel L", cylinder_pair(), mu(&cylinder_pair())),
        ("torus 2a+3b", torus_pair, combo),
        ("open triangle", simplex_pair(2), mu(&simplex_pair(2))),
    ]
}

fn pairing_laws(inst: &[SimplexInstance], pairing: &FacePairing, pair: &SimplicialPair) -> Outcome {
    let mut first = std::collections::BTreeMap::new();
    for p in &pairing.pairs {
        ensure(p.a != p.b, || format!("diagonal pair {:?}", p.a))?;
        *first.entry(p.a).or_insert(0) += 1;
        let back = pairing.pairs.iter().find(|q| q.a == p.b && q.b == p.a);
        let back = back.ok_or_else(|| format!("pair {:?}-{:?} is not symmetric", p.a, p.b))?;
        ensure((0..p.perm.len()).all(|j| back.perm[p.perm[j]] == j), || "reverse permutation is not inverse".into())?;
        let (ia, ib) = (&inst[p.a.instance], &inst[p.b.instance]);
        let (fa, fb) = (ia.face_tuple(p.a.face), ib.face_tuple(p.b.face));
        ensure((0..fb.len()).all(|j| fb[j] == fa[p.perm[j]]), || format!("faces {:?} {:?} disagree", p.a, p.b))?;
        let want = -Sign::parity(p.a.face + p.b.face) * ia.orientation * ib.orientation;
        ensure(p.sign() == want, || format!("sign of τ at {:?}-{:?}", p.a, p.b))?;
    }
    for f in &pairing.at_infinity {
        ensure(pair.l.contains(&inst[f.instance].face_orientation(f.face).0), || format!("{f:?} is not in L"))?;
    }
    for f in all_faces(inst) {
        let n = first.get(&f).copied().unwrap_or(0) + usize::from(pairing.at_infinity.contains(&f));
        ensure(n == 1, || format!("face {f:?} is covered {n} times"))?;
    }
    ensure(pairing.free.is_empty(), || "free faces on a cycle".into())
}

fn face_pairing() -> Outcome {
    for (name, pair, c) in fixture_cycles() {
        let inst = expand_to_unit(&c).map_err(|e| e.to_string())?;
        let pairing = pair_faces(&inst, &pair).map_err(|e| format!("{name}: {e}"))?;
        pairing_laws(&inst, &pairing, &pair).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

fn round_trip() -> Outcome {
    let cases = fixture_cycles();
    ensure(cases.len() >= 5, || "too few cycles".into())?;
    for (name, pair, c) in cases {
        ensure(roundtrip_check(&c, &pair).map_err(|e| format!("{name}: {e}"))?, || format!("{name}: classes differ"))?;
    }
    Ok(())
}

fn nullbordism_iff_zero() -> Outcome {
    let circle = Chain::from_simplex(s(&[0, 1, 2]), 1).boundary();
    let disk = SimplicialPair::closed(simplex(2));
    let ring = SimplicialPair::closed(sphere(1));
    let mut produced = 0;
    let mut cases: Vec<(SimplicialPair, Chain)> = vec![(disk, circle.clone()), (ring, circle)];
    for (_, pair, c) in fixture_cycles() {
        cases.push((pair, c));
    }
    let prism_mu = default_fundamental_cycle(&cylinder_pair()).unwrap().cycle;
    cases.push((SimplicialPair::closed(cylinder()), prism_mu.boundary()));
    for (i, (pair, c)) in cases.iter().enumerate() {
        let f = psi(c, pair).map_err(|e| e.to_string())?;
        let zero = phi(&f).map_err(|e| e.to_string())?.is_zero();
        let b = nullbordism(&f).map_err(|e| e.to_string())?;
        ensure(b.is_some() == zero, || format!("case {i}: bordism {} but class zero {zero}", b.is_some()))?;
        if let Some(b) = b {
            let r = check_bordism(&b);
            ensure(r.passed(), || format!("case {i}: {:?}", r.failures))?;
            produced += 1;
        }
    }
    ensure(produced >= 2, || format!("only {produced} bordisms produced"))?;
    let mut b = nullbordism(&psi(&cases[0].1, &cases[0].0).unwrap()).unwrap().unwrap();
    b.boundary1[0].sign = -b.boundary1[0].sign;
    ensure(!check_bordism(&b).passed(), || "corrupted sign was not caught".into())
}

fn poincare_duality() -> Outcome {
    for (name, pair) in [
        ("torus", SimplicialPair::closed(torus())),
        ("sphere2", SimplicialPair::closed(sphere(2))),
        ("simplex_pair(2)", simplex_pair(2)),
    ] {
        let r = pd_check(&pair).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.passed(), || format!("{name}: {:?}", r.degrees))?;
        if pair.l.is_empty() {
            ensure(r.degrees.iter().all(|d| d.cap_isomorphism == Some(true)), || format!("{name}: cap map"))?;
        } else {
            ensure(r.subdivided, || format!("{name}: expected a subdivision"))?;
        }
    }
    Ok(())
}

fn mayer_vietoris() -> Outcome {
    let u = Complex::from_maximal(&[vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
    let v = Complex::from_maximal(&[vec![0, 2, 3], vec![1, 2, 3]]).unwrap();
    let r = mv_check(&sphere(2), &u, &v, None).map_err(|e| e.to_string())?;
    ensure(r.is_exact(), || "sphere(2) hemispheres: not exact".into())?;
    let r = mv_check(&torus_grid(4, 3), &torus_grid_band(4, 3, 0, 1), &torus_grid_band(4, 3, 2, 3), None)
        .map_err(|e| e.to_string())?;
    ensure(r.is_exact(), || "torus annuli: not exact".into())
}

fn star_vanishing() -> Outcome {
    let facet = Complex::from_maximal(&[vec![0, 1, 2]]).unwrap();
    let r = star_neighborhood_vanishing(&simplex(3), &facet, 2).map_err(|e| e.to_string())?;
    ensure(r.vanishes, || format!("Δ³ facet: {:?}", r.groups))?;
    let vertex = Complex::from_maximal(&[vec![0]]).unwrap();
    let r = star_neighborhood_vanishing(&torus(), &vertex, 0).map_err(|e| e.to_string())?;
    ensure(r.vanishes, || format!("torus vertex: {:?}", r.groups))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let fixtures_a = write_fixtures(dir.path()).map_err(|e| e.to_string())?;
    let bytes_a: Vec<Vec<u8>> = fixtures_a.iter().map(|f| std::fs::read(dir.path().join(f)).unwrap()).collect();
    let fixtures_b = write_fixtures(dir.path()).map_err(|e| e.to_string())?;
    let bytes_b: Vec<Vec<u8>> = fixtures_b.iter().map(|f| std::fs::read(dir.path().join(f)).unwrap()).collect();
    ensure(fixtures_a.len() >= 10 && bytes_a == bytes_b, || "fixture files differ between runs".into())?;
    for (args, code) in command_matrix(dir.path()) {
        let mut args = args.clone();
        args.extend(["--seed".to_string(), "7".to_string()]);
        let first = bmh::run(&args);
        let second = bmh::run(&args);
        ensure(first == second, || format!("{args:?}: output differs between runs"))?;
        ensure(first.code == code, || format!("{args:?}: exit {} instead of {code}", first.code))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("chain-complex laws", chain_complex_laws),
        ("subdivision homotopy", subdivision_homotopy),
        ("cap identity", cap_identity),
        ("Borel-Moore fixtures", borel_moore_fixtures),
        ("fundamental class", fundamental_class),
        ("face pairing", face_pairing),
        ("round trip", round_trip),
        ("nullbordism iff zero class", nullbordism_iff_zero),
        ("Poincare duality", poincare_duality),
        ("Mayer-Vietoris", mayer_vietoris),
        ("star-neighborhood vanishing", star_vanishing),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
