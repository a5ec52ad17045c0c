//! One line per acceptance criterion. A criterion whose published data
//! contains a verified misprint prints FAIL together with the analysis;
//! the target itself only fails when a discrepancy is not the expected one.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;
use tmcv::commands::{exit_code, validate};
use tmcv::Format;
use tmcv_core::alcove::{box_alcoves, distance, is_p_regular, w_nu_dot, SpecialPoint};
use tmcv_core::babyverma::{recover_q, rederive_simples, simples_for, validate_table, LaurentPoly};
use tmcv_core::bundle::{build_manifest, default_data_dir, pretty_json, DatasetBundle, MANIFEST};
use tmcv_core::cohomology::CohomologyValue;
use tmcv_core::decomposition::{decompose, decompose_weyl, simple_character};
use tmcv_core::verifier::*;
use tmcv_core::weyl::{jantzen_sum_weyl, weyl_character, weyl_character_alternating};
use tmcv_core::{wt, Character, CharacterOf, Kind, RootSystem, Weight};

enum Verdict {
    Pass(String),
    /// The published value is wrong in exactly the way recorded.
    KnownGap(String),
}

use Verdict::*;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Result<Verdict, String> + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn bundle() -> DatasetBundle {
    DatasetBundle::load(&default_data_dir()).expect("bundled data loads")
}

fn ac1(b: &DatasetBundle) -> Result<Verdict, String> {
    let g2 = RootSystem::get(Kind::G2);
    let start = Instant::now();
    let tables = b.radical_tables();
    let simples = simples_for(g2, &tables, b.decomposition(Kind::G2, 7).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    for t in &tables {
        validate_table(g2, t, &simples).map_err(|e| format!("alcove {}: {e}", t.alcove))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(tables.len() == 12, format!("{} tables", tables.len()))?;
    ensure(secs < 10.0, format!("took {secs:.1} s"))?;
    Ok(Pass(format!("12 tables recompose ch Ẑ' exactly in {secs:.2} s")))
}

fn ac2(b: &DatasetBundle) -> Result<Verdict, String> {
    let g2 = RootSystem::get(Kind::G2);
    let q = LaurentPoly::from_terms;
    // (C, λ, w·λ, σ0, Q, d, [(j, mult)])
    let rows = [
        (1, wt![0, 0], wt![-2, -2], wt![5, 5], q(&[(0, 1)]), 0, vec![(0, 1)]),
        (2, wt![2, 0], wt![-4, -2], wt![3, 5], q(&[(0, 1)]), 1, vec![(1, 1)]),
        (3, wt![1, 1], wt![-3, -3], wt![4, 4], q(&[(0, 1)]), 2, vec![(2, 1)]),
        (4, wt![1, 2], wt![-3, -4], wt![4, 3], q(&[(0, 1)]), 3, vec![(3, 1)]),
        (5, wt![2, 2], wt![-4, -4], wt![3, 3], q(&[(1, 1)]), 4, vec![(2, 1)]),
        (6, wt![0, 4], wt![-2, -6], wt![5, 1], q(&[(1, 1)]), 5, vec![(3, 1)]),
        (7, wt![5, 1], wt![-7, -3], wt![0, 4], q(&[(2, 1)]), 5, vec![(1, 1)]),
        (8, wt![3, 3], wt![-5, -5], wt![2, 2], q(&[(1, 1), (2, 1)]), 6, vec![(2, 1), (4, 1)]),
        (11, wt![4, 3], wt![-6, -5], wt![1, 2], q(&[(2, 2), (3, 1)]), 7, vec![(1, 1), (3, 2)]),
        (13, wt![4, 4], wt![-6, -6], wt![1, 1], q(&[(3, 3)]), 8, vec![(2, 3)]),
        (15, wt![3, 5], wt![-5, -7], wt![2, 0], q(&[(4, 3)]), 9, vec![(1, 3)]),
        (16, wt![5, 5], wt![-7, -7], wt![0, 0], q(&[(3, 1), (4, 3)]), 10, vec![(2, 3), (4, 1)]),
    ];
    let t = b.radical_tables().into_iter().find(|t| t.alcove == 1).ok_or("no alcove 1 table")?;
    let nu = SpecialPoint::new(g2, 7, -g2.rho()).map_err(|e| e.to_string())?;
    for (label, lambda, w, sigma0, poly, d, layers) in rows {
        let c = b.labels.alcove_from_label(g2, 7, label).map_err(|e| e.to_string())?;
        let r = recover_q(g2, &t, nu, &c).map_err(|e| e.to_string())?;
        let got = (r.lambda, w_nu_dot(nu, r.lambda), r.sigma0, r.q.clone(), r.d, r.layers.into_iter().collect::<Vec<_>>());
        ensure(got == (lambda, w, sigma0, poly, d, layers), format!("row {label}: got {got:?}"))?;
    }
    Ok(Pass("12 rows: λ, w·λ, σ0, Q, d and layers match".into()))
}

fn ac3() -> Result<Verdict, String> {
    let a3 = RootSystem::get(Kind::A3);
    // (γ, α_i, μ, σ1, s_i·σ1, (p−1)ρ + μ), σ0 = 0 throughout
    let published: BTreeSet<_> = [
        ([-6, 2, 2], 0, [0, 1, 1], [-2, 1, 1], [0, 0, 1], [2, 3, 3]),
        ([2, 2, -6], 2, [1, 1, 0], [1, 1, -2], [1, 0, 0], [3, 3, 2]),
        ([4, -6, 4], 1, [2, 0, 2], [2, -2, 2], [1, 0, 1], [4, 2, 4]),
        ([-6, 4, -2], 0, [0, 2, 2], [-2, 2, 0], [0, 1, 0], [2, 4, 4]),
        ([-2, 4, -6], 2, [2, 2, 0], [0, 2, -2], [0, 1, 0], [4, 4, 2]),
        ([2, -6, 2], 1, [1, 0, 1], [1, -2, 1], [0, 0, 0], [3, 2, 3]),
        ([0, 3, -6], 2, [0, 0, 0], [0, 1, -2], [0, 0, 0], [2, 2, 2]),
        ([-6, 3, 0], 0, [0, 0, 0], [-2, 1, 0], [0, 0, 0], [2, 2, 2]),
        ([3, -6, 3], 1, [0, 0, 0], [1, -2, 1], [0, 0, 0], [2, 2, 2]),
    ]
    .iter()
    .map(|(g, i, m, s, r, t)| (Weight::new(g), *i, Weight::new(m), Weight::new(s), Weight::new(r), Weight::new(t)))
    .collect();
    let scan = steinberg_weight_scan(a3, 3);
    ensure(scan.iter().all(|v| v.sigma0.is_zero()), "σ0 ≠ 0 in the A3 scan")?;
    let got: BTreeSet<_> = scan.iter().map(|v| (v.gamma, v.simple, v.mu, v.sigma1, v.reflected, v.target)).collect();
    ensure(scan.len() == 9 && got == published, format!("A3 p=3 scan differs: {got:?}"))?;
    for (kind, p) in [(Kind::A2, 2), (Kind::A2, 3), (Kind::A3, 2), (Kind::B2, 2)] {
        let n = steinberg_weight_scan(RootSystem::get(kind), p).len();
        ensure(n == 0, format!("{kind} p={p}: {n} rows"))?;
    }
    let b2 = RootSystem::get(Kind::B2);
    let published_b2: BTreeSet<(Weight, Weight)> =
        [(wt![4, -12], wt![1, 2]), (wt![3, -12], wt![2, 2]), (wt![8, -12], wt![2, 2])].into_iter().collect();
    let got_b2: BTreeSet<(Weight, Weight)> = steinberg_weight_scan(b2, 5).iter().map(|v| (v.gamma, v.mu)).collect();
    if got_b2 == published_b2 {
        return Ok(Pass("A3 p=3 nine rows, four empty scans, B2 p=5 three pairs".into()));
    }
    let missing: Vec<_> = published_b2.difference(&got_b2).copied().collect();
    let extra: Vec<_> = got_b2.difference(&published_b2).copied().collect();
    let bad = wt![3, -12];
    let explained = extra.is_empty()
        && missing == vec![(bad, wt![2, 2])]
        && !steinberg_support(b2, 5).contains(&bad)
        && !b2.dominance_leq(b2.dominant_conjugate(bad), 4 * b2.rho());
    if explained {
        Ok(KnownGap(format!(
            "A3 p=3 nine rows and four empty scans match; B2 p=5 gives {} of the 3 published pairs. \
             The missing pair has γ = (3,−12), which is not a weight of St_1 = L(4,4) \
             (dominant conjugate {} is not ≤ (4,4)), so it cannot be produced",
            got_b2.len(),
            b2.dominant_conjugate(bad)
        )))
    } else {
        Err(format!("B2 p=5: missing {missing:?}, extra {extra:?}"))
    }
}

fn ac4(b: &DatasetBundle) -> Result<Verdict, String> {
    let a3 = RootSystem::get(Kind::A3);
    let t = b.decomposition(Kind::A3, 3).map_err(|e| e.to_string())?;
    let ch: Character = weyl_character(a3, wt![2, 3, 3]).map_err(|e| e.to_string())?;
    let got: BTreeSet<(Weight, i64)> = decompose(a3, &ch, t)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(w, m)| (w, i64::try_from(m).unwrap()))
        .collect();
    let twice = [wt![0, 3, 1], wt![5, 0, 0], wt![1, 0, 0]];
    let expected: BTreeSet<(Weight, i64)> = [
        wt![2, 3, 3], wt![3, 1, 4], wt![2, 4, 1], wt![1, 2, 4], wt![4, 0, 3], wt![3, 3, 0], wt![1, 4, 0], wt![4, 1, 1],
        wt![0, 2, 3], wt![0, 3, 1], wt![3, 0, 2], wt![5, 0, 0], wt![1, 1, 2], wt![0, 0, 3], wt![0, 1, 1], wt![1, 0, 0],
    ]
    .into_iter()
    .map(|w| (w, if w == wt![0, 0, 3] { 3 } else if twice.contains(&w) { 2 } else { 1 }))
    .collect();
    ensure(got == expected, format!("Δ(2,3,3) factors: {got:?}"))?;
    let sf = jantzen_sum_weyl(a3, 3, wt![2, 3, 3]).map_err(|e| e.to_string())?;
    let d = decompose_weyl(a3, &sf, t).map_err(|e| e.to_string())?;
    let coeff = |w: Weight| d.iter().find(|(x, _)| *x == w).map(|(_, m)| m.clone()).unwrap_or_default();
    for (w, m) in [(wt![3, 1, 4], 1), (wt![2, 4, 1], 1), (wt![3, 3, 0], 2)] {
        ensure(coeff(w) == BigInt::from(m), format!("sum formula coefficient of L{w} is {}", coeff(w)))?;
    }
    Ok(Pass("16 factors with multiplicities; sum formula has L(3,1,4), L(2,4,1) once and L(3,3,0) twice".into()))
}

fn ac5(b: &DatasetBundle) -> Result<Verdict, String> {
    use CohomologyValue::*;
    let c = g2p7_sigma1_classification(&b.radical_tables(), b.decomposition(Kind::G2, 7).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let expected = vec![
        (wt![-4, 2], Zero),
        (wt![-4, 3], Costandard(wt![2, 0])),
        (wt![-3, 1], Zero),
        (wt![-3, 2], Costandard(wt![1, 0])),
        (wt![-3, 3], Costandard(wt![1, 1])),
        (wt![-2, 1], Costandard(wt![0, 0])),
        (wt![-2, 2], Costandard(wt![0, 1])),
        (wt![-2, 3], Costandard(wt![0, 2])),
        (wt![3, -2], Costandard(wt![0, 0])),
        (wt![4, -2], Costandard(wt![1, 0])),
        (wt![5, -2], Costandard(wt![2, 0])),
    ];
    let mut got = c.r1.clone();
    got.sort_by_key(|(w, _)| *w);
    ensure(got == expected, format!("R¹ list: {got:?}"))?;
    ensure(c.nabla_nonsimple == vec![wt![1, 1], wt![2, 0]], format!("nabla_nonsimple {:?}", c.nabla_nonsimple))?;
    Ok(Pass("11 weights with the stated R¹ values (two zero); ∇ non-simple exactly at (2,0), (1,1)".into()))
}

fn ac6(b: &DatasetBundle) -> Result<Verdict, String> {
    let tables = b.radical_tables();
    let d = b.decomposition(Kind::G2, 7).map_err(|e| e.to_string())?;
    let findings = g2p7_case_analysis(&tables, d).map_err(|e| e.to_string())?;
    let alcoves = |c: u8| findings.iter().filter(|f| f.case_id == c).map(|f| f.alcove).collect::<BTreeSet<_>>();
    ensure(alcoves(1) == [1, 2].into(), format!("case 1 in {:?}", alcoves(1)))?;
    ensure(alcoves(2) == (1..=8).collect(), format!("case 2 in {:?}", alcoves(2)))?;
    ensure(alcoves(3) == [4].into(), format!("case 3 in {:?}", alcoves(3)))?;
    ensure(alcoves(4) == [11].into(), format!("case 4 in {:?}", alcoves(4)))?;
    ensure(
        findings.iter().filter(|f| f.case_id == 1).all(|f| f.resolution == Resolution::HigherLayer),
        "a case 1 finding is not strictly higher",
    )?;
    ensure(findings.iter().all(|f| f.resolution != Resolution::Unresolved), "unresolved finding")?;
    let chain: BTreeSet<Weight> = g2p7_case_patterns().into_iter().flat_map(|c| c.chain).collect();
    let expected: BTreeSet<Weight> = [wt![-5, 3], wt![-7, 5], wt![-5, 4], wt![-3, 3], wt![7, -3]].into();
    ensure(chain == expected, format!("chain weights {chain:?}"))?;
    Ok(Pass(format!("{} findings in the published alcove sets, none unresolved, 5 chain weights absent", findings.len())))
}

fn ac7() -> Result<Verdict, String> {
    let d = |system, prime, d| ExtGapDatum { system, prime, d, witness: None, citation: String::new() };
    ensure(jantzen_bound_check(&d(Kind::B2, 3, 6)), "B2 p=3 d=6")?;
    ensure(jantzen_bound_check(&d(Kind::G2, 5, 15)), "G2 p=5 d=15")?;
    let mut n = 0;
    for kind in Kind::ALL {
        let h = RootSystem::get(kind).coxeter_number;
        for p in (2 * h - 2..=50).filter(|&p| tmcv::report::is_prime(p)) {
            ensure(jantzen_bound_check(&d(kind, p, 2 * (p - h + 1))), format!("{kind} p={p}"))?;
            n += 1;
        }
    }
    for kind in [Kind::A3, Kind::B2] {
        let rs = RootSystem::get(kind);
        let m = min_linked_pairing(rs, 5).map_err(|e| e.to_string())?;
        ensure(m.pairing == 2 * (rs.coxeter_number - 2), format!("{kind} p=5 min linked {}", m.pairing))?;
    }
    Ok(Pass(format!("B2 d=6, G2 d=15, generic bound on {n} (Φ, p) pairs; min linked pairing 2(h−2) for A3 and B2 at p=5")))
}

fn ac8() -> Result<Verdict, String> {
    let r = a3p5_linkage_check().map_err(|e| e.to_string())?;
    for (l, pairing) in &r.linked {
        ensure(*l == r.exception || *pairing < r.bound, format!("counterexample {l}"))?;
    }
    let g2 = RootSystem::get(Kind::G2);
    let published = [
        (1, (5, 5), (7, 7)),
        (2, (3, 5), (9, 7)),
        (3, (4, 4), (8, 8)),
        (4, (4, 3), (8, 9)),
        (5, (3, 3), (9, 9)),
        (6, (4, 1), (7, 11)),
        (7, (0, 4), (12, 8)),
        (8, (2, 2), (10, 10)),
        (11, (1, 2), (11, 10)),
        (13, (1, 1), (11, 11)),
        (15, (2, 0), (10, 12)),
        (16, (0, 0), (12, 12)),
    ];
    let mut bad = Vec::new();
    for (alcove, (a, b), (c, d)) in published {
        if hat(g2, 7, 1, wt![a, b]).map_err(|e| e.to_string())? != wt![c, d] {
            bad.push((alcove, wt![a, b], wt![c, d]));
        }
    }
    let linkage = format!("no counterexample among {} linked weights", r.linked.len());
    if bad.is_empty() {
        return Ok(Pass(format!("{linkage}; 12 hat pairs reproduced")));
    }
    let explained = bad == vec![(6, wt![4, 1], wt![7, 11])]
        && !is_p_regular(g2, wt![4, 1], 7)
        && hat(g2, 7, 1, wt![5, 1]).ok() == Some(wt![7, 11])
        && is_p_regular(g2, wt![5, 1], 7);
    if explained {
        Ok(KnownGap(format!(
            "{linkage}; 11 of 12 hat pairs reproduced. Alcove 6 lists λ = (4,1), but hat(4,1) = {} and (4,1) is \
             7-singular; λ = (5,1) gives the listed λ̂ = (7,11)",
            hat(g2, 7, 1, wt![4, 1]).unwrap()
        )))
    } else {
        Err(format!("hat pairs differ: {bad:?}"))
    }
}

fn ac9(b: &DatasetBundle) -> Result<Verdict, String> {
    let g2 = RootSystem::get(Kind::G2);
    let r = g2p3_isogeny_checks(b.decomposition(Kind::G2, 3).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(r.factorizations.len() == 9, "not 9 factorizations")?;
    let dim22 = r.factorizations.iter().find(|(w, _)| *w == wt![2, 2]).map(|(_, d)| d.clone());
    ensure(dim22 == Some(BigInt::from(729)), format!("dim L(2,2) = {dim22:?}"))?;
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rng.gen_range(0..12);
        let c: Character = CharacterOf::from_terms((0..n).map(|_| {
            (Weight::new(&[rng.gen_range(-6..=6), rng.gen_range(-6..=6)]), BigInt::from(rng.gen_range(-5..=5)))
        }));
        let twice = c.g2_half_twist(g2).and_then(|x| x.g2_half_twist(g2)).map_err(|e| e.to_string())?;
        ensure(twice == c.twist(3), "half twist twice is not the Frobenius twist")?;
    }
    Ok(Pass("9 factorizations, dim L(2,2) = 729, half twist squared = Frobenius on 100 characters".into()))
}

fn ac10(b: &DatasetBundle) -> Result<Verdict, String> {
    let mut weights = 0;
    for kind in Kind::ALL {
        let rs = RootSystem::get(kind);
        let reach = 3 * rs.coxeter_number - rs.pairing_alpha0(rs.rho());
        for l in rs.dominant_weights_up_to(reach) {
            let a: CharacterOf<i64> = weyl_character(rs, l).map_err(|e| e.to_string())?;
            let c: CharacterOf<i64> = weyl_character_alternating(rs, l).map_err(|e| e.to_string())?;
            ensure(a == c, format!("{kind} {l}: Freudenthal and alternating sum differ"))?;
            weights += 1;
        }
    }
    let mut triples = 0;
    for (kind, p) in [(Kind::A2, 5), (Kind::B2, 5), (Kind::G2, 7), (Kind::A3, 5)] {
        let rs = RootSystem::get(kind);
        let alc = box_alcoves(rs, p, SpecialPoint::new(rs, p, -rs.rho()).map_err(|e| e.to_string())?);
        for x in &alc {
            for y in &alc {
                ensure(distance(x, y) == -distance(y, x), format!("{kind}: antisymmetry"))?;
                for z in &alc {
                    ensure(distance(x, z) == distance(x, y) + distance(y, z), format!("{kind}: additivity"))?;
                    triples += 1;
                }
            }
        }
    }
    let g2 = RootSystem::get(Kind::G2);
    let d = b.decomposition(Kind::G2, 7).map_err(|e| e.to_string())?;
    let derived = rederive_simples(g2, &b.radical_tables()).map_err(|e| e.to_string())?;
    ensure(derived.len() == 12, format!("{} simple characters re-derived", derived.len()))?;
    for (mu, c) in &derived {
        ensure(*c == simple_character(g2, 7, *mu, d).map_err(|e| e.to_string())?, format!("ch L{mu} differs"))?;
    }
    Ok(Pass(format!("dual method on {weights} weights, {triples} alcove triples, 12 simple characters re-derived")))
}

/// Every multiplicity field of the bundled tables, as (file, JSON pointer).
fn multiplicity_fields(root: &Path, paths: &[String]) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for path in paths {
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(root.join(path)).unwrap()).unwrap();
        if let Some(rows) = v.get("rows").and_then(|r| r.as_array()) {
            for (i, r) in rows.iter().enumerate() {
                for j in 0..r["factors"].as_array().unwrap().len() {
                    out.push((path.clone(), format!("/rows/{i}/factors/{j}/mult")));
                }
            }
        }
        if let Some(entries) = v.get("entries").and_then(|r| r.as_array()) {
            if entries.first().is_some_and(|e| e.get("mult").is_some()) {
                for i in 0..entries.len() {
                    out.push((path.clone(), format!("/entries/{i}/mult")));
                }
            }
        }
    }
    out
}

/// The weights a diagnostic may legitimately name for a perturbed field.
fn named_weights(v: &serde_json::Value, pointer: &str) -> Vec<Weight> {
    let parent = &pointer[..pointer.rfind('/').unwrap()];
    let field = v.pointer(parent).unwrap();
    let w = |x: &serde_json::Value| serde_json::from_value::<Weight>(x.clone()).unwrap();
    if pointer.starts_with("/rows") {
        let row = &pointer[..pointer.find("/factors").unwrap()];
        vec![w(&field["weight"]), w(&v.pointer(row).unwrap()["weight"])]
    } else {
        let (s0, s1, t1) = (w(&field["sigma0"]), w(&field["sigma1"]), w(&field["shifted_sigma1"]));
        vec![s0, s1, t1, s0 + 7 * s1, s0 + 7 * t1]
    }
}

fn ac11() -> Result<Verdict, String> {
    let src = default_data_dir();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let root = dir.path();
    let manifest = DatasetBundle::load(&src).map_err(|e| e.to_string())?.manifest;
    let paths: Vec<String> = manifest.files.iter().map(|f| f.path.clone()).collect();
    let copy_all = || {
        for p in paths.iter().chain([&MANIFEST.to_string()]) {
            let to = root.join(p);
            std::fs::create_dir_all(to.parent().unwrap()).unwrap();
            std::fs::copy(src.join(p), to).unwrap();
        }
    };
    copy_all();
    let fields = multiplicity_fields(root, &paths);
    // every file contributes, spread evenly over its fields
    let mut sample: Vec<(String, String)> = Vec::new();
    for p in &paths {
        let f: Vec<_> = fields.iter().filter(|(q, _)| q == p).collect();
        let take = 5.min(f.len());
        for k in 0..take {
            sample.push(f[k * f.len() / take].clone());
        }
    }
    ensure(sample.len() >= 50, format!("only {} fields sampled", sample.len()))?;
    for (path, pointer) in &sample {
        copy_all();
        let file = root.join(path);
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
        let m = v.pointer(pointer).and_then(|m| m.as_u64()).unwrap();
        *v.pointer_mut(pointer).unwrap() = serde_json::Value::from(m + 1);
        std::fs::write(&file, pretty_json(&v)).unwrap();
        let rebuilt = build_manifest(root, &paths).map_err(|e| e.to_string())?;
        std::fs::write(root.join(MANIFEST), pretty_json(&rebuilt)).unwrap();
        let (code, diag) = match validate(root, Format::Text) {
            Ok(o) => (o.code, o.stdout.lines().last().unwrap_or("").to_string()),
            Err(e) => (exit_code(&e), e.to_string()),
        };
        ensure(code != 0, format!("{path}{pointer}: validate passed"))?;
        let names = named_weights(&v, pointer);
        ensure(
            names.iter().any(|w| diag.contains(&w.to_string())),
            format!("{path}{pointer}: diagnostic names none of {names:?}: {diag}"),
        )?;
    }
    // the same through the binary, with its exit status
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_tmcv"))
        .args(["validate", root.to_str().unwrap()])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() != Some(0), "binary accepted a perturbed bundle")?;
    Ok(Pass(format!("{} of {} multiplicity fields perturbed by +1, each rejected naming its weight", sample.len(), fields.len())))
}

fn main() {
    let start = Instant::now();
    let b = bundle();
    let criteria: Vec<Criterion> = vec![
        ("AC1 master identity over the 12 radical tables", Box::new(|| ac1(&b))),
        ("AC2 inverse KL table from alcove 1", Box::new(|| ac2(&b))),
        ("AC3 Steinberg weight scans", Box::new(ac3)),
        ("AC4 Weyl module (2,3,3) at p=3", Box::new(|| ac4(&b))),
        ("AC5 σ1 classification", Box::new(|| ac5(&b))),
        ("AC6 case analysis", Box::new(|| ac6(&b))),
        ("AC7 bounds", Box::new(ac7)),
        ("AC8 A3 p=5 linkage and hat table", Box::new(ac8)),
        ("AC9 G2 p=3 isogeny", Box::new(|| ac9(&b))),
        ("AC10 property suites", Box::new(|| ac10(&b))),
        ("AC11 mutation sensitivity", Box::new(ac11)),
    ];
    let mut broken = 0;
    for (name, f) in &criteria {
        match f() {
            Ok(Pass(d)) => println!("PASS {name}: {d}"),
            Ok(KnownGap(d)) => println!("FAIL {name}: {d}"),
            Err(d) => {
                println!("FAIL {name}: unexpected: {d}");
                broken += 1;
            }
        }
    }
    println!("acceptance finished in {:.1} s", start.elapsed().as_secs_f64());
    if broken > 0 {
        std::process::exit(1);
    }
}
