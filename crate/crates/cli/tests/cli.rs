use serde_json::Value;
use std::process::{Command, Output};
use tmcv::report::{self, Report, Status};
use tmcv_core::bundle::{canonical_json, default_data_dir, DatasetBundle};
use tmcv_core::Kind;

fn tmcv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tmcv"))
        .args(args)
        .env("TMCV_DATA_DIR", default_data_dir())
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const CASES: [(&str, &str); 12] = [
    ("A1", "3"),
    ("A2", "2"),
    ("A2", "3"),
    ("A3", "2"),
    ("A3", "3"),
    ("A3", "5"),
    ("B2", "3"),
    ("B2", "5"),
    ("G2", "2"),
    ("G2", "3"),
    ("G2", "5"),
    ("G2", "7"),
];

#[test]
fn pristine_bundle_validates() {
    let o = tmcv(&["validate"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("[master-identity]"));
}

#[test]
fn missing_directory_is_a_data_error() {
    let o = tmcv(&["validate", "/nonexistent/tmcv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_decomposition_key_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let src = default_data_dir();
    let b = DatasetBundle::load(&src).unwrap();
    for f in &b.manifest.files {
        let to = dir.path().join(&f.path);
        std::fs::create_dir_all(to.parent().unwrap()).unwrap();
        std::fs::copy(src.join(&f.path), to).unwrap();
    }
    // drop row (0,1,1) from A3 p=3; row (1,1,1) and others list it as a factor
    let file = dir.path().join("decomposition/A3_p3.json");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    v["rows"].as_array_mut().unwrap().retain(|r| r["weight"] != serde_json::json!([0, 1, 1]));
    std::fs::write(&file, tmcv_core::bundle::pretty_json(&v)).unwrap();
    let paths: Vec<String> = b.manifest.files.iter().map(|f| f.path.clone()).collect();
    let m = tmcv_core::bundle::build_manifest(dir.path(), &paths).unwrap();
    std::fs::write(dir.path().join(tmcv_core::bundle::MANIFEST), tmcv_core::bundle::pretty_json(&m)).unwrap();
    let o = tmcv(&["validate", dir.path().to_str().unwrap()]);
    assert_ne!(o.status.code(), Some(0));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("no row for (0,1,1)"), "{err}");
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    for (t, p) in CASES {
        for fmt in ["text", "json"] {
            let a = tmcv(&["report", "--type", t, "--prime", p, "--format", fmt]);
            let b = tmcv(&["report", "--type", t, "--prime", p, "--format", fmt]);
            assert_eq!(a.status.code(), Some(0), "{t} {p}: {}", stdout(&a));
            assert_eq!(a.stdout, b.stdout, "{t} {p} {fmt}");
            if fmt == "json" {
                let v: Value = serde_json::from_slice(&a.stdout).unwrap();
                let r: Report = serde_json::from_value(v.clone()).unwrap();
                assert_eq!(r.schema, report::REPORT_SCHEMA);
                assert_eq!(canonical_json(&serde_json::to_value(&r).unwrap()), canonical_json(&v));
            }
        }
    }
}

#[test]
fn reports_never_verify_candidates() {
    let b = DatasetBundle::load(&default_data_dir()).unwrap();
    let r = report::build(Kind::G2, 7, || Ok(b.clone())).unwrap();
    let f = r.sections.iter().find(|s| s.title.starts_with("filtration conditions")).unwrap();
    assert!(f.evidence.iter().any(|e| e.contains("candidate") || e.contains("inconclusive")));
    assert_eq!(f.status, Status::Unverified);
    let g2p2 = report::build(Kind::G2, 2, || unreachable!()).unwrap();
    assert!(g2p2.sections.iter().all(|s| s.status == Status::OutOfScope));
}

#[test]
fn report_contents() {
    let a3 = stdout(&tmcv(&["report", "--type", "A3", "--prime", "3"]));
    assert!(a3.contains("9 rows"));
    assert!(a3.contains("Δ(2,3,3): 16 factors"));
    assert!(a3.contains("sum formula of Δ(2,3,3) in simple characters: (3,1,4) (2,4,1)"));
    let b2 = stdout(&tmcv(&["report", "--type", "B2", "--prime", "5"]));
    assert!(b2.contains("[Verified] no cancellation"));
    let g2 = stdout(&tmcv(&["report", "--type", "G2", "--prime", "7"]));
    assert_eq!(g2.matches(", exact").count(), 12);
    for c in 1..=4 {
        assert!(g2.contains(&format!("case {c} occurs in alcoves")));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["report", "--type", "A2", "--prime", "4"][..],
        &["report", "--type", "E8", "--prime", "5"],
        &["chars", "--type", "A2", "--prime", "3", "--weight", "1,1,1"],
        &["chars", "--type", "A2", "--prime", "3", "--weight", "x"],
        &["bogus"],
    ] {
        assert_eq!(tmcv(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn chars_examples() {
    let o = stdout(&tmcv(&["chars", "--type", "G2", "--prime", "7", "--weight", "1,1"]));
    assert!(o.contains("factors (1,1), (2,0)\n"), "{o}");
    let o = tmcv(&["chars", "--type", "A3", "--prime", "3", "--weight", "2,3,3", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let f = v["factors"].as_array().unwrap();
    assert_eq!(f.len(), 16);
    assert!(f.contains(&serde_json::json!([[0, 0, 3], 3])));
    for (t, w) in [("A1", "0"), ("A2", "0,0"), ("A3", "0,0,0"), ("B2", "0,0"), ("G2", "0,0")] {
        let o = stdout(&tmcv(&["chars", "--type", t, "--prime", "3", "--weight", w]));
        assert!(o.contains("\ndim 1\n"), "{t}: {o}");
    }
}

#[test]
fn scan_babyverma_and_alcoves() {
    let o = stdout(&tmcv(&["scan", "--type", "B2", "--prime", "5"]));
    assert!(o.starts_with("B2 p = 5: 2 rows"));
    let o = stdout(&tmcv(&["babyverma", "--weight", "0,0"]));
    assert!(o.contains("radical layers from the alcove 1 table"));
    assert!(o.contains("1 × L(5,5)⊗7(-1,-1)  layers 0:1"), "{o}");
    let o = tmcv(&["alcoves", "--type", "G2", "--prime", "7", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let labels: Vec<u64> = v["alcoves"].as_array().unwrap().iter().map(|a| a["label"].as_u64().unwrap()).collect();
    assert_eq!(labels.len(), 12);
    let mut sorted = labels.clone();
    sorted.sort();
    assert_eq!(sorted, vec![1, 2, 3, 4, 5, 6, 7, 8, 11, 13, 15, 16]);
}
