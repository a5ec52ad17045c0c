use serde_json::Value;
use std::path::{Path, PathBuf};
use tmcv::report;
use tmcv_core::bundle::{default_data_dir, DatasetBundle};
use tmcv_core::Kind;

fn schema(name: &str) -> jsonschema::JSONSchema {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas").join(format!("{name}.schema.json"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&v).unwrap()
}

fn check(s: &jsonschema::JSONSchema, v: &Value, what: &str) {
    if let Err(errors) = s.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{what}: {msgs:?}");
    }
}

fn read(p: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn bundled_files_match_their_schemas() {
    let root = default_data_dir();
    check(&schema("manifest"), &read(&root.join("manifest.json")), "manifest");
    let b = DatasetBundle::load(&root).unwrap();
    for f in &b.manifest.files {
        let v = read(&root.join(&f.path));
        let id = v["schema"].as_str().unwrap();
        let name = id.trim_start_matches("tmcv.").trim_end_matches(".v1");
        check(&schema(name), &v, &f.path);
    }
}

#[test]
fn reports_match_the_report_schema() {
    let s = schema("report");
    let b = DatasetBundle::load(&default_data_dir()).unwrap();
    for (kind, p) in [(Kind::A2, 3), (Kind::A3, 3), (Kind::B2, 5), (Kind::G2, 2), (Kind::G2, 3), (Kind::G2, 7), (Kind::A3, 11)] {
        let r = report::build(kind, p, || Ok(b.clone())).unwrap();
        check(&s, &serde_json::to_value(&r).unwrap(), &format!("{kind} p={p}"));
    }
}
