//! Rewrites data/manifest.json from the files present under the data
//! directory.
//!
//!     cargo run -p tmcv-core --example refresh_manifest [-- DATA_DIR]

use std::path::PathBuf;
use tmcv_core::bundle::{build_manifest, default_data_dir, pretty_json, MANIFEST};

fn main() {
    let root = std::env::args().nth(1).map_or_else(default_data_dir, PathBuf::from);
    let mut paths = Vec::new();
    for sub in ["decomposition", "radical"] {
        let mut names: Vec<String> = std::fs::read_dir(root.join(sub))
            .unwrap()
            .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
            .filter(|n| n.ends_with(".json"))
            .collect();
        names.sort();
        paths.extend(names.into_iter().map(|n| format!("{sub}/{n}")));
    }
    for f in ["g2_alcove_labels.json", "ext_gap.json", "a3_p3_g1_ext.json"] {
        paths.push(f.into());
    }
    let m = build_manifest(&root, &paths).unwrap();
    std::fs::write(root.join(MANIFEST), pretty_json(&m)).unwrap();
    eprintln!("{} files", m.files.len());
}
