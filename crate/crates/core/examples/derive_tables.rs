//! Derives a decomposition table from the sum formula, settling the entries
//! it leaves open by the contravariant form, and optionally writes it out.
//!
//!     cargo run --release -p tmcv-core --example derive_tables -- \
//!         G2 7 30 [--max-words N] [--multfree] [--out data/decomposition/G2_p7.json]
//!
//! With `--multfree`, open entries of p-regular restricted rows whose weight
//! space is too large for the form computation are set to 1.

use std::time::Instant;
use tmcv_core::alcove::is_p_regular;
use tmcv_core::bundle::{pretty_json, DecompositionFile, DecompositionProvenance, DecompositionRow, Factor, SettledEntry};
use tmcv_core::decomposition::{derive_from_sum_formula, Resolver, Source};
use tmcv_core::shapovalov::simple_weight_multiplicity;
use tmcv_core::{Kind, RootSystem, Weight};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind: Kind = args[0].parse().unwrap();
    let p: i64 = args[1].parse().unwrap();
    let bound: i64 = args[2].parse().unwrap();
    let flag = |name: &str| args.iter().position(|a| a == name).map(|i| args.get(i + 1).cloned().unwrap_or_default());
    let max_words: usize = flag("--max-words").map_or(5000, |s| s.parse().unwrap());
    let multfree = args.iter().any(|a| a == "--multfree");
    let rs = RootSystem::get(kind);
    let t = Instant::now();
    let ws = |l, m| {
        let t = Instant::now();
        let r = simple_weight_multiplicity(rs, p, l, m, max_words).unwrap();
        eprintln!("  form rank {l} at {m}: {r:?} ({:?})", t.elapsed());
        r
    };
    let rule = |l: Weight, _| (multfree && rs.rank == 2 && l.is_below(p) && is_p_regular(rs, l, p)).then_some(1);
    let resolver = Resolver { weight_space: &ws, rule: &rule };
    let d = derive_from_sum_formula(kind, p, bound, &resolver).unwrap();
    eprintln!("{kind} p={p} bound={bound}: {} rows in {:?}", d.rows.len(), t.elapsed());
    for c in &d.choices {
        eprintln!("  {:?}: row {} factor {} sf-coeff {} value {}", c.source, c.row, c.factor, c.sf_coeff, c.value);
    }
    let Some(out) = flag("--out") else { return };
    assert!(d.choices.iter().all(|c| c.source != Source::Open), "open entries remain");
    let settled = d
        .choices
        .iter()
        .map(|c| SettledEntry {
            row: c.row,
            factor: c.factor,
            sf_coeff: c.sf_coeff,
            value: c.value,
            by: match c.source {
                Source::FormRank => "rank of the contravariant form on the weight space of the Weyl module".into(),
                Source::Rule => "multiplicity-free composition series of Weyl modules with p-regular restricted highest weight in rank 2".into(),
                Source::Search => "only value consistent with the sum formula on all rows".into(),
                Source::Open => unreachable!(),
            },
        })
        .collect();
    let mut rows: Vec<DecompositionRow> = d
        .rows
        .iter()
        .map(|(w, r)| DecompositionRow { weight: *w, factors: r.iter().map(|(m, k)| Factor { weight: *m, mult: *k }).collect() })
        .collect();
    rows.sort_by_key(|r| (rs.pairing_alpha0(r.weight), r.weight));
    let file = DecompositionFile {
        schema: tmcv_core::bundle::DECOMPOSITION_SCHEMA.into(),
        system: kind,
        prime: p,
        bound,
        provenance: DecompositionProvenance {
            method: "derived: restricted rows from the Jantzen sum formula, non-restricted rows from Steinberg's tensor product theorem".into(),
            settled,
            externally_sourced_rows: vec![],
        },
        rows,
    };
    std::fs::write(&out, pretty_json(&file)).unwrap();
    eprintln!("wrote {out}");
}
