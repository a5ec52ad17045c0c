//! Bundled data files: formats, canonical hashing, loading and validation.

use crate::alcove::{box_regular_weights, G2AlcoveLabels, SpecialPoint};
use crate::babyverma::{rederive_simples, simples_for, validate_table, RadicalEntry, RadicalTable};
use crate::decomposition::DecompositionTable;
use crate::verifier::ExtGapDatum;
use crate::{Error, Kind, Result, RootSystem, Weight};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const MANIFEST: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub weight: Weight,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRow {
    pub weight: Weight,
    pub factors: Vec<Factor>,
}

/// An entry the sum formula bounds by `sf_coeff` without fixing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SettledEntry {
    pub row: Weight,
    pub factor: Weight,
    pub sf_coeff: u64,
    pub value: u64,
    pub by: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionProvenance {
    pub method: String,
    pub settled: Vec<SettledEntry>,
    pub externally_sourced_rows: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub schema: String,
    pub system: Kind,
    pub prime: i64,
    /// Rows cover every dominant λ with ⟨λ,α0∨⟩ ≤ bound.
    pub bound: i64,
    pub provenance: DecompositionProvenance,
    pub rows: Vec<DecompositionRow>,
}

impl DecompositionFile {
    pub fn table(&self) -> Result<DecompositionTable> {
        let rows = self
            .rows
            .iter()
            .map(|r| (r.weight, r.factors.iter().map(|f| (f.weight, f.mult)).collect()))
            .collect();
        DecompositionTable::new(self.system, self.prime, rows)
    }

    /// Every restricted entry the sum formula leaves open (coefficient ≥ 2)
    /// is listed as settled, with the value the row carries.
    pub fn check_settled(&self, t: &DecompositionTable) -> Result<()> {
        let settled: BTreeMap<(Weight, Weight), &SettledEntry> =
            self.provenance.settled.iter().map(|e| ((e.row, e.factor), e)).collect();
        let mismatch = |row: Weight, factor: Weight, expected: String, found: String| Error::OracleMismatch {
            context: format!("settled entry [∇({row}):L({factor})]"),
            weight: factor,
            expected,
            found,
        };
        for e in settled.values() {
            let have = t.row(e.row)?.iter().find(|(w, _)| *w == e.factor).map_or(0, |x| x.1);
            if have != e.value || e.value > e.sf_coeff {
                return Err(mismatch(e.row, e.factor, format!("{} (bound {})", e.value, e.sf_coeff), have.to_string()));
            }
        }
        for (lam, row) in t.rows() {
            if !lam.is_below(self.prime) {
                continue;
            }
            let c = t.sum_formula_coefficients(*lam)?;
            for (mu, v) in &c {
                if *v < BigInt::from(2) {
                    continue;
                }
                match settled.get(&(*lam, *mu)) {
                    Some(e) if BigInt::from(e.sf_coeff) == *v => {}
                    _ => {
                        let have = row.iter().find(|(w, _)| w == mu).map_or(0, |x| x.1);
                        return Err(mismatch(*lam, *mu, format!("a settled entry with bound {v}"), have.to_string()));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalTableFile {
    pub schema: String,
    pub provenance: String,
    pub system: Kind,
    pub prime: i64,
    pub alcove: u32,
    pub base_weight: Weight,
    pub shifted_weight: Weight,
    pub entries: Vec<RadicalEntry>,
}

impl RadicalTableFile {
    pub fn table(&self) -> RadicalTable {
        RadicalTable {
            system: self.system,
            prime: self.prime,
            alcove: self.alcove,
            base_weight: self.base_weight,
            shifted_weight: self.shifted_weight,
            entries: self.entries.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelEntry {
    pub label: u32,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelsFile {
    pub schema: String,
    pub provenance: String,
    pub system: Kind,
    pub prime: i64,
    pub labels: Vec<LabelEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtGapFile {
    pub schema: String,
    pub provenance: String,
    pub data: Vec<ExtGapDatum>,
}

/// Restricted μ0 with Ext¹_{G1}(k, L(μ0)) ≠ 0 and the simple module
/// L(ν) ≅ Ext¹_{G1}(k, L(μ0))^{(−1)}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G1ExtEntry {
    pub mu0: Weight,
    pub untwisted: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G1ExtFile {
    pub schema: String,
    pub provenance: String,
    pub system: Kind,
    pub prime: i64,
    pub entries: Vec<G1ExtEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub path: String,
    pub sha256: String,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: String,
    pub files: Vec<ManifestEntry>,
}

/// Canonical form: object keys sorted, no insignificant whitespace.
pub fn canonical_json(v: &serde_json::Value) -> String {
    // serde_json's default map is ordered by key
    serde_json::to_string(v).expect("json values serialize")
}

pub fn canonical_hash(v: &serde_json::Value) -> String {
    hex::encode(Sha256::digest(canonical_json(v).as_bytes()))
}

/// Top-level keys one per line, list items one per line.
pub fn pretty_json<T: Serialize>(x: &T) -> String {
    let v = serde_json::to_value(x).expect("serializable");
    let serde_json::Value::Object(map) = v else { return canonical_json(&v) + "\n" };
    let mut out = String::from("{\n");
    let n = map.len();
    for (i, (k, v)) in map.iter().enumerate() {
        let sep = if i + 1 < n { "," } else { "" };
        let key = serde_json::to_string(k).unwrap();
        match v {
            serde_json::Value::Array(a) if a.first().is_some_and(|e| e.is_object() || e.is_array()) => {
                out += &format!(" {key}: [\n");
                for (j, e) in a.iter().enumerate() {
                    let s = if j + 1 < a.len() { "," } else { "" };
                    out += &format!("  {}{s}\n", spaced(e));
                }
                out += &format!(" ]{sep}\n");
            }
            _ => out += &format!(" {key}: {}{sep}\n", spaced(v)),
        }
    }
    out + "}\n"
}

fn spaced(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Array(a) => format!("[{}]", a.iter().map(spaced).collect::<Vec<_>>().join(", ")),
        serde_json::Value::Object(m) => format!(
            "{{{}}}",
            m.iter().map(|(k, v)| format!("{}: {}", serde_json::to_string(k).unwrap(), spaced(v))).collect::<Vec<_>>().join(", ")
        ),
        _ => v.to_string(),
    }
}

fn read_value(path: &Path) -> Result<serde_json::Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::SchemaError { file: path.display().to_string(), msg: e.to_string() })
}

fn parse<T: DeserializeOwned>(path: &str, v: serde_json::Value, schema: &str) -> Result<T> {
    let found = v.get("schema").and_then(|s| s.as_str()).unwrap_or("");
    if found != schema {
        return Err(Error::SchemaError { file: path.into(), msg: format!("expected schema {schema}, found {found:?}") });
    }
    serde_json::from_value(v).map_err(|e| Error::SchemaError { file: path.into(), msg: e.to_string() })
}

pub const DECOMPOSITION_SCHEMA: &str = "tmcv.decomposition.v1";
pub const RADICAL_SCHEMA: &str = "tmcv.radical-table.v1";
pub const LABELS_SCHEMA: &str = "tmcv.g2-alcove-labels.v1";
pub const EXT_GAP_SCHEMA: &str = "tmcv.ext-gap.v1";
pub const G1_EXT_SCHEMA: &str = "tmcv.g1-ext.v1";
pub const MANIFEST_SCHEMA: &str = "tmcv.manifest.v1";

/// Everything under a data directory, parsed and hash-checked but not yet
/// validated against the oracles.
#[derive(Clone, Debug)]
pub struct DatasetBundle {
    pub root: PathBuf,
    pub manifest: Manifest,
    pub decomposition: BTreeMap<(Kind, i64), (String, DecompositionTable)>,
    pub decomposition_files: BTreeMap<(Kind, i64), DecompositionFile>,
    pub radical: Vec<(String, RadicalTable)>,
    pub labels: G2AlcoveLabels,
    pub ext_gap: Vec<ExtGapDatum>,
    pub g1_ext: G1ExtFile,
}

impl DatasetBundle {
    pub fn load(root: &Path) -> Result<Self> {
        let manifest: Manifest = parse(MANIFEST, read_value(&root.join(MANIFEST))?, MANIFEST_SCHEMA)?;
        let mut decomposition = BTreeMap::new();
        let mut decomposition_files = BTreeMap::new();
        let mut radical = Vec::new();
        let mut labels = None;
        let mut ext_gap = None;
        let mut g1_ext = None;
        for entry in &manifest.files {
            let path = root.join(&entry.path);
            let v = read_value(&path)?;
            let hash = canonical_hash(&v);
            if hash != entry.sha256 {
                return Err(Error::SchemaError {
                    file: entry.path.clone(),
                    msg: format!("content hash {hash} does not match manifest {}", entry.sha256),
                });
            }
            let schema = v.get("schema").and_then(|s| s.as_str()).unwrap_or("").to_string();
            match schema.as_str() {
                DECOMPOSITION_SCHEMA => {
                    let f: DecompositionFile = parse(&entry.path, v, DECOMPOSITION_SCHEMA)?;
                    let t = f.table().map_err(|e| Error::SchemaError { file: entry.path.clone(), msg: e.to_string() })?;
                    decomposition.insert((f.system, f.prime), (entry.path.clone(), t));
                    decomposition_files.insert((f.system, f.prime), f);
                }
                RADICAL_SCHEMA => {
                    let f: RadicalTableFile = parse(&entry.path, v, RADICAL_SCHEMA)?;
                    radical.push((entry.path.clone(), f.table()));
                }
                LABELS_SCHEMA => {
                    let f: LabelsFile = parse(&entry.path, v, LABELS_SCHEMA)?;
                    labels = Some(G2AlcoveLabels { labels: f.labels.iter().map(|e| (e.label, e.weight)).collect() });
                }
                EXT_GAP_SCHEMA => ext_gap = Some(parse::<ExtGapFile>(&entry.path, v, EXT_GAP_SCHEMA)?.data),
                G1_EXT_SCHEMA => g1_ext = Some(parse::<G1ExtFile>(&entry.path, v, G1_EXT_SCHEMA)?),
                other => {
                    return Err(Error::SchemaError { file: entry.path.clone(), msg: format!("unknown schema {other:?}") })
                }
            }
        }
        radical.sort_by_key(|(_, t)| t.alcove);
        let missing = |what: &str| Error::MissingData(format!("manifest lists no {what} file"));
        Ok(DatasetBundle {
            root: root.to_path_buf(),
            manifest,
            decomposition,
            decomposition_files,
            radical,
            labels: labels.ok_or_else(|| missing("alcove label"))?,
            ext_gap: ext_gap.ok_or_else(|| missing("ext-gap"))?,
            g1_ext: g1_ext.ok_or_else(|| missing("G1 Ext table"))?,
        })
    }

    pub fn decomposition(&self, kind: Kind, p: i64) -> Result<&DecompositionTable> {
        self.decomposition
            .get(&(kind, p))
            .map(|(_, t)| t)
            .ok_or_else(|| Error::MissingData(format!("no decomposition table for {kind} p={p}")))
    }

    pub fn radical_tables(&self) -> Vec<RadicalTable> {
        self.radical.iter().map(|(_, t)| t.clone()).collect()
    }

    /// Runs every oracle. Returns one record per passed check; the first
    /// failure is returned as an error prefixed with its file.
    pub fn validate(&self) -> Result<Vec<CheckRecord>> {
        let mut log = Vec::new();
        let mut ok = |id: &'static str, detail: String| log.push(CheckRecord { id, detail });
        let at = |file: &str, e: Error| Error::Data(format!("{file}: {e}"));
        for ((kind, p), (file, t)) in &self.decomposition {
            t.check_sum_formula().map_err(|e| at(file, e))?;
            ok("sum-formula", format!("{file}: {} rows consistent with the sum formula", t.rows().len()));
            t.check_steinberg().map_err(|e| at(file, e))?;
            ok("tensor-product-theorem", format!("{file}: non-restricted rows satisfy the tensor product theorem"));
            let f = &self.decomposition_files[&(*kind, *p)];
            f.check_settled(t).map_err(|e| at(file, e))?;
            ok("settled-entries", format!("{file}: {} open entries settled", f.provenance.settled.len()));
            if RootSystem::get(*kind).rank == 2 && *p > RootSystem::get(*kind).coxeter_number {
                t.check_multiplicity_free().map_err(|e| at(file, e))?;
                ok("multiplicity-free", format!("{file}: p-regular restricted rows multiplicity free"));
            }
        }
        let g2 = RootSystem::get(Kind::G2);
        self.check_labels(g2).map_err(|e| at(LABELS_FILE, e))?;
        ok("alcove-labels", format!("{LABELS_FILE}: 12 labels in distinct alcoves of the box at -rho"));
        if self.radical.len() != 12 {
            return Err(Error::MissingData(format!("expected 12 radical tables, found {}", self.radical.len())));
        }
        let (dfile, decomp) =
            self.decomposition.get(&(Kind::G2, 7)).ok_or_else(|| Error::MissingData("G2 p=7 decomposition".into()))?;
        let tables = self.radical_tables();
        for (file, t) in &self.radical {
            if self.labels.weight(t.alcove) != Some(t.base_weight) {
                return Err(at(file, Error::Data(format!("base weight {} does not match label {}", t.base_weight, t.alcove))));
            }
            t.check_structure(g2).map_err(|e| at(file, e))?;
        }
        ok("radical-structure", format!("{} radical tables: heads, socles, shifted column and linkage", tables.len()));
        let simples = simples_for(g2, &tables, decomp).map_err(|e| at(dfile, e))?;
        for (file, t) in &self.radical {
            validate_table(g2, t, &simples).map_err(|e| at(file, e))?;
            ok("master-identity", format!("{file}: recomposition equals ch Ẑ'{}", t.base_weight));
        }
        let derived = rederive_simples(g2, &tables)?;
        for (mu, c) in &derived {
            if let Some((w, found, expected)) = c.first_difference(&simples[mu]) {
                return Err(at(
                    dfile,
                    Error::OracleMismatch {
                        context: format!("ch L{mu} solved from the radical tables"),
                        weight: w,
                        expected: found.to_string(),
                        found: expected.to_string(),
                    },
                ));
            }
        }
        ok("triangular-rederivation", format!("radical tables determine the {} simple characters of {dfile}", derived.len()));
        let n = self.check_q_recovery(g2).map_err(|e| Error::Data(format!("radical tables: {e}")))?;
        ok("q-recovery", format!("radical tables: {n} inverse KL polynomials recovered, Q = 1 on the base alcove of every table, parity and positivity hold"));
        for d in &self.ext_gap {
            d.check().map_err(|e| at(EXT_GAP_FILE, e))?;
        }
        ok("ext-gap", format!("{EXT_GAP_FILE}: {} data consistent", self.ext_gap.len()));
        self.check_g1_ext().map_err(|e| at(G1_EXT_FILE, e))?;
        ok("g1-ext", format!("{G1_EXT_FILE}: {} restricted weights in the G1 block of 0", self.g1_ext.entries.len()));
        // data-independent oracles last, so a broken file is reported quickly
        for kind in Kind::ALL {
            let rs = RootSystem::get(kind);
            let n = check_weyl_dual_method(rs)?;
            ok("weyl-dual-method", format!("{kind}: Freudenthal equals the alternating sum on {n} weights"));
        }
        for kind in Kind::ALL {
            let rs = RootSystem::get(kind);
            for p in [2, 3, 5, 7] {
                check_steinberg_support(rs, p)?;
            }
            ok("steinberg-support-bound", format!("{kind}: St_1 support minima equal the orbit minima of (p-1)rho for p = 2, 3, 5, 7"));
        }
        Ok(log)
    }

    fn check_g1_ext(&self) -> Result<()> {
        let f = &self.g1_ext;
        let rs = RootSystem::get(f.system);
        for e in &f.entries {
            if !rs.is_restricted(e.mu0, f.prime, 1) {
                return Err(Error::NotRestricted(e.mu0, f.prime));
            }
            let in_block = rs.weyl_group.iter().any(|w| (w.apply(e.mu0 + rs.rho()) - rs.rho()).coords().iter().all(|x| x % f.prime == 0));
            if !in_block || !e.untwisted.is_dominant() {
                return Err(Error::Data(format!("{} is not in the G1 block of 0", e.mu0)));
            }
        }
        Ok(())
    }

    fn check_labels(&self, rs: &RootSystem) -> Result<()> {
        let p = 7;
        let nu = SpecialPoint::new(rs, p, -rs.rho())?;
        let in_box: BTreeMap<Weight, crate::alcove::AlcoveId> = box_regular_weights(rs, p, nu).into_iter().collect();
        let mut seen = std::collections::BTreeSet::new();
        for (&l, &w) in &self.labels.labels {
            let a = in_box.get(&w).ok_or_else(|| Error::Data(format!("label {l}: {w} is not p-regular in the box of -rho")))?;
            if !seen.insert(a.clone()) {
                return Err(Error::Data(format!("label {l}: alcove of {w} already labelled")));
            }
            if !w.is_dominant() {
                return Err(Error::NotDominant(w));
            }
        }
        if seen.len() != 12 {
            return Err(Error::Data(format!("expected 12 labels, found {}", seen.len())));
        }
        Ok(())
    }

    /// Reads Q_{A,C} for every table and every alcove C of every box that
    /// meets the table's factors; checks parity and positivity.
    fn check_q_recovery(&self, rs: &RootSystem) -> Result<usize> {
        let p = 7;
        let mut count = 0;
        let mut heads = 0;
        for t in self.radical_tables() {
            let base = crate::alcove::alcove_of(rs, t.base_weight, p)?;
            let mut boxes = std::collections::BTreeSet::new();
            for e in &t.entries {
                boxes.insert(e.sigma1);
            }
            for s1 in boxes {
                // L̂(w_ν·λ) = L(σ0)⊗7σ1 with σ1 = −ρ + ν̃
                let nu = SpecialPoint::new(rs, p, -rs.rho() + p * (s1 + rs.rho()))?;
                for c in crate::alcove::box_alcoves(rs, p, nu) {
                    let r = crate::babyverma::recover_q(rs, &t, nu, &c)?;
                    if c == base {
                        heads += 1;
                    }
                    if c == base && r.q != crate::babyverma::LaurentPoly::one() {
                        return Err(Error::OracleMismatch {
                            context: format!("alcove {}: Q of the base alcove", t.alcove),
                            weight: r.lambda,
                            expected: "1".into(),
                            found: r.q.to_string(),
                        });
                    }
                    if !r.q.is_zero() {
                        if !r.q.is_positive_polynomial() {
                            return Err(Error::Data(format!("alcove {}: Q for {} is {}", t.alcove, r.lambda, r.q)));
                        }
                        count += 1;
                    }
                }
            }
        }
        if heads != self.radical.len() {
            return Err(Error::Data(format!("base alcove reached in {heads} of {} tables", self.radical.len())));
        }
        Ok(count)
    }
}

/// One passed oracle: a stable id from [`ORACLE_CHECKS`] and a detail line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: &'static str,
    pub detail: String,
}

/// Every oracle `validate` runs.
pub const ORACLE_CHECKS: &[&str] = &[
    "weyl-dual-method",
    "steinberg-support-bound",
    "sum-formula",
    "tensor-product-theorem",
    "settled-entries",
    "multiplicity-free",
    "alcove-labels",
    "radical-structure",
    "master-identity",
    "triangular-rederivation",
    "q-recovery",
    "ext-gap",
    "g1-ext",
];

/// χ(λ) by Freudenthal against the alternating sum, on every dominant λ
/// with ⟨λ+ρ,α0∨⟩ ≤ 3h.
pub fn check_weyl_dual_method(rs: &RootSystem) -> Result<usize> {
    let bound = 3 * rs.coxeter_number - rs.pairing_alpha0(rs.rho());
    let weights = rs.dominant_weights_up_to(bound);
    for &lambda in &weights {
        let a: crate::CharacterOf<i64> = crate::weyl::weyl_character(rs, lambda)?;
        let b: crate::CharacterOf<i64> = crate::weyl::weyl_character_alternating(rs, lambda)?;
        if let Some((w, x, y)) = a.first_difference(&b) {
            return Err(Error::OracleMismatch {
                context: format!("{} χ{lambda}, Freudenthal against alternating sum", rs.kind),
                weight: w,
                expected: y.to_string(),
                found: x.to_string(),
            });
        }
    }
    Ok(weights.len())
}

/// The minimum of ⟨γ,α_i∨⟩ over the St_1 support against the minimum over
/// the W-orbit of (p−1)ρ.
pub fn check_steinberg_support(rs: &RootSystem, p: i64) -> Result<()> {
    let orbit = rs.orbit((p - 1) * rs.rho());
    let got = crate::verifier::steinberg_min_pairings(rs, p);
    for (i, g) in got.iter().enumerate() {
        let w = orbit.iter().min_by_key(|w| w[i]).unwrap();
        if *g != w[i] {
            return Err(Error::OracleMismatch {
                context: format!("{} p={p} St_1 support minimum for simple root {}", rs.kind, i + 1),
                weight: *w,
                expected: w[i].to_string(),
                found: g.to_string(),
            });
        }
    }
    Ok(())
}

pub const LABELS_FILE: &str = "g2_alcove_labels.json";
pub const EXT_GAP_FILE: &str = "ext_gap.json";
pub const G1_EXT_FILE: &str = "a3_p3_g1_ext.json";

/// Recomputes the manifest from the files in `root`, keeping provenance
/// strings from each file.
pub fn build_manifest(root: &Path, paths: &[String]) -> Result<Manifest> {
    let mut files = Vec::new();
    for path in paths {
        let v = read_value(&root.join(path))?;
        let provenance = match v.get("provenance") {
            Some(serde_json::Value::String(s)) => s.clone(),
            Some(serde_json::Value::Object(o)) => o.get("method").and_then(|m| m.as_str()).unwrap_or("").to_string(),
            _ => String::new(),
        };
        files.push(ManifestEntry { path: path.clone(), sha256: canonical_hash(&v), provenance });
    }
    Ok(Manifest { schema: MANIFEST_SCHEMA.into(), files })
}

/// The data directory shipped with the workspace.
pub fn default_data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}
