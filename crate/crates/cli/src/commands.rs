use crate::report::{self, is_prime};
use crate::Format;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::Path;
use tmcv_core::alcove::{alcove_of, box_regular_weights, distance, SpecialPoint};
use tmcv_core::babyverma::g1t_factors;
use tmcv_core::bundle::DatasetBundle;
use tmcv_core::decomposition::{decompose, derive_table, DecompositionTable};
use tmcv_core::verifier::{residual_character, steinberg_weight_scan};
use tmcv_core::weyl::weyl_character;
use tmcv_core::{Character, Error, Kind, Result, RootSystem, Weight};

pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// 2 for usage and unreadable or missing data, 1 for everything a check
/// rejected.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_)
        | Error::SchemaError { .. }
        | Error::MissingData(_)
        | Error::MissingKey(_)
        | Error::UnsupportedCase(_)
        | Error::WrongSystem { .. } => 2,
        _ => 1,
    }
}

fn json_out(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn check_case(kind: Kind, p: i64, weight: Option<Weight>) -> Result<&'static RootSystem> {
    if !is_prime(p) {
        return Err(Error::UnsupportedCase(format!("p = {p} is not prime")));
    }
    let rs = RootSystem::get(kind);
    if let Some(w) = weight {
        if w.rank() != rs.rank {
            return Err(Error::UnsupportedCase(format!("{kind} weights have {} coordinates, got {w}", rs.rank)));
        }
    }
    Ok(rs)
}

pub fn validate(path: &Path, format: Format) -> Result<Outcome> {
    if !path.exists() {
        return Err(Error::Io(format!("{}: no such directory", path.display())));
    }
    let bundle = DatasetBundle::load(path)?;
    let files = bundle.manifest.files.len();
    let (records, failure) = match bundle.validate() {
        Ok(r) => (r, None),
        Err(e) => (Vec::new(), Some(e)),
    };
    let code = if failure.is_some() { 1 } else { 0 };
    let stdout = match format {
        Format::Json => json_out(&json!({
            "data_dir": path.display().to_string(),
            "files": files,
            "checks": records,
            "failure": failure.as_ref().map(|e| e.to_string()),
            "exit_status": code,
        })),
        Format::Text => {
            let mut s = format!("{files} files, hashes match the manifest\n");
            for r in &records {
                writeln!(s, "[{}] {}", r.id, r.detail).unwrap();
            }
            match &failure {
                Some(e) => writeln!(s, "FAIL {e}").unwrap(),
                None => writeln!(s, "ok: {} checks passed", records.len()).unwrap(),
            }
            s
        }
    };
    Ok(Outcome { stdout, code })
}

pub fn report(kind: Kind, p: i64, data_dir: &Path, format: Format) -> Result<Outcome> {
    let r = report::build(kind, p, || DatasetBundle::load(data_dir))?;
    let stdout = match format {
        Format::Json => json_out(&serde_json::to_value(&r).unwrap()),
        Format::Text => r.to_text(),
    };
    Ok(Outcome { stdout, code: r.exit_status as u8 })
}

/// The bundled table when there is one, otherwise one derived on the spot.
fn table_for(kind: Kind, p: i64, reach: i64, data_dir: &Path) -> Result<DecompositionTable> {
    if let Ok(b) = DatasetBundle::load(data_dir) {
        if let Ok(t) = b.decomposition(kind, p) {
            return Ok(t.clone());
        }
    }
    let rs = RootSystem::get(kind);
    let bound = reach.max(2 * (p - 1) * rs.pairing_alpha0(rs.rho()));
    derive_table(kind, p, bound, 4000)
}

fn pairs(m: impl IntoIterator<Item = (Weight, String)>) -> Vec<Value> {
    m.into_iter().map(|(w, c)| json!([w, c.parse::<i64>().map(Value::from).unwrap_or(Value::String(c))])).collect()
}

fn listing<T: std::fmt::Display>(v: &[(Weight, T)]) -> String {
    v.iter()
        .map(|(w, m)| if m.to_string() == "1" { w.to_string() } else { format!("{m}×{w}") })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn chars(kind: Kind, p: i64, lambda: Weight, data_dir: &Path, format: Format) -> Result<Outcome> {
    let rs = check_case(kind, p, Some(lambda))?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda));
    }
    let ch: Character = weyl_character(rs, lambda)?;
    let dominant: Vec<(Weight, String)> = ch.dominant_part().into_iter().map(|(w, m)| (w, m.to_string())).collect();
    let t = table_for(kind, p, rs.pairing_alpha0(lambda), data_dir)?;
    let factors: Vec<(Weight, String)> =
        decompose(rs, &ch, &t)?.into_iter().map(|(w, m)| (w, m.to_string())).collect();
    let residual = if rs.is_restricted(lambda, p, 1) {
        let r = residual_character(rs, p, lambda, &t)?;
        let dom: Vec<(Weight, String)> = r.dominant_part().into_iter().map(|(w, m)| (w, m.to_string())).collect();
        Some((r.dim().to_string(), dom, r.is_nonnegative()))
    } else {
        None
    };
    let stdout = match format {
        Format::Json => json_out(&json!({
            "system": kind,
            "prime": p,
            "weight": lambda,
            "dim": ch.dim().to_string(),
            "dominant_weights": pairs(dominant),
            "factors": pairs(factors),
            "residual": residual.map(|(d, dom, nn)| json!({"dim": d, "dominant_weights": pairs(dom), "nonnegative": nn})),
        })),
        Format::Text => {
            let mut s = format!("∇{lambda} for {kind}, p = {p}\n");
            writeln!(s, "dim {}", ch.dim()).unwrap();
            writeln!(s, "dominant weights: {}", listing(&dominant)).unwrap();
            writeln!(s, "factors {}", listing(&factors)).unwrap();
            if let Some((d, dom, nn)) = residual {
                writeln!(s, "residual dim {d}, {} dominant weights, nonnegative {nn}", dom.len()).unwrap();
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

pub fn scan(kind: Kind, p: i64, format: Format) -> Result<Outcome> {
    let rs = check_case(kind, p, None)?;
    let rows = steinberg_weight_scan(rs, p);
    let stdout = match format {
        Format::Json => json_out(&json!({"system": kind, "prime": p, "rows": rows})),
        Format::Text => {
            let mut s = format!("{kind} p = {p}: {} rows\n", rows.len());
            for v in &rows {
                writeln!(s, "γ={} α{} μ={} σ0={} σ1={} s·σ1={}", v.gamma, v.simple + 1, v.mu, v.sigma0, v.sigma1, v.reflected)
                    .unwrap();
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

pub fn babyverma(kind: Kind, p: i64, mu: Weight, data_dir: &Path, format: Format) -> Result<Outcome> {
    let rs = check_case(kind, p, Some(mu))?;
    let t = table_for(kind, p, (p - 1) * rs.pairing_alpha0(rs.rho()), data_dir)?;
    let factors = g1t_factors(rs, p, mu, &t)?;
    // layers are only known where a radical table is bundled
    let radical = if kind == Kind::G2 && p == 7 {
        DatasetBundle::load(data_dir)
            .ok()
            .and_then(|b| b.radical_tables().into_iter().find(|r| r.base_weight == mu))
    } else {
        None
    };
    let layer = |s0: Weight, s1: Weight| radical.as_ref().map(|r| r.layers_of(s0, s1));
    let stdout = match format {
        Format::Json => {
            let rows: Vec<Value> = factors
                .iter()
                .map(|&(s0, s1, m)| json!({"sigma0": s0, "sigma1": s1, "mult": m, "layers": layer(s0, s1)}))
                .collect();
            json_out(&json!({
                "system": kind,
                "prime": p,
                "weight": mu,
                "alcove": radical.as_ref().map(|r| r.alcove),
                "factors": rows,
            }))
        }
        Format::Text => {
            let mut s = format!("Ẑ'{mu} for {kind}, p = {p}: {} factors L(σ0)⊗{p}σ1\n", factors.len());
            if let Some(r) = &radical {
                writeln!(s, "radical layers from the alcove {} table", r.alcove).unwrap();
            }
            for &(s0, s1, m) in &factors {
                write!(s, "{m} × L{s0}⊗{p}{s1}").unwrap();
                if let Some(l) = layer(s0, s1) {
                    let l: Vec<String> = l.iter().map(|(j, k)| format!("{j}:{k}")).collect();
                    write!(s, "  layers {}", l.join(",")).unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

pub fn alcoves(kind: Kind, p: i64, nu: Option<Weight>, data_dir: &Path, format: Format) -> Result<Outcome> {
    let rs = check_case(kind, p, nu)?;
    let nu = SpecialPoint::new(rs, p, nu.unwrap_or(-rs.rho()))?;
    let base = alcove_of(rs, rs.zero(), p).ok();
    let labels = if kind == Kind::G2 && p == 7 { Some(DatasetBundle::load(data_dir)?.labels) } else { None };
    let mut rows = Vec::new();
    for (w, a) in box_regular_weights(rs, p, nu) {
        let d = base.as_ref().map(|b| distance(b, &a));
        let label = match &labels {
            Some(l) => Some(l.label(rs, &a)?),
            None => None,
        };
        rows.push((w, a, d, label));
    }
    let stdout = match format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(w, a, d, l)| json!({"weight": w, "levels": a.levels, "distance_from_fundamental": d, "label": l}))
                .collect();
            json_out(&json!({"system": kind, "prime": p, "special_point": nu.nu, "alcoves": v}))
        }
        Format::Text => {
            let mut s = format!("box of {} for {kind}, p = {p}: {} alcoves\n", nu.nu, rows.len());
            for (w, a, d, l) in &rows {
                write!(s, "{w} levels {:?}", a.levels).unwrap();
                if let Some(d) = d {
                    write!(s, " d(C0, ·) = {d}").unwrap();
                }
                if let Some(l) = l {
                    write!(s, " label {l}").unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}
