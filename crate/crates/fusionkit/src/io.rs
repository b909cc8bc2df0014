//! The versioned JSON file format for rings and modular data.
//!
//! Rationals travel as "p/q" strings so round trips are bit-exact; an
//! S/T entry is {"conductor": n, "coeffs": ["p/q", ...]} over the power
//! basis, and a real algebraic number is {"minpoly": [c0, ..., cd],
//! "interval": ["p/q", "p/q"]}. Strict parsing rejects unknown fields;
//! lenient parsing preserves them for the round trip.

use crate::exact::{AlgebraicReal, Cyclotomic};
use crate::modular::ModularData;
use crate::ring::{CoeffMap, FusionRing};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("unknown field '{0}' (strict mode)")]
    UnknownField(String),
    #[error("unsupported format version {0}")]
    Version(u64),
    #[error("payload error: {0}")]
    Payload(#[from] crate::Error),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParseMode {
    Strict,
    Lenient,
}

#[derive(Clone, Debug)]
pub struct RingFile {
    pub version: u64,
    pub name: Option<String>,
    pub provenance: Option<String>,
    pub ring: FusionRing,
    pub smat: Option<Vec<Vec<Cyclotomic>>>,
    pub tmat: Option<Vec<Cyclotomic>>,
    /// Unknown fields preserved by lenient parsing, keyed by JSON pointer
    /// ("/unknown", "/ring/unknown", ...).
    pub extra: BTreeMap<String, Value>,
}

impl RingFile {
    pub fn from_ring(name: impl Into<String>, ring: FusionRing) -> Self {
        RingFile {
            version: FORMAT_VERSION,
            name: Some(name.into()),
            provenance: None,
            ring,
            smat: None,
            tmat: None,
            extra: BTreeMap::new(),
        }
    }

    pub fn from_modular(name: impl Into<String>, data: &ModularData) -> Self {
        RingFile {
            version: FORMAT_VERSION,
            name: Some(name.into()),
            provenance: None,
            ring: data.ring().clone(),
            smat: Some(data.smat().clone()),
            tmat: Some(data.tmat().to_vec()),
            extra: BTreeMap::new(),
        }
    }

    pub fn modular_data(&self) -> Result<Option<ModularData>, FileError> {
        match (&self.smat, &self.tmat) {
            (Some(s), Some(t)) => Ok(Some(ModularData::new(
                self.ring.clone(),
                s.clone(),
                t.clone(),
            )?)),
            (None, None) => Ok(None),
            _ => Err(FileError::Schema(
                "modular payload needs both smat and tmat".into(),
            )),
        }
    }
}

// ---------------------------------------------------------------------------
// Rendering.
// ---------------------------------------------------------------------------

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_string(s: &str) -> Result<BigRational, FileError> {
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim())
            .map_err(|_| FileError::Schema(format!("bad integer '{t}'")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == BigInt::from(0) {
                return Err(FileError::Schema("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
    }
}

pub fn cyclotomic_to_json(c: &Cyclotomic) -> Value {
    json!({
        "conductor": c.conductor(),
        "coeffs": c.coeffs().iter().map(rational_to_string).collect::<Vec<_>>(),
    })
}

pub fn cyclotomic_from_json(v: &Value, mode: ParseMode) -> Result<Cyclotomic, FileError> {
    let obj = as_object(v, "cyclotomic entry")?;
    check_fields(obj, &["conductor", "coeffs"], mode, "cyclotomic")?;
    let conductor = get_u64(obj, "conductor")? as u32;
    let coeffs = get_array(obj, "coeffs")?
        .iter()
        .map(|c| {
            c.as_str()
                .ok_or_else(|| FileError::Schema("coefficients must be strings".into()))
                .and_then(rational_from_string)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Cyclotomic::from_parts(conductor, coeffs)?)
}

pub fn algebraic_to_json(a: &AlgebraicReal) -> Value {
    let (lo, hi) = a.interval();
    json!({
        "minpoly": a.minpoly().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "interval": [rational_to_string(lo), rational_to_string(hi)],
    })
}

pub fn render_ring_file(file: &RingFile) -> Value {
    let mut root = Map::new();
    root.insert("format_version".into(), json!(file.version));
    if file.name.is_some() || file.provenance.is_some() {
        let mut meta = Map::new();
        if let Some(name) = &file.name {
            meta.insert("name".into(), json!(name));
        }
        if let Some(p) = &file.provenance {
            meta.insert("provenance".into(), json!(p));
        }
        root.insert("metadata".into(), Value::Object(meta));
    }
    let ring = &file.ring;
    let coefficients: Vec<Value> = ring
        .coeffs()
        .iter()
        .map(|(&(i, j, k), &n)| json!([i, j, k, n]))
        .collect();
    let mut ring_obj = Map::new();
    ring_obj.insert("rank".into(), json!(ring.rank()));
    ring_obj.insert("labels".into(), json!(ring.labels()));
    ring_obj.insert("dual".into(), json!(ring.duals()));
    ring_obj.insert("coefficients".into(), Value::Array(coefficients));
    root.insert("ring".into(), Value::Object(ring_obj));
    if let (Some(smat), Some(tmat)) = (&file.smat, &file.tmat) {
        let smat_json: Vec<Value> = smat
            .iter()
            .map(|row| Value::Array(row.iter().map(cyclotomic_to_json).collect()))
            .collect();
        let tmat_json: Vec<Value> = tmat.iter().map(cyclotomic_to_json).collect();
        root.insert(
            "modular".into(),
            json!({"smat": smat_json, "tmat": tmat_json}),
        );
    }
    // re-attach preserved unknown fields
    for (pointer, value) in &file.extra {
        let mut parts = pointer.trim_start_matches('/').splitn(2, '/');
        let head = parts.next().unwrap_or_default();
        match parts.next() {
            None => {
                root.insert(head.to_string(), value.clone());
            }
            Some(rest) => {
                if let Some(Value::Object(inner)) = root.get_mut(head) {
                    inner.insert(rest.to_string(), value.clone());
                }
            }
        }
    }
    Value::Object(root)
}

// ---------------------------------------------------------------------------
// Parsing.
// ---------------------------------------------------------------------------

fn as_object<'v>(v: &'v Value, what: &str) -> Result<&'v Map<String, Value>, FileError> {
    v.as_object()
        .ok_or_else(|| FileError::Schema(format!("{what} must be an object")))
}

fn get_u64(obj: &Map<String, Value>, key: &str) -> Result<u64, FileError> {
    obj.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| FileError::Schema(format!("missing or invalid '{key}'")))
}

fn get_array<'v>(obj: &'v Map<String, Value>, key: &str) -> Result<&'v Vec<Value>, FileError> {
    obj.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| FileError::Schema(format!("missing or invalid '{key}'")))
}

/// In strict mode, reject keys outside the schema; in lenient mode return
/// them for preservation.
fn check_fields(
    obj: &Map<String, Value>,
    allowed: &[&str],
    mode: ParseMode,
    context: &str,
) -> Result<Vec<(String, Value)>, FileError> {
    let mut extras = Vec::new();
    for (key, value) in obj {
        if !allowed.contains(&key.as_str()) {
            match mode {
                ParseMode::Strict => {
                    return Err(FileError::UnknownField(format!("{context}/{key}")))
                }
                ParseMode::Lenient => extras.push((key.clone(), value.clone())),
            }
        }
    }
    Ok(extras)
}

pub fn parse_ring_file(text: &str, mode: ParseMode) -> Result<RingFile, FileError> {
    let value: Value = serde_json::from_str(text)?;
    let root = as_object(&value, "ring file")?;
    let mut extra = BTreeMap::new();
    for (key, v) in check_fields(
        root,
        &["format_version", "metadata", "ring", "modular"],
        mode,
        "",
    )? {
        extra.insert(format!("/{key}"), v);
    }
    let version = get_u64(root, "format_version")?;
    if version != FORMAT_VERSION {
        return Err(FileError::Version(version));
    }
    let (name, provenance) = match root.get("metadata") {
        None => (None, None),
        Some(m) => {
            let meta = as_object(m, "metadata")?;
            for (key, v) in check_fields(meta, &["name", "provenance"], mode, "metadata")? {
                extra.insert(format!("/metadata/{key}"), v);
            }
            (
                meta.get("name").and_then(Value::as_str).map(String::from),
                meta.get("provenance")
                    .and_then(Value::as_str)
                    .map(String::from),
            )
        }
    };
    let ring_obj = as_object(
        root.get("ring")
            .ok_or_else(|| FileError::Schema("missing 'ring'".into()))?,
        "ring",
    )?;
    for (key, v) in check_fields(
        ring_obj,
        &["rank", "labels", "dual", "coefficients"],
        mode,
        "ring",
    )? {
        extra.insert(format!("/ring/{key}"), v);
    }
    let rank = get_u64(ring_obj, "rank")? as usize;
    let labels: Vec<String> = get_array(ring_obj, "labels")?
        .iter()
        .map(|v| {
            v.as_str()
                .map(String::from)
                .ok_or_else(|| FileError::Schema("labels must be strings".into()))
        })
        .collect::<Result<_, _>>()?;
    if labels.len() != rank {
        return Err(FileError::Schema("label count differs from rank".into()));
    }
    let dual: Vec<usize> = get_array(ring_obj, "dual")?
        .iter()
        .map(|v| {
            v.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| FileError::Schema("dual must be indices".into()))
        })
        .collect::<Result<_, _>>()?;
    let mut coeffs = CoeffMap::new();
    for entry in get_array(ring_obj, "coefficients")? {
        let quad = entry
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| FileError::Schema("coefficients are [i, j, k, n] quadruples".into()))?;
        let nums: Vec<u64> = quad
            .iter()
            .map(|v| {
                v.as_u64()
                    .ok_or_else(|| FileError::Schema("coefficient entries must be nonnegative integers".into()))
            })
            .collect::<Result<_, _>>()?;
        if coeffs
            .insert((nums[0] as usize, nums[1] as usize, nums[2] as usize), nums[3])
            .is_some()
        {
            return Err(FileError::Schema(format!(
                "duplicate coefficient ({}, {}, {})",
                nums[0], nums[1], nums[2]
            )));
        }
    }
    let ring = FusionRing::new(labels, dual, coeffs)?;
    let (smat, tmat) = match root.get("modular") {
        None => (None, None),
        Some(m) => {
            let modular = as_object(m, "modular")?;
            for (key, v) in check_fields(modular, &["smat", "tmat"], mode, "modular")? {
                extra.insert(format!("/modular/{key}"), v);
            }
            let smat: Vec<Vec<Cyclotomic>> = get_array(modular, "smat")?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| FileError::Schema("smat rows must be arrays".into()))?
                        .iter()
                        .map(|c| cyclotomic_from_json(c, mode))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<_, _>>()?;
            let tmat: Vec<Cyclotomic> = get_array(modular, "tmat")?
                .iter()
                .map(|c| cyclotomic_from_json(c, mode))
                .collect::<Result<_, _>>()?;
            if smat.len() != rank || smat.iter().any(|r| r.len() != rank) || tmat.len() != rank {
                return Err(FileError::Schema(
                    "modular payload shape differs from rank".into(),
                ));
            }
            (Some(smat), Some(tmat))
        }
    };
    Ok(RingFile {
        version,
        name,
        provenance,
        ring,
        smat,
        tmat,
        extra,
    })
}

pub fn read_ring_file(path: &Path, mode: ParseMode) -> Result<RingFile, FileError> {
    let text = std::fs::read_to_string(path)?;
    parse_ring_file(&text, mode)
}

/// Write atomically: temp file in the same directory, then rename.
pub fn write_ring_file(path: &Path, file: &RingFile) -> Result<(), FileError> {
    let rendered = serde_json::to_string_pretty(&render_ring_file(file))?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| "ringfile".into())
    ));
    std::fs::write(&tmp, rendered.as_bytes())?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::ising_ring;
    use crate::modular::ising_modular_data;

    #[test]
    fn ring_round_trip() {
        let file = RingFile::from_ring("ising", ising_ring());
        let text = serde_json::to_string(&render_ring_file(&file)).unwrap();
        let parsed = parse_ring_file(&text, ParseMode::Strict).unwrap();
        assert_eq!(parsed.ring, file.ring);
        assert_eq!(parsed.name.as_deref(), Some("ising"));
        // serialize again: identical text
        let text2 = serde_json::to_string(&render_ring_file(&parsed)).unwrap();
        assert_eq!(text, text2);
    }

    #[test]
    fn modular_round_trip() {
        let md = ising_modular_data(1).unwrap();
        let file = RingFile::from_modular("ising-data", &md);
        let text = serde_json::to_string(&render_ring_file(&file)).unwrap();
        let parsed = parse_ring_file(&text, ParseMode::Strict).unwrap();
        let md2 = parsed.modular_data().unwrap().unwrap();
        assert_eq!(md2.smat(), md.smat());
        assert_eq!(md2.tmat(), md.tmat());
        assert!(md2.is_valid());
        let text2 = serde_json::to_string(&render_ring_file(&parsed)).unwrap();
        assert_eq!(text, text2);
    }

    #[test]
    fn strict_rejects_unknown_fields() {
        let file = RingFile::from_ring("ising", ising_ring());
        let mut v = render_ring_file(&file);
        v.as_object_mut()
            .unwrap()
            .insert("surprise".into(), serde_json::json!(42));
        let text = serde_json::to_string(&v).unwrap();
        assert!(matches!(
            parse_ring_file(&text, ParseMode::Strict),
            Err(FileError::UnknownField(_))
        ));
        // lenient keeps it through the round trip
        let parsed = parse_ring_file(&text, ParseMode::Lenient).unwrap();
        assert_eq!(parsed.extra.get("/surprise"), Some(&serde_json::json!(42)));
        let rendered = render_ring_file(&parsed);
        assert_eq!(rendered.get("surprise"), Some(&serde_json::json!(42)));
    }

    #[test]
    fn version_gate_and_malformed_input() {
        assert!(matches!(
            parse_ring_file("{\"format_version\": 2, \"ring\": {}}", ParseMode::Strict),
            Err(FileError::Version(2))
        ));
        assert!(parse_ring_file("not json", ParseMode::Strict).is_err());
        assert!(parse_ring_file("{}", ParseMode::Strict).is_err());
    }

    #[test]
    fn rational_strings() {
        let r = BigRational::new(BigInt::from(-3), BigInt::from(4));
        assert_eq!(rational_to_string(&r), "-3/4");
        assert_eq!(rational_from_string("-3/4").unwrap(), r);
        let i = BigRational::from_integer(BigInt::from(7));
        assert_eq!(rational_to_string(&i), "7");
        assert_eq!(rational_from_string("7").unwrap(), i);
        assert!(rational_from_string("1/0").is_err());
    }

    #[test]
    fn algebraic_json_shape() {
        let s2 = AlgebraicReal::sqrt_integer(2).unwrap();
        let v = algebraic_to_json(&s2);
        assert_eq!(v["minpoly"], serde_json::json!(["-2", "0", "1"]));
        assert_eq!(v["interval"][0], serde_json::json!("1"));
    }
}
