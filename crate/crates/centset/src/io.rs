//! The `centset-group-v1` JSON file format.
//!
//! Three kinds are accepted: `permutation` (degree + generator list),
//! `table` (flat row-major multiplication table) and `family` (constructor
//! name + parameters). Loaded tables are fully re-validated. Table files
//! above order 512 store the table as `tableRle`: LEB128 varint
//! (run-length, value) pairs over the row-major entries, base64-encoded;
//! the loader accepts either representation at any order.

use std::collections::BTreeMap;
use std::path::Path;

use base64::Engine;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::families::{FamilyName, FamilySpec};
use crate::group::{CayleyGroup, PermGenSpec, Provenance};
use crate::{Config, Result};

pub const FORMAT: &str = "centset-group-v1";

/// Order above which table files switch to the compressed representation.
pub const RLE_THRESHOLD: usize = 512;

#[derive(Debug, Serialize, Deserialize)]
struct Envelope {
    format: String,
    #[serde(flatten)]
    body: Body,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Body {
    Permutation {
        degree: usize,
        generators: Vec<Vec<u16>>,
    },
    Table {
        order: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        table: Option<Vec<u16>>,
        #[serde(rename = "tableRle", default, skip_serializing_if = "Option::is_none")]
        table_rle: Option<String>,
    },
    Family {
        name: FamilyName,
        params: BTreeMap<String, u64>,
    },
}

fn write_varint(out: &mut Vec<u8>, mut v: u64) {
    loop {
        let byte = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

fn read_varint(data: &[u8], pos: &mut usize) -> Result<u64> {
    let mut v = 0u64;
    let mut shift = 0u32;
    loop {
        let byte = *data
            .get(*pos)
            .ok_or_else(|| Error::InvalidGroupFile("truncated varint stream".into()))?;
        *pos += 1;
        if shift >= 63 {
            return Err(Error::InvalidGroupFile("varint overflow".into()));
        }
        v |= u64::from(byte & 0x7f) << shift;
        if byte & 0x80 == 0 {
            return Ok(v);
        }
        shift += 7;
    }
}

/// Run-length encodes the table as (count, value) varint pairs.
pub fn encode_table_rle(table: &[u16]) -> String {
    let mut bytes = Vec::new();
    let mut i = 0;
    while i < table.len() {
        let v = table[i];
        let mut run = 1u64;
        while i + (run as usize) < table.len() && table[i + run as usize] == v {
            run += 1;
        }
        write_varint(&mut bytes, run);
        write_varint(&mut bytes, u64::from(v));
        i += run as usize;
    }
    base64::engine::general_purpose::STANDARD.encode(bytes)
}

pub fn decode_table_rle(encoded: &str, expected_len: usize) -> Result<Vec<u16>> {
    let bytes = base64::engine::general_purpose::STANDARD
        .decode(encoded.trim())
        .map_err(|e| Error::InvalidGroupFile(format!("bad base64 in tableRle: {e}")))?;
    let mut out = Vec::with_capacity(expected_len);
    let mut pos = 0;
    while pos < bytes.len() {
        let run = read_varint(&bytes, &mut pos)?;
        let value = read_varint(&bytes, &mut pos)?;
        if value > u64::from(u16::MAX) || run == 0 {
            return Err(Error::InvalidGroupFile("invalid RLE pair".into()));
        }
        if out.len() + run as usize > expected_len {
            return Err(Error::InvalidGroupFile("RLE stream longer than table".into()));
        }
        out.extend(std::iter::repeat(value as u16).take(run as usize));
    }
    if out.len() != expected_len {
        return Err(Error::InvalidGroupFile(format!(
            "RLE stream decodes to {} entries, expected {expected_len}",
            out.len()
        )));
    }
    Ok(out)
}

/// Parses and fully validates a group file.
pub fn load_str(text: &str, config: &Config) -> Result<CayleyGroup> {
    let env: Envelope = serde_json::from_str(text)
        .map_err(|e| Error::InvalidGroupFile(format!("not a group file: {e}")))?;
    if env.format != FORMAT {
        return Err(Error::InvalidGroupFile(format!(
            "unknown format '{}', expected '{FORMAT}'",
            env.format
        )));
    }
    match env.body {
        Body::Permutation { degree, generators } => {
            CayleyGroup::build_from_permutations(&PermGenSpec { degree, generators }, config.order_cap)
        }
        Body::Table { order, table, table_rle } => {
            if order > config.order_cap {
                return Err(Error::OrderCapExceeded { required: order, cap: config.order_cap });
            }
            let table = match (table, table_rle) {
                (Some(t), None) => t,
                (None, Some(rle)) => decode_table_rle(&rle, order * order)?,
                _ => {
                    return Err(Error::InvalidGroupFile(
                        "table files need exactly one of 'table' or 'tableRle'".into(),
                    ))
                }
            };
            CayleyGroup::from_table(order, table, None, Some(Provenance::Note("loaded table".into())))
        }
        Body::Family { name, params } => FamilySpec { name, params }.build(config.order_cap),
    }
}

pub fn load_path(path: &Path, config: &Config) -> Result<CayleyGroup> {
    let text = std::fs::read_to_string(path)?;
    load_str(&text, config)
}

/// Serializes a group in table form (RLE-compressed above order 512).
pub fn to_table_json(g: &CayleyGroup) -> String {
    let body = if g.order() > RLE_THRESHOLD {
        Body::Table {
            order: g.order(),
            table: None,
            table_rle: Some(encode_table_rle(g.table())),
        }
    } else {
        Body::Table {
            order: g.order(),
            table: Some(g.table().to_vec()),
            table_rle: None,
        }
    };
    serde_json::to_string(&Envelope { format: FORMAT.into(), body }).expect("serializable")
}

/// Serializes a group in family form; requires family provenance.
pub fn to_family_json(g: &CayleyGroup) -> Result<String> {
    match g.provenance() {
        Some(Provenance::Family(spec)) => {
            let body = Body::Family { name: spec.name, params: spec.params.clone() };
            Ok(serde_json::to_string(&Envelope { format: FORMAT.into(), body }).expect("serializable"))
        }
        _ => Err(Error::BadParams(
            "group was not built from a family; use table form".into(),
        )),
    }
}

/// Serializes a permutation spec file.
pub fn to_permutation_json(spec: &PermGenSpec) -> String {
    let body = Body::Permutation { degree: spec.degree, generators: spec.generators.clone() };
    serde_json::to_string(&Envelope { format: FORMAT.into(), body }).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cyclic, dihedral, symmetric};
    use crate::DEFAULT_ORDER_CAP as CAP;

    #[test]
    fn family_file_roundtrip() {
        let cfg = Config::default();
        let d8 = dihedral(4, CAP).unwrap();
        let js = to_family_json(&d8).unwrap();
        assert!(js.contains("\"format\":\"centset-group-v1\""));
        assert!(js.contains("\"kind\":\"family\""));
        let back = load_str(&js, &cfg).unwrap();
        assert_eq!(back.table(), d8.table());
    }

    #[test]
    fn table_file_roundtrip() {
        let cfg = Config::default();
        let s4 = symmetric(4, CAP).unwrap();
        let js = to_table_json(&s4);
        assert!(js.contains("\"table\":"));
        let back = load_str(&js, &cfg).unwrap();
        assert_eq!(back.table(), s4.table());
    }

    #[test]
    fn large_table_uses_rle() {
        let cfg = Config::default();
        let big = cyclic(600, CAP).unwrap();
        let js = to_table_json(&big);
        assert!(js.contains("\"tableRle\":"));
        assert!(!js.contains("\"table\":["));
        let back = load_str(&js, &cfg).unwrap();
        assert_eq!(back.table(), big.table());
    }

    #[test]
    fn permutation_file() {
        let cfg = Config::default();
        let js = r#"{"format":"centset-group-v1","kind":"permutation","degree":3,"generators":[[1,2,0],[1,0,2]]}"#;
        assert_eq!(load_str(js, &cfg).unwrap().order(), 6);
    }

    #[test]
    fn loader_rejects_bad_input() {
        let cfg = Config::default();
        assert!(load_str("{}", &cfg).is_err());
        let wrong_format = r#"{"format":"other","kind":"table","order":1,"table":[0]}"#;
        assert!(matches!(load_str(wrong_format, &cfg), Err(Error::InvalidGroupFile(_))));
        // 2x2 all-zero table is not a Latin square
        let bad = r#"{"format":"centset-group-v1","kind":"table","order":2,"table":[0,0,0,0]}"#;
        assert!(load_str(bad, &cfg).is_err());
        // non-associative Latin square with identity at 0 needs order >= 5;
        // a broken identity row is caught immediately
        let bad_id = r#"{"format":"centset-group-v1","kind":"table","order":2,"table":[1,0,0,1]}"#;
        assert!(load_str(bad_id, &cfg).is_err());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn rle_roundtrip(values in proptest::collection::vec(0u16..2048, 0..400)) {
            let encoded = encode_table_rle(&values);
            let decoded = decode_table_rle(&encoded, values.len()).unwrap();
            proptest::prop_assert_eq!(decoded, values);
        }
    }
}
