//! Text formats.
//!
//! `lines`: one `0`/`1` string per vector, leftmost character = position 1,
//! newline terminated, no header.
//!
//! `records`: one JSON object per line carrying provenance:
//! `{"r":0,"generator":"maxmin","params":{...},"label":"seed x'","bits":"0000"}`.
//!
//! Readers accept either form, line by line.

use serde::{Deserialize, Serialize};

use crate::collection::{Collection, ParamRecord, Provenance};
use crate::error::{Error, Result};
use crate::permmap::PermutationMap;
use crate::vector::BinaryVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Lines,
    Records,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub r: usize,
    pub generator: String,
    #[serde(default)]
    pub params: ParamRecord,
    #[serde(default)]
    pub label: String,
    pub bits: BinaryVector,
}

pub fn write_collection(c: &Collection, format: Format) -> String {
    let mut out = String::new();
    for (r, e) in c.entries().iter().enumerate() {
        match format {
            Format::Lines => out.push_str(&e.vector.to_string()),
            Format::Records => {
                let rec = Record {
                    r,
                    generator: e.provenance.generator.clone(),
                    params: e.provenance.params.clone(),
                    label: e.provenance.label.clone(),
                    bits: e.vector.clone(),
                };
                out.push_str(&serde_json::to_string(&rec).expect("records serialize"));
            }
        }
        out.push('\n');
    }
    out
}

fn parse_line(line: &str, lineno: usize) -> Result<(BinaryVector, Provenance)> {
    let at = |e: Error| Error::Parse {
        line: lineno,
        message: e.to_string(),
    };
    if line.starts_with('{') {
        let rec: Record = serde_json::from_str(line).map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        Ok((rec.bits, Provenance::new(rec.generator, rec.params, rec.label)))
    } else {
        let v = line.parse::<BinaryVector>().map_err(at)?;
        Ok((v, Provenance::new("input", ParamRecord::new(), format!("line={lineno}"))))
    }
}

/// Reads a collection; blank lines are skipped and every vector must share
/// the length of the first.
pub fn parse_collection(text: &str) -> Result<Collection> {
    let mut out: Option<Collection> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let (v, prov) = parse_line(line, lineno)?;
        let c = out.get_or_insert_with(|| Collection::new(v.len()));
        if v.len() != c.n() {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected {} components, found {}", c.n(), v.len()),
            });
        }
        c.push(v, prov)?;
    }
    Ok(out.unwrap_or_else(|| Collection::new(0)))
}

fn single_line(text: &str, what: &str) -> Result<(usize, String)> {
    let mut found = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if found.is_some() {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("{what} file must hold a single row"),
            });
        }
        found = Some((i + 1, line.to_string()));
    }
    found.ok_or_else(|| Error::Parse {
        line: 1,
        message: format!("{what} file is empty"),
    })
}

/// A seed file: one `lines` row.
pub fn parse_seed(text: &str) -> Result<BinaryVector> {
    let (lineno, line) = single_line(text, "seed")?;
    Ok(parse_line(&line, lineno)?.0)
}

/// A permutation file: one row of space-separated 1-based indices.
pub fn parse_permutation(text: &str) -> Result<PermutationMap> {
    let (lineno, line) = single_line(text, "permutation")?;
    line.parse().map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse { line: lineno, message },
        other => Error::Parse {
            line: lineno,
            message: other.to_string(),
        },
    })
}
