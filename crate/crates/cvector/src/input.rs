//! Matrix and vector documents.
//!
//! A matrix document is a JSON object `{"B": [[...]], "d": [...]}` with `d`
//! optional. A vectors document is a JSON array of integer arrays, or an
//! object holding one under `"vectors"`. Integers may be written as JSON
//! numbers or as decimal strings.

use std::io::Read;
use std::str::FromStr;

use cvector_core::exchange::ExchangeMatrix;
use cvector_core::linalg::{IntMatrix, Vector};
use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{input, CliError, Result};

/// Where a document comes from: `-` is stdin, text starting with `{` or `[`
/// is inline JSON, anything else is a path.
pub fn read_source(arg: &str, stdin: &mut dyn Read) -> Result<String> {
    let trimmed = arg.trim_start();
    if arg == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        Ok(text)
    } else if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|source| CliError::Io {
            path: arg.into(),
            source,
        })
    }
}

pub fn integer(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(i.into())
            } else if let Some(u) = n.as_u64() {
                Ok(u.into())
            } else {
                Err(input(format!("not an integer: {n}")))
            }
        }
        Value::String(s) => {
            BigInt::from_str(s.trim()).map_err(|_| input(format!("not an integer: {s:?}")))
        }
        other => Err(input(format!("not an integer: {other}"))),
    }
}

pub fn integer_list(v: &Value) -> Result<Vector> {
    v.as_array()
        .ok_or_else(|| input(format!("expected an array of integers, found {v}")))?
        .iter()
        .map(integer)
        .collect()
}

pub fn integer_rows(v: &Value) -> Result<Vec<Vector>> {
    v.as_array()
        .ok_or_else(|| input(format!("expected an array of rows, found {v}")))?
        .iter()
        .map(integer_list)
        .collect()
}

pub fn parse_matrix(text: &str) -> Result<ExchangeMatrix> {
    let doc: Value = serde_json::from_str(text)?;
    let obj = doc
        .as_object()
        .ok_or_else(|| input("matrix document must be a JSON object"))?;
    let rows = integer_rows(
        obj.get("B")
            .ok_or_else(|| input("matrix document has no \"B\" field"))?,
    )?;
    if rows.is_empty() {
        return Err(input("\"B\" must have at least one row"));
    }
    let b = IntMatrix::from_rows(rows)?;
    Ok(match obj.get("d") {
        None | Some(Value::Null) => ExchangeMatrix::validate(b)?,
        Some(d) => ExchangeMatrix::with_symmetrizer(b, integer_list(d)?)?,
    })
}

pub fn parse_vectors(text: &str, rank: usize) -> Result<Vec<Vector>> {
    let doc: Value = serde_json::from_str(text)?;
    let list = match &doc {
        Value::Object(obj) => obj
            .get("vectors")
            .ok_or_else(|| input("vectors document has no \"vectors\" field"))?,
        other => other,
    };
    let vectors = integer_rows(list)?;
    for v in &vectors {
        if v.len() != rank {
            return Err(input(format!(
                "vector of length {} in rank {rank}",
                v.len()
            )));
        }
    }
    Ok(vectors)
}

/// Comma-separated 1-based labels; the empty string is the empty word.
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| input(format!("bad label {s:?} in word")))
        })
        .collect()
}
