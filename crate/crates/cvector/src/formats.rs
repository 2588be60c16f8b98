//! Text renderings and their parsers.
//!
//! Seeds print as right-aligned integer rows with a dashed line between the
//! top and bottom halves. Vectors print as `[a,b,c]`. Exchange graphs export
//! as JSON Lines records (sorted keys, 1-based labels) or as DOT.

use std::fmt::Write as _;
use std::str::FromStr;

use cvector_core::enumeration::{ExchangeGraph, VerifyReport};
use cvector_core::exceptional::CollectionVerdict;
use cvector_core::exchange::ExtendedSeed;
use cvector_core::linalg::{IntMatrix, Vector};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{input, Result};
use crate::input::integer_rows;

fn push_rows(out: &mut String, m: &IntMatrix, start: usize, end: usize, w: usize) {
    for r in start..end {
        let cells: Vec<String> = m.row(r).iter().map(|x| format!("{x:>w$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

pub fn render_seed(seed: &ExtendedSeed) -> String {
    render_extended(seed.matrix())
}

/// Renders a 2n×n matrix split after row n.
pub fn render_extended(m: &IntMatrix) -> String {
    let n = m.cols();
    let w = m.entry_width();
    let mut out = String::new();
    push_rows(&mut out, m, 0, n, w);
    out.push_str(&"-".repeat(n * w + n.saturating_sub(1)));
    out.push('\n');
    push_rows(&mut out, m, n, m.rows(), w);
    out
}

fn parse_row(line: &str) -> Result<Vector> {
    line.split_whitespace()
        .map(|t| BigInt::from_str(t).map_err(|_| input(format!("bad matrix entry {t:?}"))))
        .collect()
}

/// Inverse of [`render_extended`]: returns the top and bottom halves.
pub fn parse_seed(text: &str) -> Result<(IntMatrix, IntMatrix)> {
    let lines: Vec<&str> = text.lines().collect();
    let sep = lines
        .iter()
        .position(|l| !l.is_empty() && l.chars().all(|c| c == '-'))
        .ok_or_else(|| input("seed text has no separator line"))?;
    let half = |ls: &[&str]| -> Result<IntMatrix> {
        Ok(IntMatrix::from_rows(
            ls.iter().map(|l| parse_row(l)).collect::<Result<_>>()?,
        )?)
    };
    let top = half(&lines[..sep])?;
    let bottom = half(&lines[sep + 1..])?;
    if !top.is_square() || bottom.rows() != top.rows() || bottom.cols() != top.cols() {
        return Err(input("seed halves must both be n×n"));
    }
    Ok((top, bottom))
}

pub fn render_vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn parse_vector(text: &str) -> Result<Vector> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| input(format!("bad vector {text:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| BigInt::from_str(t.trim()).map_err(|_| input(format!("bad vector entry {t:?}"))))
        .collect()
}

/// One vector per line.
pub fn render_tuple(vs: &[Vector]) -> String {
    vs.iter().map(|v| render_vector(v) + "\n").collect()
}

pub fn parse_tuple(text: &str) -> Result<Vec<Vector>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_vector)
        .collect()
}

/// Vectors on one line, space separated.
pub fn render_inline(vs: &[Vector]) -> String {
    vs.iter()
        .map(|v| render_vector(v))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRecord {
    pub id: usize,
    pub depth: usize,
    /// c-vectors in label order.
    pub c_vectors: Vec<Vector>,
    pub b: IntMatrix,
}

/// Labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeRecord {
    pub from: usize,
    pub from_label: usize,
    pub to: usize,
    pub to_label: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRecords {
    pub rank: usize,
    pub complete: bool,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
}

impl GraphRecords {
    /// Vertex ids follow sorted c-set order.
    pub fn from_graph(g: &ExchangeGraph, rank: usize) -> Self {
        let ids: std::collections::BTreeMap<_, usize> = g
            .vertices()
            .keys()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        let vertices = g
            .vertices()
            .values()
            .enumerate()
            .map(|(id, v)| VertexRecord {
                id,
                depth: v.depth,
                c_vectors: v.tuple.entries().to_vec(),
                b: v.seed.top(),
            })
            .collect();
        let edges = g
            .edges()
            .into_iter()
            .map(|(u, k, v, k2)| EdgeRecord {
                from: ids[u],
                from_label: k + 1,
                to: ids[v],
                to_label: k2 + 1,
            })
            .collect();
        Self {
            rank,
            complete: g.is_complete(),
            vertices,
            edges,
        }
    }
}

fn int_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(i) => json!(i),
        Err(_) => Value::String(x.to_string()),
    }
}

fn list_value(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

fn rows_value(rows: &[Vector]) -> Value {
    Value::Array(rows.iter().map(|r| list_value(r)).collect())
}

/// JSON Lines: a header, then vertices, then edges.
pub fn render_records(g: &GraphRecords) -> String {
    let mut out = String::new();
    let header = json!({
        "kind": "header",
        "rank": g.rank,
        "complete": g.complete,
        "vertices": g.vertices.len(),
        "edges": g.edges.len(),
    });
    writeln!(out, "{header}").unwrap();
    for v in &g.vertices {
        let rec = json!({
            "kind": "vertex",
            "key": v.id,
            "depth": v.depth,
            "c_vectors": rows_value(&v.c_vectors),
            "b": rows_value(&v.b.to_rows()),
        });
        writeln!(out, "{rec}").unwrap();
    }
    for e in &g.edges {
        let rec = json!({
            "kind": "edge",
            "from": e.from,
            "from_label": e.from_label,
            "to": e.to,
            "to_label": e.to_label,
        });
        writeln!(out, "{rec}").unwrap();
    }
    out
}

fn field<'a>(rec: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    rec.get(name)
        .ok_or_else(|| input(format!("record has no {name:?} field")))
}

fn usize_field(rec: &Map<String, Value>, name: &str) -> Result<usize> {
    field(rec, name)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| input(format!("{name:?} must be a nonnegative integer")))
}

pub fn parse_records(text: &str) -> Result<GraphRecords> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: Value =
        serde_json::from_str(lines.next().ok_or_else(|| input("empty record stream"))?)?;
    let header = header
        .as_object()
        .ok_or_else(|| input("header must be an object"))?;
    if field(header, "kind")? != "header" {
        return Err(input("first record must be the header"));
    }
    let mut g = GraphRecords {
        rank: usize_field(header, "rank")?,
        complete: field(header, "complete")?
            .as_bool()
            .ok_or_else(|| input("\"complete\" must be a boolean"))?,
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    for line in lines {
        let rec: Value = serde_json::from_str(line)?;
        let rec = rec
            .as_object()
            .ok_or_else(|| input("record must be an object"))?;
        match field(rec, "kind")?.as_str() {
            Some("vertex") => g.vertices.push(VertexRecord {
                id: usize_field(rec, "key")?,
                depth: usize_field(rec, "depth")?,
                c_vectors: integer_rows(field(rec, "c_vectors")?)?,
                b: IntMatrix::from_rows(integer_rows(field(rec, "b")?)?)?,
            }),
            Some("edge") => g.edges.push(EdgeRecord {
                from: usize_field(rec, "from")?,
                from_label: usize_field(rec, "from_label")?,
                to: usize_field(rec, "to")?,
                to_label: usize_field(rec, "to_label")?,
            }),
            _ => return Err(input(format!("unknown record {line}"))),
        }
    }
    let expect = |name: &str, found: usize| -> Result<()> {
        let n = usize_field(header, name)?;
        if n == found {
            Ok(())
        } else {
            Err(input(format!("header promises {n} {name}, found {found}")))
        }
    };
    expect("vertices", g.vertices.len())?;
    expect("edges", g.edges.len())?;
    Ok(g)
}

pub fn render_dot(g: &GraphRecords) -> String {
    let mut out = String::from("graph exchange {\n");
    for v in &g.vertices {
        writeln!(
            out,
            "  v{} [label=\"{}\"];",
            v.id,
            render_inline(&v.c_vectors)
        )
        .unwrap();
    }
    for e in &g.edges {
        writeln!(
            out,
            "  v{} -- v{} [label=\"{}/{}\"];",
            e.from, e.to, e.from_label, e.to_label
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn render_graph_text(g: &GraphRecords) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{} vertices, {} edges, {}",
        g.vertices.len(),
        g.edges.len(),
        if g.complete {
            "complete"
        } else {
            "depth-bounded"
        }
    )
    .unwrap();
    for v in &g.vertices {
        writeln!(out, "v{}: {}", v.id, render_inline(&v.c_vectors)).unwrap();
    }
    for e in &g.edges {
        writeln!(
            out,
            "v{} --{}/{}-- v{}",
            e.from, e.from_label, e.to_label, e.to
        )
        .unwrap();
    }
    out
}

pub fn render_report(r: &VerifyReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "vertices: {} ({})",
        r.vertices,
        if r.complete {
            "complete"
        } else {
            "depth-bounded"
        }
    )
    .unwrap();
    for c in &r.checks {
        writeln!(out, "{}: {} passed, {} failed", c.name, c.passed, c.failed).unwrap();
        if let Some(f) = &c.first_failure {
            writeln!(out, "  first failure: {f}").unwrap();
        }
    }
    writeln!(out, "result: {}", if r.passed() { "pass" } else { "FAIL" }).unwrap();
    out
}

/// `matrix` is the extended matrix recovered for the input order; it is
/// printed only for accepted collections.
pub fn render_verdict(v: &CollectionVerdict, matrix: Option<&IntMatrix>) -> String {
    match v {
        CollectionVerdict::Accepted { order } => {
            let mut out = format!("true\norder: {}\n", render_inline(order));
            if let Some(m) = matrix {
                out.push_str("extended matrix:\n");
                out.push_str(&render_extended(m));
            }
            out
        }
        CollectionVerdict::Rejected { condition, witness } => format!(
            "false\nviolated condition: ({})\nwitness: {}\n",
            condition.number(),
            render_inline(witness)
        ),
    }
}
