//! JSON serialization: matrices, graphs, orderings, verification reports
//! and witnesses. Keys come out sorted (maps are tree-backed), rationals
//! use the canonical `p` / `p/q` string form, so output is byte-identical
//! for identical inputs.

use serde_json::{json, Map, Value};

use super::{ParseError, ParsedMatrix};
use crate::graph::{Graph, VertexSet};
use crate::matrix::SquareMatrix;
use crate::order::VertexOrdering;
use crate::scalar::{rat_from_str, rat_to_string, Rat, Scalar};
use crate::verify::{FailureDetail, Statement, VerificationReport, Witness, WitnessEvidence};

pub fn rational_matrix_to_json(m: &SquareMatrix<Rat>) -> Value {
    let rows: Vec<Value> = (1..=m.n())
        .map(|i| {
            Value::Array(
                (1..=m.n())
                    .map(|j| Value::String(rat_to_string(m.at(i, j))))
                    .collect(),
            )
        })
        .collect();
    json!({ "kind": "rational", "n": m.n(), "rows": rows })
}

pub fn float_matrix_to_json(m: &SquareMatrix<f64>) -> Value {
    let rows: Vec<Value> = (1..=m.n())
        .map(|i| Value::Array((1..=m.n()).map(|j| json!(m.at(i, j))).collect()))
        .collect();
    json!({ "kind": "float", "n": m.n(), "rows": rows })
}

pub fn matrix_to_json(m: &ParsedMatrix) -> Value {
    match m {
        ParsedMatrix::Rational(m) => rational_matrix_to_json(m),
        ParsedMatrix::Float(m) => float_matrix_to_json(m),
    }
}

/// Parses `{"kind":"rational"|"float","n":N,"rows":[[...],...]}`. Rational
/// entries are strings `p/q` (or `p`) or plain integers; float entries are
/// numbers.
pub fn parse_matrix(text: &str) -> Result<ParsedMatrix, ParseError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| ParseError::new(0, format!("bad JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| ParseError::new(0, "expected a JSON object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| ParseError::new(0, "missing `kind`"))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| ParseError::new(0, "missing `n`"))? as usize;
    let rows = obj
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::new(0, "missing `rows`"))?;
    if rows.len() != n {
        return Err(ParseError::new(
            0,
            format!("expected {n} rows, got {}", rows.len()),
        ));
    }
    match kind {
        "rational" => {
            let mut m = SquareMatrix::<Rat>::zero(n);
            for (i, row) in rows.iter().enumerate() {
                let row = row
                    .as_array()
                    .ok_or_else(|| ParseError::new(0, format!("row {} is not an array", i + 1)))?;
                if row.len() != n {
                    return Err(ParseError::new(
                        0,
                        format!("row {} has wrong length", i + 1),
                    ));
                }
                for (j, cell) in row.iter().enumerate() {
                    let v = parse_rational_cell(cell).ok_or_else(|| {
                        ParseError::new(0, format!("bad rational at ({}, {})", i + 1, j + 1))
                    })?;
                    m.set(i + 1, j + 1, v);
                }
            }
            Ok(ParsedMatrix::Rational(m))
        }
        "float" => {
            let mut m = SquareMatrix::<f64>::zero(n);
            for (i, row) in rows.iter().enumerate() {
                let row = row
                    .as_array()
                    .ok_or_else(|| ParseError::new(0, format!("row {} is not an array", i + 1)))?;
                if row.len() != n {
                    return Err(ParseError::new(
                        0,
                        format!("row {} has wrong length", i + 1),
                    ));
                }
                for (j, cell) in row.iter().enumerate() {
                    let v = cell.as_f64().ok_or_else(|| {
                        ParseError::new(0, format!("bad float at ({}, {})", i + 1, j + 1))
                    })?;
                    m.set(i + 1, j + 1, v);
                }
            }
            Ok(ParsedMatrix::Float(m))
        }
        other => Err(ParseError::new(0, format!("unknown kind `{other}`"))),
    }
}

fn parse_rational_cell(cell: &Value) -> Option<Rat> {
    match cell {
        Value::String(s) => rat_from_str(s),
        Value::Number(n) => n.as_i64().map(Rat::from_int),
        _ => None,
    }
}

pub fn graph_to_json(graph: &Graph) -> Value {
    let edges: Vec<Value> = graph
        .edges()
        .into_iter()
        .map(|(a, b)| json!([a, b]))
        .collect();
    json!({ "edges": edges, "vertices": graph.vertices() })
}

pub fn ordering_to_json(ord: &VertexOrdering) -> Value {
    let mut map = Map::new();
    for (label, pos) in ord.pairs() {
        map.insert(label.to_string(), json!(pos));
    }
    Value::Object(map)
}

fn vertex_set_to_json(set: &VertexSet) -> Value {
    Value::Array(set.iter().map(|v| Value::String(v.clone())).collect())
}

pub fn failure_detail_to_json(detail: &FailureDetail) -> Value {
    match detail {
        FailureDetail::Entry { i, j, value } => json!({ "i": i, "j": j, "value": value }),
        FailureDetail::NotPositiveDefinite { pivot_index } => {
            json!({ "pivot": pivot_index })
        }
        FailureDetail::NotUnitLower { i, j, value } => {
            json!({ "i": i, "j": j, "not-unit-lower": true, "value": value })
        }
        FailureDetail::CliqueMismatch { clique, lhs, rhs } => {
            json!({ "clique": vertex_set_to_json(clique), "lhs": lhs, "rhs": rhs })
        }
    }
}

/// Report of a randomized campaign.
pub fn report_to_json(graph: &Graph, ord: &VertexOrdering, report: &VerificationReport) -> Value {
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "entry": failure_detail_to_json(&f.detail),
                "seed": f.seed,
                "statement": f.statement.id(),
            })
        })
        .collect();
    json!({
        "failures": failures,
        "graph": graph_to_json(graph),
        "ordering": ordering_to_json(ord),
        "trials": report.trials,
        "verdict": if report.passed() { "pass" } else { "fail" },
    })
}

/// Report of a one-shot check against a supplied matrix; failures carry a
/// null seed.
pub fn one_shot_report_to_json(
    graph: &Graph,
    ord: &VertexOrdering,
    failures: &[(Statement, FailureDetail)],
) -> Value {
    let entries: Vec<Value> = failures
        .iter()
        .map(|(statement, detail)| {
            json!({
                "entry": failure_detail_to_json(detail),
                "seed": Value::Null,
                "statement": statement.id(),
            })
        })
        .collect();
    json!({
        "failures": entries,
        "graph": graph_to_json(graph),
        "ordering": ordering_to_json(ord),
        "trials": 1,
        "verdict": if failures.is_empty() { "pass" } else { "fail" },
    })
}

pub fn witness_to_json(witness: &Witness) -> Value {
    let evidence = match &witness.evidence {
        WitnessEvidence::Entry { i, j, value } => {
            json!({ "i": i, "j": j, "value": rat_to_string(value) })
        }
        WitnessEvidence::Determinant {
            clique,
            positions,
            lhs,
            rhs,
            qualifying,
        } => json!({
            "clique": vertex_set_to_json(clique),
            "lhs": rat_to_string(lhs),
            "positions": positions,
            "qualifying": qualifying.iter().map(vertex_set_to_json).collect::<Vec<_>>(),
            "rhs": rat_to_string(rhs),
        }),
    };
    json!({
        "evidence": evidence,
        "kind": witness.kind.id(),
        "matrix": rational_matrix_to_json(&witness.matrix),
        "triple": { "u": witness.triple.u, "v": witness.triple.v, "w": witness.triple.w },
    })
}
