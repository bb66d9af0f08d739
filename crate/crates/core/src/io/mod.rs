//! File formats: edge lists, orderings, Matrix Market, matrix JSON,
//! report/witness JSON, and DOT export of Hasse forests.

pub mod dot;
pub mod edgelist;
pub mod json;
pub mod mtx;

use thiserror::Error;

use crate::matrix::SquareMatrix;
use crate::order::VertexOrdering;
use crate::scalar::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// A matrix read from disk, tagged by its scalar kind.
#[derive(Clone, Debug, PartialEq)]
pub enum ParsedMatrix {
    Rational(SquareMatrix<Rat>),
    Float(SquareMatrix<f64>),
}

impl ParsedMatrix {
    pub fn n(&self) -> usize {
        match self {
            ParsedMatrix::Rational(m) => m.n(),
            ParsedMatrix::Float(m) => m.n(),
        }
    }
}

/// Loads a graph from edge-list text or Matrix Market pattern input,
/// sniffing the banner line.
pub fn parse_graph_auto(text: &str) -> Result<crate::graph::Graph, ParseError> {
    if looks_like_matrix_market(text) {
        mtx::parse_graph(text)
    } else {
        edgelist::parse(text)
    }
}

/// Loads a matrix from matrix JSON or Matrix Market real input.
pub fn parse_matrix_auto(text: &str) -> Result<ParsedMatrix, ParseError> {
    if looks_like_matrix_market(text) {
        Ok(ParsedMatrix::Float(mtx::parse_real_matrix(text)?))
    } else {
        json::parse_matrix(text)
    }
}

fn looks_like_matrix_market(text: &str) -> bool {
    text.trim_start().starts_with("%%MatrixMarket")
}

/// Parses `label position` lines into an ordering.
pub fn parse_ordering(text: &str) -> Result<VertexOrdering, ParseError> {
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let label = tokens.next().unwrap();
        let pos_tok = tokens
            .next()
            .ok_or_else(|| ParseError::new(idx + 1, "expected `label position`"))?;
        if tokens.next().is_some() {
            return Err(ParseError::new(idx + 1, "expected exactly two fields"));
        }
        let pos: usize = pos_tok
            .parse()
            .map_err(|_| ParseError::new(idx + 1, format!("bad position `{pos_tok}`")))?;
        pairs.push((label.to_string(), pos));
    }
    VertexOrdering::new(pairs).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Writes an ordering as `label position` lines, ascending by position.
pub fn write_ordering(ord: &VertexOrdering) -> String {
    let mut out = String::new();
    for pos in 1..=ord.len() {
        out.push_str(ord.label_at(pos).unwrap());
        out.push(' ');
        out.push_str(&pos.to_string());
        out.push('\n');
    }
    out
}
