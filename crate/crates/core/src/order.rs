//! Vertex orderings: bijections from labels to positions `1..=p`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderError {
    #[error("position {0} out of range 1..={1}")]
    PositionOutOfRange(usize, usize),
    #[error("position {0} assigned twice")]
    DuplicatePosition(usize),
    #[error("vertex `{0}` assigned twice")]
    DuplicateVertex(String),
    #[error("ordering does not match the graph's vertex set (near `{0}`)")]
    Mismatch(String),
}

/// A bijection σ from vertex labels to positions `1..=p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    position: BTreeMap<String, usize>,
    inverse: Vec<String>,
}

impl VertexOrdering {
    /// Builds an ordering from `(label, position)` pairs; positions must be
    /// exactly `1..=p` with no repeats.
    pub fn new<I>(pairs: I) -> Result<VertexOrdering, OrderError>
    where
        I: IntoIterator<Item = (String, usize)>,
    {
        let pairs: Vec<(String, usize)> = pairs.into_iter().collect();
        let p = pairs.len();
        let mut inverse = vec![String::new(); p];
        let mut position = BTreeMap::new();
        let mut taken = vec![false; p];
        for (label, pos) in pairs {
            if pos == 0 || pos > p {
                return Err(OrderError::PositionOutOfRange(pos, p));
            }
            if taken[pos - 1] {
                return Err(OrderError::DuplicatePosition(pos));
            }
            if position.insert(label.clone(), pos).is_some() {
                return Err(OrderError::DuplicateVertex(label));
            }
            taken[pos - 1] = true;
            inverse[pos - 1] = label;
        }
        Ok(VertexOrdering { position, inverse })
    }

    /// Convenience constructor from `&str` pairs.
    pub fn from_pairs(pairs: &[(&str, usize)]) -> Result<VertexOrdering, OrderError> {
        VertexOrdering::new(pairs.iter().map(|(l, p)| (l.to_string(), *p)))
    }

    /// Ordering that lists labels by ascending position: element `k` gets
    /// position `k + 1`.
    pub fn from_sequence<I>(labels: I) -> Result<VertexOrdering, OrderError>
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        VertexOrdering::new(
            labels
                .into_iter()
                .enumerate()
                .map(|(k, l)| (l.into(), k + 1)),
        )
    }

    pub fn len(&self) -> usize {
        self.inverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inverse.is_empty()
    }

    /// σ(label).
    pub fn position(&self, label: &str) -> Option<usize> {
        self.position.get(label).copied()
    }

    /// σ⁻¹(pos), for `pos` in `1..=p`.
    pub fn label_at(&self, pos: usize) -> Option<&str> {
        if pos == 0 {
            return None;
        }
        self.inverse.get(pos - 1).map(String::as_str)
    }

    /// Labels listed by ascending position.
    pub fn by_position(&self) -> &[String] {
        &self.inverse
    }

    /// `(label, position)` pairs in label order.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, usize)> {
        self.position.iter().map(|(l, p)| (l.as_str(), *p))
    }

    /// Checks that the ordering's domain is exactly the graph's vertex set.
    pub fn matches(&self, graph: &Graph) -> Result<(), OrderError> {
        if self.len() != graph.n() {
            return Err(OrderError::Mismatch(format!(
                "{} positions vs {} vertices",
                self.len(),
                graph.n()
            )));
        }
        for label in self.position.keys() {
            if !graph.contains(label) {
                return Err(OrderError::Mismatch(label.clone()));
            }
        }
        Ok(())
    }
}
