//! Undirected simple graphs on labeled vertices.
//!
//! Vertices are opaque strings held in lexicographic order, and every
//! set-valued result is emitted in that canonical order so downstream
//! output is reproducible. Adjacency is a dense boolean matrix; everything
//! here runs at desk scale where O(1) edge queries beat sparse bookkeeping.

use std::collections::BTreeSet;

use thiserror::Error;

/// A set of vertex labels, canonically ordered.
pub type VertexSet = BTreeSet<String>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge endpoint `{0}` is not a listed vertex")]
    UnknownEndpoint(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

/// Immutable undirected simple graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<bool>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from a vertex list and an edge list.
    ///
    /// Labels must be distinct, endpoints must be listed, self-loops are
    /// rejected. Duplicate edges collapse. Vertices are stored sorted.
    pub fn build<L, E>(vertices: L, edges: E) -> Result<Graph, GraphError>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        E: IntoIterator,
        E::Item: Into<(String, String)>,
    {
        let mut labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        labels.sort();
        for pair in labels.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::DuplicateVertex(pair[0].clone()));
            }
        }
        let n = labels.len();
        let mut adj = vec![false; n * n];
        let index = |label: &str| labels.binary_search_by(|l| l.as_str().cmp(label)).ok();
        for edge in edges {
            let (a, b) = edge.into();
            let i = index(&a).ok_or(GraphError::UnknownEndpoint(a.clone()))?;
            let j = index(&b).ok_or(GraphError::UnknownEndpoint(b.clone()))?;
            if i == j {
                return Err(GraphError::SelfLoop(a));
            }
            adj[i * n + j] = true;
            adj[j * n + i] = true;
        }
        Ok(Graph { labels, adj })
    }

    /// Builds a graph from string-slice pairs; convenience over [`Graph::build`].
    pub fn from_edges<'a>(
        vertices: &[&'a str],
        edges: &[(&'a str, &'a str)],
    ) -> Result<Graph, GraphError> {
        Graph::build(
            vertices.iter().map(|s| s.to_string()),
            edges
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect::<Vec<_>>(),
        )
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Vertex labels in canonical (lexicographic) order.
    pub fn vertices(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.labels.iter().cloned().collect()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.labels[idx]
    }

    pub fn has_edge_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n() + j]
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.has_edge_idx(i, j),
            _ => false,
        }
    }

    pub fn degree_idx(&self, i: usize) -> usize {
        (0..self.n()).filter(|&j| self.has_edge_idx(i, j)).count()
    }

    pub fn neighbors_idx(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.has_edge_idx(i, j)).collect()
    }

    /// Edges as label pairs, each pair sorted, list sorted.
    pub fn edges(&self) -> Vec<(String, String)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.has_edge_idx(i, j) {
                    out.push((self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let n = self.n();
        (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge_idx(i, j))
            .count()
    }

    /// `{v} ∪ {u : (u,v) ∈ E}`.
    pub fn closed_neighborhood(&self, v: &str) -> Result<VertexSet, GraphError> {
        let i = self
            .index_of(v)
            .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
        let mut out: VertexSet = self
            .neighbors_idx(i)
            .into_iter()
            .map(|j| self.labels[j].clone())
            .collect();
        out.insert(v.to_string());
        Ok(out)
    }

    pub(crate) fn closed_neighborhood_mask(&self, i: usize) -> Vec<bool> {
        let n = self.n();
        let mut mask: Vec<bool> = (0..n).map(|j| self.has_edge_idx(i, j)).collect();
        mask[i] = true;
        mask
    }

    /// Subgraph induced by `s`: vertex set `s`, edges `E ∩ (s × s)`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        let mut idx = Vec::with_capacity(s.len());
        for label in s {
            idx.push(
                self.index_of(label)
                    .ok_or_else(|| GraphError::UnknownVertex(label.clone()))?,
            );
        }
        let labels: Vec<String> = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let m = labels.len();
        let mut adj = vec![false; m * m];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if self.has_edge_idx(i, j) {
                    adj[a * m + b] = true;
                }
            }
        }
        Ok(Graph { labels, adj })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| ((i + 1)..n).all(|j| self.has_edge_idx(i, j)))
    }

    /// All inclusion-maximal cliques, each canonically sorted, list sorted.
    ///
    /// Bron–Kerbosch with pivoting; the recursion order does not matter
    /// because the output is sorted before returning.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut r = Vec::new();
        let p: Vec<usize> = (0..n).collect();
        let x = Vec::new();
        self.bron_kerbosch(&mut r, p, x, &mut found);
        let mut cliques: Vec<VertexSet> = found
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.labels[i].clone()).collect())
            .collect();
        cliques.sort();
        cliques
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            found.push(r.clone());
            return;
        }
        // Pivot: vertex of P ∪ X with the most neighbors in P, smallest index on ties.
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| {
                let cnt = p.iter().filter(|&&v| self.has_edge_idx(u, v)).count();
                (cnt, std::cmp::Reverse(u))
            })
            .expect("p or x nonempty");
        let candidates: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&v| !self.has_edge_idx(pivot, v))
            .collect();
        let mut p = p;
        let mut x = x;
        for v in candidates {
            r.push(v);
            let next_p: Vec<usize> = p
                .iter()
                .copied()
                .filter(|&u| self.has_edge_idx(v, u))
                .collect();
            let next_x: Vec<usize> = x
                .iter()
                .copied()
                .filter(|&u| self.has_edge_idx(v, u))
                .collect();
            self.bron_kerbosch(r, next_p, next_x, found);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }

    /// Partition of the vertices into connected components, ordered by their
    /// smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = VertexSet::new();
            seen[start] = true;
            while let Some(i) = stack.pop() {
                comp.insert(self.labels[i].clone());
                for j in self.neighbors_idx(i) {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}
