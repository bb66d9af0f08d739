//! Recognition of decomposable and homogeneous graphs, elimination scheme
//! validation, and conflict-triple search.
//!
//! Terminology used throughout:
//!
//! * A *perfect elimination ordering* (PEO) positions the vertices `1..=p`
//!   so that for all positions `i < j < k`, whenever the vertices at `j` and
//!   `k` are both adjacent to the vertex at `i`, they are adjacent to each
//!   other. A graph admits one iff it is decomposable (chordal).
//! * A graph is *homogeneous* (trivially perfect) when the closed
//!   neighborhoods of every pair of adjacent vertices are nested;
//!   equivalently when no 4 vertices induce a cycle or a path.
//! * A *Hasse scheme* is an ordering that places every vertex above all
//!   members of strictly descendant twin classes in the Hasse forest.
//! * A *conflict triple* `(u, v, w)` has edges `u-v` and `v-w`, non-edge
//!   `u-w`, and `σ(v) < σ(u) < σ(w)` or `σ(u) < σ(v) < σ(w)`. One exists
//!   exactly when the graph is not homogeneous or the ordering is not a
//!   Hasse scheme, and it seeds every counterexample construction in
//!   [`crate::verify`].

use std::cmp::Reverse;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::hasse::build_hasse_forest;
use crate::order::{OrderError, VertexOrdering};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph is not homogeneous")]
    NotHomogeneous,
    #[error(transparent)]
    Ordering(#[from] OrderError),
}

/// First triple of positions `i < j < k` violating the PEO condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeoViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Checks the perfect-elimination condition; returns the lexicographically
/// first violating position triple when the ordering fails.
pub fn check_perfect_elimination(
    graph: &Graph,
    ord: &VertexOrdering,
) -> Result<Option<PeoViolation>, StructureError> {
    ord.matches(graph)?;
    let p = graph.n();
    let at = |pos: usize| graph.index_of(ord.label_at(pos).unwrap()).unwrap();
    for i in 1..=p {
        let vi = at(i);
        for j in (i + 1)..=p {
            let vj = at(j);
            if !graph.has_edge_idx(vj, vi) {
                continue;
            }
            for k in (j + 1)..=p {
                let vk = at(k);
                if graph.has_edge_idx(vk, vi) && !graph.has_edge_idx(vk, vj) {
                    return Ok(Some(PeoViolation { i, j, k }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_perfect_elimination_ordering(graph: &Graph, ord: &VertexOrdering) -> bool {
    matches!(check_perfect_elimination(graph, ord), Ok(None))
}

/// Maximum-cardinality search. Returns a perfect elimination ordering when
/// the graph is decomposable (vertices eliminated first get the smallest
/// positions), `None` otherwise. Ties break on the lexicographically
/// smallest label, so the result is deterministic.
pub fn find_perfect_elimination_ordering(graph: &Graph) -> Option<VertexOrdering> {
    let n = graph.n();
    let mut numbered = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut inverse = vec![String::new(); n];
    for pos in (1..=n).rev() {
        let pick = (0..n)
            .filter(|&i| !numbered[i])
            .max_by_key(|&i| (weight[i], Reverse(i)))
            .expect("an unnumbered vertex remains");
        numbered[pick] = true;
        inverse[pos - 1] = graph.label(pick).to_string();
        for j in 0..n {
            if !numbered[j] && graph.has_edge_idx(pick, j) {
                weight[j] += 1;
            }
        }
    }
    let ord = VertexOrdering::from_sequence(inverse).expect("bijection by construction");
    match check_perfect_elimination(graph, &ord) {
        Ok(None) => Some(ord),
        _ => None,
    }
}

/// Nested-neighborhood test: true iff for every edge `(u, v)` one closed
/// neighborhood contains the other.
pub fn is_homogeneous(graph: &Graph) -> bool {
    let n = graph.n();
    let masks: Vec<Vec<bool>> = (0..n).map(|i| graph.closed_neighborhood_mask(i)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if !graph.has_edge_idx(i, j) {
                continue;
            }
            let ij = subset(&masks[i], &masks[j]);
            let ji = subset(&masks[j], &masks[i]);
            if !ij && !ji {
                return false;
            }
        }
    }
    true
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

/// First 4-subset (in label order) inducing a cycle or path, if any.
///
/// This scan is the constructive counterpart of [`is_homogeneous`]: it is
/// slower but names the offending vertices.
pub fn homogeneity_witness(graph: &Graph) -> Option<VertexSet> {
    let n = graph.n();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    if induces_c4_or_p4(graph, [a, b, c, d]) {
                        return Some(
                            [a, b, c, d]
                                .iter()
                                .map(|&i| graph.label(i).to_string())
                                .collect(),
                        );
                    }
                }
            }
        }
    }
    None
}

fn induces_c4_or_p4(graph: &Graph, quad: [usize; 4]) -> bool {
    let mut deg = [0usize; 4];
    let mut edges = 0;
    for x in 0..4 {
        for y in (x + 1)..4 {
            if graph.has_edge_idx(quad[x], quad[y]) {
                deg[x] += 1;
                deg[y] += 1;
                edges += 1;
            }
        }
    }
    match edges {
        // 4 edges with all degrees 2 is a 4-cycle.
        4 => deg.iter().all(|&d| d == 2),
        // 3 edges with max degree 2 is a path or a triangle plus an isolated
        // vertex; the latter has a degree-0 vertex.
        3 => deg.iter().all(|&d| (1..=2).contains(&d)),
        _ => false,
    }
}

/// Ancestor/descendant pair breaking the Hasse scheme condition: the
/// ancestor's position is smaller than the descendant's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseViolation {
    pub ancestor: String,
    pub descendant: String,
}

/// Checks that every strict ancestor in the Hasse forest sits above its
/// descendants in the ordering. Errors when the graph is not homogeneous.
pub fn check_hasse_scheme(
    graph: &Graph,
    ord: &VertexOrdering,
) -> Result<Option<HasseViolation>, StructureError> {
    ord.matches(graph)?;
    let forest = build_hasse_forest(graph)?;
    for b in 0..forest.class_count() {
        for a in forest.strict_ancestors(b) {
            for anc in forest.class(a) {
                for desc in forest.class(b) {
                    if ord.position(anc) < ord.position(desc) {
                        return Ok(Some(HasseViolation {
                            ancestor: anc.clone(),
                            descendant: desc.clone(),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn is_hasse_scheme(graph: &Graph, ord: &VertexOrdering) -> bool {
    matches!(check_hasse_scheme(graph, ord), Ok(None))
}

/// Builds a Hasse scheme by walking the forest top-down: the next class (by
/// smallest member, among classes whose ancestors are all placed) takes the
/// highest remaining block of positions, members ascending within the block.
pub fn find_hasse_scheme(graph: &Graph) -> Result<VertexOrdering, StructureError> {
    let forest = build_hasse_forest(graph)?;
    let mut available: Vec<usize> = forest.roots().to_vec();
    let mut next_top = graph.n();
    let mut pairs: Vec<(String, usize)> = Vec::with_capacity(graph.n());
    while let Some(slot) = available.iter().enumerate().min_by_key(|(_, &c)| c) {
        let (slot_idx, &cls) = slot;
        available.swap_remove(slot_idx);
        let members = forest.class(cls);
        let base = next_top - members.len();
        for (off, label) in members.iter().enumerate() {
            pairs.push((label.clone(), base + off + 1));
        }
        next_top = base;
        available.extend_from_slice(forest.children(cls));
    }
    let ord = VertexOrdering::new(pairs).expect("blocks tile 1..=n");
    debug_assert!(is_hasse_scheme(graph, &ord));
    Ok(ord)
}

/// Conflict triple: edges `u-v`, `v-w`, non-edge `u-w`, and
/// `σ(v) < σ(u) < σ(w)` or `σ(u) < σ(v) < σ(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictTriple {
    pub u: String,
    pub v: String,
    pub w: String,
}

impl ConflictTriple {
    /// Validates the defining constraints against a graph and ordering.
    pub fn holds(&self, graph: &Graph, ord: &VertexOrdering) -> bool {
        let (su, sv, sw) = match (
            ord.position(&self.u),
            ord.position(&self.v),
            ord.position(&self.w),
        ) {
            (Some(a), Some(b), Some(c)) => (a, b, c),
            _ => return false,
        };
        graph.has_edge(&self.u, &self.v)
            && graph.has_edge(&self.v, &self.w)
            && !graph.has_edge(&self.u, &self.w)
            && ((sv < su && su < sw) || (su < sv && sv < sw))
    }
}

/// Finds a conflict triple whenever the graph is not homogeneous or the
/// ordering is not a Hasse scheme; returns `None` when both hypotheses hold.
///
/// The non-homogeneous branch extracts the triple from an induced 4-cycle or
/// 4-path; the homogeneous branch derives it from an ancestor placed below a
/// descendant. When both failure modes could apply the non-homogeneity
/// branch wins (Hasse schemes are undefined for non-homogeneous graphs).
pub fn find_conflict_triple(
    graph: &Graph,
    ord: &VertexOrdering,
) -> Result<Option<ConflictTriple>, StructureError> {
    ord.matches(graph)?;
    if !is_homogeneous(graph) {
        let quad = homogeneity_witness(graph).expect("nesting failed, so a witness exists");
        return Ok(Some(triple_from_quad(graph, ord, &quad)));
    }
    match check_hasse_scheme(graph, ord)? {
        None => Ok(None),
        Some(violation) => {
            // Ancestor b below descendant a: pick the smallest c adjacent to
            // b but not to a; one exists because the closed neighborhood of
            // a is strictly contained in that of b.
            let b = violation.ancestor;
            let a = violation.descendant;
            let c = graph
                .vertices()
                .iter()
                .find(|c| {
                    c.as_str() != a
                        && c.as_str() != b
                        && graph.has_edge(&b, c)
                        && !graph.has_edge(&a, c)
                })
                .expect("strict neighborhood inclusion leaves a spare neighbor")
                .clone();
            let (sa, sb, sc) = (
                ord.position(&a).unwrap(),
                ord.position(&b).unwrap(),
                ord.position(&c).unwrap(),
            );
            debug_assert!(sb < sa);
            let triple = if sb < sa && sa < sc {
                ConflictTriple { u: a, v: b, w: c }
            } else {
                // σ(b) < σ(c) < σ(a) or σ(c) < σ(b) < σ(a).
                ConflictTriple { u: c, v: b, w: a }
            };
            debug_assert!(triple.holds(graph, ord));
            Ok(Some(triple))
        }
    }
}

/// Applies the case analysis for an induced 4-cycle or 4-path to produce a
/// conflict triple from the 4-subset `quad`.
fn triple_from_quad(graph: &Graph, ord: &VertexOrdering, quad: &VertexSet) -> ConflictTriple {
    let mut members: Vec<&str> = quad.iter().map(String::as_str).collect();
    // Rank members by position: r[0] holds the smallest σ.
    members.sort_by_key(|m| ord.position(m).unwrap());
    let r = members;
    let deg = |x: &str| r.iter().filter(|y| graph.has_edge(x, y)).count();
    let nbrs =
        |x: &str| -> Vec<&str> { r.iter().copied().filter(|y| graph.has_edge(x, y)).collect() };
    let sorted_pair = |v: &str| -> (String, String) {
        let mut ns = nbrs(v);
        ns.sort_by_key(|m| ord.position(m).unwrap());
        (ns[0].to_string(), ns[1].to_string())
    };

    let edges = r
        .iter()
        .enumerate()
        .flat_map(|(i, x)| r[i + 1..].iter().map(move |y| (*x, *y)))
        .filter(|(x, y)| graph.has_edge(x, y))
        .count();
    let triple = if edges == 4 {
        // 4-cycle: the two neighbors of the lowest vertex are non-adjacent.
        let v = r[0];
        let (u, w) = sorted_pair(v);
        ConflictTriple {
            u,
            v: v.to_string(),
            w,
        }
    } else if deg(r[0]) == 2 {
        // 4-path, interior lowest vertex.
        let v = r[0];
        let (u, w) = sorted_pair(v);
        ConflictTriple {
            u,
            v: v.to_string(),
            w,
        }
    } else if deg(r[1]) == 2 {
        // 4-path, second-lowest vertex interior.
        let v = r[1];
        let ns = nbrs(v);
        if ns.contains(&r[0]) {
            let w = ns.iter().find(|x| **x != r[0]).unwrap();
            ConflictTriple {
                u: r[0].to_string(),
                v: v.to_string(),
                w: w.to_string(),
            }
        } else {
            let (u, w) = sorted_pair(v);
            ConflictTriple {
                u,
                v: v.to_string(),
                w,
            }
        }
    } else {
        // 4-path with both low vertices at the endpoints: the third vertex is
        // interior and adjacent to the fourth.
        let v = r[2];
        let u = nbrs(v).into_iter().find(|x| *x != r[3]).unwrap();
        ConflictTriple {
            u: u.to_string(),
            v: v.to_string(),
            w: r[3].to_string(),
        }
    };
    debug_assert!(triple.holds(graph, ord));
    triple
}
