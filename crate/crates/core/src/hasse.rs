//! Hasse forests of homogeneous graphs and random homogeneous generation.
//!
//! Twin vertices (equal closed neighborhoods) collapse into classes; the
//! classes of a connected homogeneous graph form a rooted tree under strict
//! neighborhood inclusion, one tree per connected component. No class ever
//! has exactly one child: a lone child would share its parent's closed
//! neighborhood and merge into it. Conversely, any rooted forest with
//! positive integer weights and no single-child node expands back into a
//! homogeneous graph, which is what the random generator exploits.

use std::collections::BTreeMap;

use crate::graph::{Graph, VertexSet};
use crate::rng::SplitMix64;
use crate::structure::{is_homogeneous, StructureError};

/// Rooted forest over the twin classes of a homogeneous graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseForest {
    classes: Vec<VertexSet>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
}

impl HasseForest {
    fn from_parts(classes: Vec<VertexSet>, parent: Vec<Option<usize>>) -> HasseForest {
        let mut children = vec![Vec::new(); classes.len()];
        let mut roots = Vec::new();
        for (idx, p) in parent.iter().enumerate() {
            match p {
                Some(p) => children[*p].push(idx),
                None => roots.push(idx),
            }
        }
        for c in &children {
            debug_assert_ne!(c.len(), 1, "no class has exactly one child");
        }
        HasseForest {
            classes,
            parent,
            children,
            roots,
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Members of class `idx`, canonically ordered.
    pub fn class(&self, idx: usize) -> &VertexSet {
        &self.classes[idx]
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// Class weight: the number of twins it contains.
    pub fn weight(&self, idx: usize) -> usize {
        self.classes[idx].len()
    }

    pub fn parent(&self, idx: usize) -> Option<usize> {
        self.parent[idx]
    }

    pub fn children(&self, idx: usize) -> &[usize] {
        &self.children[idx]
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn class_of(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(label))
    }

    /// Strict ancestors of `idx`, nearest first.
    pub fn strict_ancestors(&self, idx: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.parent[idx];
        while let Some(p) = cur {
            out.push(p);
            cur = self.parent[p];
        }
        out
    }

    pub fn is_strict_ancestor(&self, anc: usize, desc: usize) -> bool {
        self.strict_ancestors(desc).contains(&anc)
    }

    /// Total vertex count across all classes.
    pub fn vertex_count(&self) -> usize {
        self.classes.iter().map(VertexSet::len).sum()
    }
}

/// Groups vertices into twin classes and wires the covering relation.
/// Errors when the graph is not homogeneous.
pub fn build_hasse_forest(graph: &Graph) -> Result<HasseForest, StructureError> {
    if !is_homogeneous(graph) {
        return Err(StructureError::NotHomogeneous);
    }
    let n = graph.n();
    // Twin classes keyed by closed neighborhood.
    let mut groups: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        groups
            .entry(graph.closed_neighborhood_mask(i))
            .or_default()
            .push(i);
    }
    let mut raw: Vec<(Vec<bool>, Vec<usize>)> = groups.into_iter().collect();
    // Canonical class order: by smallest member.
    raw.sort_by_key(|(_, members)| members[0]);
    let masks: Vec<Vec<bool>> = raw.iter().map(|(m, _)| m.clone()).collect();
    let classes: Vec<VertexSet> = raw
        .iter()
        .map(|(_, members)| {
            members
                .iter()
                .map(|&i| graph.label(i).to_string())
                .collect()
        })
        .collect();

    let k = classes.len();
    let strictly_contains = |a: usize, b: usize| -> bool {
        // class a's neighborhood strictly contains class b's
        a != b && masks[b].iter().zip(&masks[a]).all(|(&x, &y)| !x || y) && masks[a] != masks[b]
    };
    let mut parent = vec![None; k];
    for (b, parent_slot) in parent.iter_mut().enumerate() {
        let ancestors: Vec<usize> = (0..k).filter(|&a| strictly_contains(a, b)).collect();
        // The covering ancestor is the one not above any other ancestor.
        let covers: Vec<usize> = ancestors
            .iter()
            .copied()
            .filter(|&a| !ancestors.iter().any(|&c| c != a && strictly_contains(a, c)))
            .collect();
        debug_assert!(covers.len() <= 1, "ancestors of a class form a chain");
        *parent_slot = covers.first().copied();
    }
    Ok(HasseForest::from_parts(classes, parent))
}

/// Weighted tree sampled by [`random_homogeneous_graph`].
struct WeightedNode {
    weight: usize,
    children: Vec<WeightedNode>,
}

fn sample_tree(budget: usize, rng: &mut SplitMix64) -> WeightedNode {
    debug_assert!(budget >= 1);
    let weight = 1 + rng.below(budget as u64) as usize;
    let rem = budget - weight;
    // A remainder below 2 cannot split into two or more positive parts.
    if rem < 2 || rng.chance(1, 4) {
        return WeightedNode {
            weight: budget,
            children: Vec::new(),
        };
    }
    let max_children = rem.min(4);
    let k = 2 + rng.below((max_children - 1) as u64) as usize;
    // Random composition of `rem` into k positive parts.
    let mut cuts = std::collections::BTreeSet::new();
    while cuts.len() < k - 1 {
        cuts.insert(1 + rng.below((rem - 1) as u64) as usize);
    }
    let mut bounds: Vec<usize> = Vec::with_capacity(k + 1);
    bounds.push(0);
    bounds.extend(cuts);
    bounds.push(rem);
    let children = bounds
        .windows(2)
        .map(|w| sample_tree(w[1] - w[0], rng))
        .collect();
    WeightedNode { weight, children }
}

/// Samples a connected homogeneous graph with at most `max_vertices`
/// vertices, together with the Hasse tree it was expanded from.
///
/// Deterministic for a given seed. Vertices in a class are mutually
/// adjacent, and every vertex is adjacent to all vertices of its strict
/// ancestor classes.
pub fn random_homogeneous_graph(seed: u64, max_vertices: usize) -> (Graph, HasseForest) {
    assert!(max_vertices >= 1);
    let mut rng = SplitMix64::derived(seed, 0x4853);
    let total = 1 + rng.below(max_vertices as u64) as usize;
    let tree = sample_tree(total, &mut rng);

    let width = total.to_string().len();
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut parent: Vec<Option<usize>> = Vec::new();
    let mut next_label = 0usize;
    // Depth-first pre-order expansion: labels ascend along the traversal, so
    // class order matches the canonical smallest-member order used by
    // `build_hasse_forest`.
    let mut stack: Vec<(WeightedNode, Option<usize>)> = vec![(tree, None)];
    while let Some((node, par)) = stack.pop() {
        let idx = classes.len();
        let members: VertexSet = (0..node.weight)
            .map(|_| {
                let label = format!("v{:0width$}", next_label, width = width);
                next_label += 1;
                label
            })
            .collect();
        classes.push(members);
        parent.push(par);
        // Reverse keeps pre-order left to right.
        for child in node.children.into_iter().rev() {
            stack.push((child, Some(idx)));
        }
    }
    debug_assert_eq!(next_label, total);
    let forest = HasseForest::from_parts(classes, parent);

    let labels: Vec<String> = forest
        .classes
        .iter()
        .flat_map(|c| c.iter().cloned())
        .collect();
    let mut edges: Vec<(String, String)> = Vec::new();
    for idx in 0..forest.class_count() {
        let members: Vec<&String> = forest.class(idx).iter().collect();
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                edges.push((members[i].clone(), members[j].clone()));
            }
        }
        for anc in forest.strict_ancestors(idx) {
            for a in forest.class(anc) {
                for m in &members {
                    edges.push((a.clone(), (*m).clone()));
                }
            }
        }
    }
    let graph = Graph::build(labels, edges).expect("expansion is a valid simple graph");
    debug_assert!(is_homogeneous(&graph));
    (graph, forest)
}
