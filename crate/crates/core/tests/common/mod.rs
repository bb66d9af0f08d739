//! Shared fixtures and generators for the integration suites.
#![allow(dead_code)] // each test target uses a different slice of these

use cholpat::graph::Graph;
use cholpat::hasse::HasseForest;
use cholpat::matrix::SquareMatrix;
use cholpat::order::VertexOrdering;
use cholpat::rng::SplitMix64;
use cholpat::scalar::Rat;

/// 5-vertex homogeneous graph: w adjacent to everything, triangle
/// {u, u', v'} under w, pendant v. Maximal cliques {u, u', v', w}, {v, w}.
pub fn homog5() -> Graph {
    Graph::from_edges(
        &["u", "u'", "v'", "v", "w"],
        &[
            ("u", "u'"),
            ("u", "v'"),
            ("u", "w"),
            ("u'", "v'"),
            ("u'", "w"),
            ("v'", "w"),
            ("v", "w"),
        ],
    )
    .unwrap()
}

/// Path v - u - w - u': decomposable, not homogeneous.
pub fn path4() -> Graph {
    Graph::from_edges(
        &["v", "u", "w", "u'"],
        &[("v", "u"), ("u", "w"), ("w", "u'")],
    )
    .unwrap()
}

pub fn homog5_hasse_ordering() -> VertexOrdering {
    VertexOrdering::from_pairs(&[("w", 5), ("v", 4), ("v'", 3), ("u'", 2), ("u", 1)]).unwrap()
}

pub fn homog5_hasse_alt() -> VertexOrdering {
    VertexOrdering::from_pairs(&[("w", 5), ("v", 4), ("u'", 3), ("u", 2), ("v'", 1)]).unwrap()
}

pub fn homog5_pves_not_hasse() -> VertexOrdering {
    VertexOrdering::from_pairs(&[("v'", 5), ("w", 4), ("u'", 3), ("u", 2), ("v", 1)]).unwrap()
}

pub fn homog5_non_pves() -> VertexOrdering {
    VertexOrdering::from_pairs(&[("v", 5), ("u'", 4), ("v'", 3), ("w", 2), ("u", 1)]).unwrap()
}

pub fn path4_pves() -> VertexOrdering {
    VertexOrdering::from_pairs(&[("u'", 4), ("w", 3), ("u", 2), ("v", 1)]).unwrap()
}

/// Factor published for the Hasse scheme instance of [`homog5`].
pub fn golden_factor() -> SquareMatrix<Rat> {
    SquareMatrix::from_int_rows(&[
        &[1, 0, 0, 0, 0],
        &[1, 1, 0, 0, 0],
        &[1, 1, 1, 0, 0],
        &[0, 0, 0, 1, 0],
        &[1, 1, 1, 1, 1],
    ])
}

/// Its inverse.
pub fn golden_factor_inverse() -> SquareMatrix<Rat> {
    SquareMatrix::from_int_rows(&[
        &[1, 0, 0, 0, 0],
        &[-1, 1, 0, 0, 0],
        &[0, -1, 1, 0, 0],
        &[0, 0, 0, 1, 0],
        &[0, 0, -1, -1, 1],
    ])
}

/// Its reassembly `L·Lᵀ`.
pub fn golden_sigma() -> SquareMatrix<Rat> {
    SquareMatrix::from_int_rows(&[
        &[1, 1, 1, 0, 1],
        &[1, 2, 2, 0, 2],
        &[1, 2, 3, 0, 3],
        &[0, 0, 0, 1, 1],
        &[1, 2, 3, 1, 5],
    ])
}

/// Factor published for the perfect-elimination-but-not-Hasse instance.
pub fn golden_pves_factor() -> SquareMatrix<Rat> {
    SquareMatrix::from_int_rows(&[
        &[1, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0],
        &[0, 1, 1, 0, 0],
        &[1, 1, 1, 1, 0],
        &[0, 1, 1, 1, 1],
    ])
}

/// Inverse of [`golden_pves_factor`]; its (5, 1) entry sits on a forbidden
/// slot.
pub fn golden_pves_factor_inverse() -> SquareMatrix<Rat> {
    SquareMatrix::from_int_rows(&[
        &[1, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0],
        &[0, -1, 1, 0, 0],
        &[-1, 0, -1, 1, 0],
        &[1, 0, 0, -1, 1],
    ])
}

/// `L·Lᵀ` for [`golden_pves_factor`].
pub fn golden_pves_sigma() -> SquareMatrix<Rat> {
    SquareMatrix::from_int_rows(&[
        &[1, 0, 0, 1, 0],
        &[0, 1, 1, 1, 1],
        &[0, 1, 2, 2, 2],
        &[1, 1, 2, 4, 3],
        &[0, 1, 2, 3, 4],
    ])
}

/// Factor published for the non-perfect-elimination instance.
pub fn golden_non_pves_factor() -> SquareMatrix<Rat> {
    SquareMatrix::from_int_rows(&[
        &[1, 0, 0, 0, 0],
        &[1, 1, 0, 0, 0],
        &[1, 1, 1, 0, 0],
        &[1, 1, 1, 1, 0],
        &[0, 1, 0, 0, 1],
    ])
}

/// `L·Lᵀ` for [`golden_non_pves_factor`].
pub fn golden_non_pves_sigma() -> SquareMatrix<Rat> {
    SquareMatrix::from_int_rows(&[
        &[1, 1, 1, 1, 0],
        &[1, 2, 2, 2, 1],
        &[1, 2, 3, 3, 1],
        &[1, 2, 3, 4, 1],
        &[0, 1, 1, 1, 2],
    ])
}

/// SPD matrix published for the non-perfect-elimination determinant
/// instance: diagonal fives coupled through the low band.
pub fn golden_diag5_sigma() -> SquareMatrix<Rat> {
    SquareMatrix::from_int_rows(&[
        &[5, 1, 1, 1, 0],
        &[1, 5, 1, 1, 1],
        &[1, 1, 5, 1, 0],
        &[1, 1, 1, 5, 0],
        &[0, 1, 0, 0, 5],
    ])
}

/// Tridiagonal SPD matrix fitting the path pattern.
pub fn tridiagonal4() -> SquareMatrix<Rat> {
    SquareMatrix::from_int_rows(&[&[2, 1, 0, 0], &[1, 2, 1, 0], &[0, 1, 2, 1], &[0, 0, 1, 2]])
}

/// Erdős–Rényi-style graph: `n` vertices, each pair an edge with
/// probability `num/den`.
pub fn random_graph(seed: u64, max_n: usize, num: u64, den: u64) -> Graph {
    let mut rng = SplitMix64::derived(seed, 0x96);
    let n = 1 + rng.below(max_n as u64) as usize;
    let labels: Vec<String> = (0..n).map(|i| format!("x{i:02}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.chance(num, den) {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Graph::build(labels, edges).unwrap()
}

/// Uniform random ordering of the graph's vertices.
pub fn random_ordering(graph: &Graph, seed: u64) -> VertexOrdering {
    let mut rng = SplitMix64::derived(seed, 0x0d);
    let mut labels: Vec<String> = graph.vertices().to_vec();
    for i in (1..labels.len()).rev() {
        let j = rng.below((i + 1) as u64) as usize;
        labels.swap(i, j);
    }
    VertexOrdering::from_sequence(labels).unwrap()
}

/// Random chordal graph: each new vertex attaches to a random subset of an
/// existing clique, so the reverse insertion order is a perfect
/// elimination ordering.
pub fn random_chordal(seed: u64, max_n: usize) -> Graph {
    let mut rng = SplitMix64::derived(seed, 0xc4);
    let n = 2 + rng.below((max_n - 1) as u64) as usize;
    let labels: Vec<String> = (0..n).map(|i| format!("x{i:02}")).collect();
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    let mut edges: Vec<(String, String)> = Vec::new();
    for v in 1..n {
        let base = &cliques[rng.below(cliques.len() as u64) as usize];
        let mut attached: Vec<usize> = base.iter().copied().filter(|_| rng.chance(2, 3)).collect();
        if attached.is_empty() && !base.is_empty() && rng.chance(3, 4) {
            attached.push(base[0]);
        }
        for &u in &attached {
            edges.push((labels[u].clone(), labels[v].clone()));
        }
        let mut clique = attached;
        clique.push(v);
        cliques.push(clique);
    }
    Graph::build(labels, edges).unwrap()
}

/// Swaps an ancestor's position below one of its descendants, producing an
/// ordering that is no longer a Hasse scheme. Returns `None` when the
/// forest has no ancestor/descendant pair at all.
pub fn corrupt_hasse_ordering(
    forest: &HasseForest,
    ord: &VertexOrdering,
    seed: u64,
) -> Option<VertexOrdering> {
    let mut rng = SplitMix64::derived(seed, 0xbad);
    let mut pairs = Vec::new();
    for desc in 0..forest.class_count() {
        for anc in forest.strict_ancestors(desc) {
            pairs.push((anc, desc));
        }
    }
    if pairs.is_empty() {
        return None;
    }
    let (anc, desc) = pairs[rng.below(pairs.len() as u64) as usize];
    let a = forest.class(anc).iter().next().unwrap().clone();
    let d = forest.class(desc).iter().next().unwrap().clone();
    let pa = ord.position(&a).unwrap();
    let pd = ord.position(&d).unwrap();
    let swapped = ord
        .pairs()
        .map(|(label, pos)| {
            let new_pos = if pos == pa {
                pd
            } else if pos == pd {
                pa
            } else {
                pos
            };
            (label.to_string(), new_pos)
        })
        .collect::<Vec<_>>();
    Some(VertexOrdering::new(swapped).unwrap())
}
