//! Browser bindings for the interactive demo page.
//!
//! Three entry points, all JSON-in-a-string so the page needs no glue
//! types: [`analyze_graph`] classifies a graph and returns its cliques and
//! Hasse forest, [`pattern_report`] samples a patterned SPD matrix and
//! reports every membership and clique check (plus witnesses when the
//! hypotheses fail), and [`random_graph`] generates a seeded homogeneous
//! graph to explore.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use cholpat::cholesky::{invert_unit_lower_substitution, ldl_decompose};
use cholpat::graph::Graph;
use cholpat::io::{self, json as fmt};
use cholpat::matrix::SquareMatrix;
use cholpat::order::VertexOrdering;
use cholpat::pattern::{sample_spd, PatternVerdict, SparsityPattern};
use cholpat::scalar::{rat_to_string, Rat};
use cholpat::structure::{
    find_hasse_scheme, find_perfect_elimination_ordering, homogeneity_witness, is_hasse_scheme,
    is_homogeneous,
};
use cholpat::verify::{
    clique_determinant_check, construct_determinant_witness, construct_factor_witness,
};
use cholpat::{build_hasse_forest, random_homogeneous_graph, HasseForest};

fn err_json(message: impl std::fmt::Display) -> String {
    json!({ "ok": false, "error": message.to_string() }).to_string()
}

fn forest_json(forest: &HasseForest) -> Value {
    let classes: Vec<Value> = (0..forest.class_count())
        .map(|idx| {
            json!({
                "members": forest.class(idx).iter().collect::<Vec<_>>(),
                "parent": forest.parent(idx),
                "weight": forest.weight(idx),
            })
        })
        .collect();
    json!({ "classes": classes, "dot": io::dot::hasse_to_dot(forest) })
}

fn analysis_json(graph: &Graph) -> Value {
    let homogeneous = is_homogeneous(graph);
    let peo = find_perfect_elimination_ordering(graph);
    let classification = if homogeneous {
        "homogeneous"
    } else if peo.is_some() {
        "decomposable"
    } else {
        "neither"
    };
    let cliques: Vec<Value> = graph
        .maximal_cliques()
        .iter()
        .map(|c| json!(c.iter().collect::<Vec<_>>()))
        .collect();
    json!({
        "classification": classification,
        "cliques": cliques,
        "edges": fmt::graph_to_json(graph)["edges"],
        "hasse": build_hasse_forest(graph).ok().map(|f| forest_json(&f)),
        "htbes": find_hasse_scheme(graph).ok().map(|o| fmt::ordering_to_json(&o)),
        "offending": homogeneity_witness(graph).map(|q| q.iter().cloned().collect::<Vec<_>>()),
        "ok": true,
        "pves": peo.map(|o| fmt::ordering_to_json(&o)),
        "vertices": graph.vertices(),
    })
}

/// Classifies an edge-list graph and returns cliques, certificates and the
/// Hasse forest when one exists.
#[wasm_bindgen]
pub fn analyze_graph(edges_text: &str) -> String {
    match io::parse_graph_auto(edges_text) {
        Ok(graph) => analysis_json(&graph).to_string(),
        Err(e) => err_json(e),
    }
}

fn rational_rows(m: &SquareMatrix<Rat>) -> Value {
    Value::Array(
        (1..=m.n())
            .map(|i| {
                Value::Array(
                    (1..=m.n())
                        .map(|j| Value::String(rat_to_string(m.at(i, j))))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn verdict_json(verdict: &PatternVerdict<Rat>) -> Value {
    match verdict {
        PatternVerdict::Member => json!({ "member": true }),
        PatternVerdict::ForbiddenNonzero { i, j, value } => json!({
            "member": false, "reason": "forbidden-nonzero",
            "i": i, "j": j, "value": rat_to_string(value),
        }),
        PatternVerdict::NotPositiveDefinite { pivot_index } => json!({
            "member": false, "reason": "not-positive-definite", "pivot": pivot_index,
        }),
        PatternVerdict::NotUnitLowerTriangular { i, j, value } => json!({
            "member": false, "reason": "not-unit-lower", "i": i, "j": j,
            "value": rat_to_string(value),
        }),
    }
}

/// Samples a patterned SPD matrix for the graph and ordering, decomposes
/// it, and reports the pattern grid, all membership verdicts, the clique
/// determinant table, and counterexample witnesses when the hypotheses
/// fail. An empty ordering falls back to the best available scheme.
#[wasm_bindgen]
pub fn pattern_report(edges_text: &str, ordering_text: &str, seed: u32) -> String {
    let graph = match io::parse_graph_auto(edges_text) {
        Ok(g) => g,
        Err(e) => return err_json(e),
    };
    let ord = if ordering_text.trim().is_empty() {
        default_ordering(&graph)
    } else {
        match io::parse_ordering(ordering_text) {
            Ok(o) => o,
            Err(e) => return err_json(e),
        }
    };
    if let Err(e) = ord.matches(&graph) {
        return err_json(e);
    }
    let pattern = SparsityPattern::from_graph(&graph, &ord).expect("ordering matches");
    let n = graph.n();

    let sigma = sample_spd(&pattern, seed as u64);
    let factors = match ldl_decompose(&sigma) {
        Ok(f) => f,
        Err(e) => return err_json(e),
    };
    let inverse_factor = match invert_unit_lower_substitution(&factors.l) {
        Ok(m) => m,
        Err(e) => return err_json(e),
    };

    let sigma_verdict = pattern.admits_symmetric(&sigma).expect("sampled symmetric");
    let factor_verdict = pattern.admits_unit_lower(&factors.l);
    let inverse_verdict = pattern.admits_unit_lower(&inverse_factor);

    let cliques = match clique_determinant_check(&sigma, &graph, &ord) {
        Ok(checks) => checks
            .iter()
            .map(|c| {
                json!({
                    "equal": c.equal,
                    "lhs": rat_to_string(&c.lhs),
                    "members": c.clique.iter().collect::<Vec<_>>(),
                    "positions": c.positions,
                    "rhs": rat_to_string(&c.rhs),
                })
            })
            .collect::<Vec<_>>(),
        Err(e) => return err_json(e),
    };

    let hypotheses_hold = is_homogeneous(&graph) && is_hasse_scheme(&graph, &ord);
    let witnesses = if hypotheses_hold {
        Value::Null
    } else {
        let factor = construct_factor_witness(&graph, &ord)
            .ok()
            .flatten()
            .map(|w| fmt::witness_to_json(&w));
        let determinant = construct_determinant_witness(&graph, &ord)
            .ok()
            .flatten()
            .map(|w| fmt::witness_to_json(&w));
        json!({ "determinant": determinant, "factor": factor })
    };

    let allowed: Vec<Vec<bool>> = (1..=n)
        .map(|i| (1..=n).map(|j| pattern.allows(i, j)).collect())
        .collect();
    json!({
        "cliques": cliques,
        "factor": rational_rows(&factors.l),
        "hypotheses_hold": hypotheses_hold,
        "inverse_factor": rational_rows(&inverse_factor),
        "memberships": {
            "factor": verdict_json(&factor_verdict),
            "inverse_factor": verdict_json(&inverse_verdict),
            "sigma": verdict_json(&sigma_verdict),
        },
        "n": n,
        "ok": true,
        "ordering": fmt::ordering_to_json(&ord),
        "pattern": allowed,
        "pivots": factors.d.iter().map(rat_to_string).collect::<Vec<_>>(),
        "seed": seed,
        "sigma": rational_rows(&sigma),
        "witnesses": witnesses,
    })
    .to_string()
}

fn default_ordering(graph: &Graph) -> VertexOrdering {
    find_hasse_scheme(graph)
        .ok()
        .or_else(|| find_perfect_elimination_ordering(graph))
        .unwrap_or_else(|| {
            VertexOrdering::from_sequence(graph.vertices().to_vec()).expect("vertex labels unique")
        })
}

/// Generates a seeded connected homogeneous graph (at most `max_vertices`
/// vertices) and returns the same payload as [`analyze_graph`] plus the
/// edge-list text.
#[wasm_bindgen]
pub fn random_graph(seed: u32, max_vertices: u32) -> String {
    let cap = max_vertices.clamp(1, 26) as usize;
    let (graph, _) = random_homogeneous_graph(seed as u64, cap);
    let mut payload = analysis_json(&graph);
    payload["edges_text"] = Value::String(io::edgelist::write(&graph));
    payload.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    const HOMOG5: &str = "u u'\nu v'\nu w\nu' v'\nu' w\nv' w\nv w\n";
    const PATH4: &str = "v u\nu w\nw u'\n";

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn analyze_classifies() {
        let v = parse(analyze_graph(HOMOG5));
        assert_eq!(v["ok"], json!(true));
        assert_eq!(v["classification"], json!("homogeneous"));
        assert!(v["hasse"]["dot"].as_str().unwrap().contains("digraph"));

        let v = parse(analyze_graph(PATH4));
        assert_eq!(v["classification"], json!("decomposable"));
        assert_eq!(v["offending"].as_array().unwrap().len(), 4);

        let v = parse(analyze_graph("a b c\n"));
        assert_eq!(v["ok"], json!(false));
    }

    #[test]
    fn pattern_report_round_trips() {
        let v = parse(pattern_report(HOMOG5, "", 7));
        assert_eq!(v["ok"], json!(true));
        assert_eq!(v["hypotheses_hold"], json!(true));
        assert_eq!(v["memberships"]["sigma"]["member"], json!(true));
        assert_eq!(v["memberships"]["factor"]["member"], json!(true));
        assert_eq!(v["memberships"]["inverse_factor"]["member"], json!(true));
        for clique in v["cliques"].as_array().unwrap() {
            assert_eq!(clique["equal"], json!(true));
        }

        let v = parse(pattern_report(PATH4, "v 1\nu 2\nw 3\nu' 4\n", 7));
        assert_eq!(v["hypotheses_hold"], json!(false));
        assert!(v["witnesses"]["determinant"].is_object());
        assert!(v["witnesses"]["factor"].is_object());
        assert!(v["cliques"]
            .as_array()
            .unwrap()
            .iter()
            .any(|c| c["equal"] == json!(false)));
    }

    #[test]
    fn random_graph_is_homogeneous() {
        for seed in 0..10u32 {
            let v = parse(random_graph(seed, 12));
            assert_eq!(v["classification"], json!("homogeneous"), "seed {seed}");
            let edges_text = v["edges_text"].as_str().unwrap();
            let v2 = parse(analyze_graph(edges_text));
            assert_eq!(v2["classification"], json!("homogeneous"));
        }
    }
}
