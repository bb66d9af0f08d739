//! Acceptance suite: every criterion runs at its stated tolerance and
//! prints one `acceptance N (...): pass` line (visible under
//! `cargo test --test acceptance -- --nocapture`).

mod common;

use std::time::{Duration, Instant};

use cholpat::cholesky::{
    cauchy_binet_expand, determinant, invert_unit_lower_pathsum, invert_unit_lower_substitution,
    ldl_decompose, LdlFactors, ENUMERATION_CAP,
};
use cholpat::graph::Graph;
use cholpat::matrix::{RectMatrix, SquareMatrix};
use cholpat::pattern::{
    sample_positive_diagonal, sample_spd, sample_unit_lower, PatternVerdict, SparsityPattern,
};
use cholpat::rng::SplitMix64;
use cholpat::scalar::{rat, ratio, Rat, Scalar};
use cholpat::structure::{find_hasse_scheme, find_perfect_elimination_ordering, is_homogeneous};
use cholpat::verify::{
    clique_determinant_check, construct_determinant_witness, construct_factor_witness,
    verify_equivalence, Witness, WitnessEvidence, WitnessKind,
};
use cholpat::{random_homogeneous_graph, VertexOrdering};

use common::*;

#[test]
fn criterion_1_golden_identity_route() {
    let started = Instant::now();
    let g = homog5();
    let ord = homog5_hasse_ordering();
    let pattern = SparsityPattern::from_graph(&g, &ord).unwrap();

    let l = golden_factor();
    let linv = invert_unit_lower_substitution(&l).unwrap();
    assert_eq!(
        linv,
        golden_factor_inverse(),
        "inverse reproduces the published matrix"
    );

    let sigma = LdlFactors {
        l: l.clone(),
        d: vec![rat(1); 5],
    }
    .reassemble();
    assert_eq!(
        sigma,
        golden_sigma(),
        "reassembly reproduces the published matrix"
    );

    assert!(pattern.admits_unit_lower(&l).is_member());
    assert!(pattern.admits_unit_lower(&linv).is_member());
    assert!(pattern.admits_symmetric(&sigma).unwrap().is_member());

    // Decomposing the published matrix recovers the published factor with
    // unit pivots.
    let factors = ldl_decompose(&sigma).unwrap();
    assert_eq!(factors.l, l);
    assert_eq!(factors.d, vec![rat(1); 5]);

    assert!(started.elapsed() < Duration::from_secs(1));
    println!("acceptance 1 (golden identity route, exact): pass");
}

#[test]
fn criterion_2_golden_negatives() {
    // Perfect elimination ordering that is not a Hasse scheme: the factor
    // fits but its inverse leaks onto the forbidden slot (5, 1).
    let g = homog5();
    let pves_pattern = SparsityPattern::from_graph(&g, &homog5_pves_not_hasse()).unwrap();
    let l = golden_pves_factor();
    assert!(pves_pattern.admits_unit_lower(&l).is_member());
    let sigma = LdlFactors {
        l: l.clone(),
        d: vec![rat(1); 5],
    }
    .reassemble();
    assert_eq!(sigma, golden_pves_sigma());
    assert!(pves_pattern.admits_symmetric(&sigma).unwrap().is_member());
    let linv = invert_unit_lower_substitution(&l).unwrap();
    assert_eq!(linv, golden_pves_factor_inverse());
    match pves_pattern.admits_unit_lower(&linv) {
        PatternVerdict::ForbiddenNonzero { i, j, value } => {
            assert_eq!((i, j), (5, 1));
            assert_eq!(value, rat(1));
        }
        other => panic!("expected a forbidden nonzero, got {other:?}"),
    }

    // Ordering that is not a perfect elimination ordering: the factor fits
    // but the reassembly leaks. First forbidden nonzero in row-major order
    // is (5, 3); slot (5, 2) maps to the edge v-w and stays permitted.
    let non_pves_pattern = SparsityPattern::from_graph(&g, &homog5_non_pves()).unwrap();
    let l = golden_non_pves_factor();
    assert!(non_pves_pattern.admits_unit_lower(&l).is_member());
    let sigma = LdlFactors {
        l,
        d: vec![rat(1); 5],
    }
    .reassemble();
    assert_eq!(sigma, golden_non_pves_sigma());
    assert!(
        non_pves_pattern.allows(5, 2),
        "v-w is an edge, so (5,2) is permitted"
    );
    match non_pves_pattern.admits_symmetric(&sigma).unwrap() {
        PatternVerdict::ForbiddenNonzero { i, j, value } => {
            assert_eq!((i, j), (5, 3));
            assert_eq!(value, rat(1));
        }
        other => panic!("expected a forbidden nonzero, got {other:?}"),
    }
    println!("acceptance 2 (golden negatives, exact): pass");
}

#[test]
fn criterion_3_golden_clique_determinants() {
    let started = Instant::now();
    let g = homog5();

    // Hasse scheme instance: both cliques give 1 = 1.
    let checks = clique_determinant_check(&golden_sigma(), &g, &homog5_hasse_alt()).unwrap();
    assert_eq!(checks.len(), 2);
    for check in &checks {
        assert_eq!(check.lhs, rat(1));
        assert_eq!(check.rhs, rat(1));
        assert!(check.equal);
    }

    // Perfect elimination but not Hasse: the pendant clique gives 2 vs 1.
    let checks =
        clique_determinant_check(&golden_pves_sigma(), &g, &homog5_pves_not_hasse()).unwrap();
    let pendant = checks.iter().find(|c| c.clique.contains("v")).unwrap();
    assert_eq!(pendant.lhs, rat(2));
    assert_eq!(pendant.rhs, rat(1));
    assert!(!pendant.equal);

    // Not a perfect elimination ordering: the big clique splits 5/2448 vs
    // 1/512, matching the published decimals to 1e-6.
    let checks = clique_determinant_check(&golden_diag5_sigma(), &g, &homog5_non_pves()).unwrap();
    let big = checks.iter().find(|c| c.clique.len() == 4).unwrap();
    assert_eq!(big.lhs, ratio(5, 2448));
    assert_eq!(big.rhs, ratio(1, 512));
    assert!((big.lhs.to_f64() - 0.002042484).abs() < 1e-6);
    assert!((big.rhs.to_f64() - 0.001953125).abs() < 1e-6);
    assert!(!big.equal);

    // Path with tridiagonal matrix: exactly 3/5 vs 1/3 on the clique {u, v}.
    let checks = clique_determinant_check(&tridiagonal4(), &path4(), &path4_pves()).unwrap();
    let uv = checks.iter().find(|c| c.clique.contains("v")).unwrap();
    assert_eq!(uv.lhs, ratio(3, 5));
    assert_eq!(uv.rhs, ratio(1, 3));
    assert!(!uv.equal);

    assert!(started.elapsed() < Duration::from_secs(1));
    println!("acceptance 3 (golden clique determinants, exact): pass");
}

#[test]
fn criterion_4_determinant_witness_numerics() {
    let mut case_low_v = 0usize;
    let mut case_low_u = 0usize;
    let mut seed = 0u64;
    let mut inspected = 0usize;
    while inspected < 120 {
        seed += 1;
        let g = random_graph(seed, 9, 1, 2);
        let ord = random_ordering(&g, seed);
        let witness = match construct_determinant_witness(&g, &ord).unwrap() {
            Some(w) => w,
            None => continue,
        };
        inspected += 1;
        let factors = ldl_decompose(&witness.matrix).unwrap();
        let su = ord.position(&witness.triple.u).unwrap();
        let sv = ord.position(&witness.triple.v).unwrap();
        let sw = ord.position(&witness.triple.w).unwrap();
        if sv < su {
            case_low_v += 1;
            assert_eq!(factors.d[sv - 1], rat(5));
            assert_eq!(factors.d[su - 1], ratio(4, 5));
            assert_eq!(factors.d[sw - 1], ratio(3, 4));
        } else {
            case_low_u += 1;
            assert_eq!(factors.d[su - 1], rat(1));
            assert_eq!(factors.d[sv - 1], rat(4));
            assert_eq!(factors.d[sw - 1], ratio(3, 4));
        }
        for (k, d) in factors.d.iter().enumerate() {
            if ![su, sv, sw].contains(&(k + 1)) {
                assert_eq!(d, &rat(1));
            }
        }
        match &witness.evidence {
            WitnessEvidence::Determinant { lhs, rhs, .. } => {
                assert_eq!(lhs, &ratio(1, 3));
                assert_eq!(rhs, &ratio(1, 4));
            }
            other => panic!("unexpected evidence {other:?}"),
        }
    }
    assert!(
        case_low_v >= 20,
        "both orderings of the triple must occur: {case_low_v}"
    );
    assert!(
        case_low_u >= 20,
        "both orderings of the triple must occur: {case_low_u}"
    );
    println!("acceptance 4 (witness pivots (5,4/5,3/4)/(1,4,3/4), pair (1/3,1/4)): pass");
}

#[test]
fn criterion_5_forward_property_suite() {
    let started = Instant::now();
    let mut total_trials = 0u64;
    for seed in 0..125u64 {
        let (graph, _) = random_homogeneous_graph(seed, 12);
        let ord = find_hasse_scheme(&graph).unwrap();
        let report = verify_equivalence(&graph, &ord, 4, seed.wrapping_mul(1000)).unwrap();
        assert!(
            report.passed(),
            "seed {seed}: unexpected failures {:?}",
            report.failures
        );
        total_trials += report.trials;
    }
    assert_eq!(total_trials, 500);
    assert!(started.elapsed() < Duration::from_secs(60));
    println!("acceptance 5 (forward suite, 500 trials, zero failures): pass");
}

fn replay_factor_witness(graph: &Graph, ord: &VertexOrdering, witness: &Witness) {
    let pattern = SparsityPattern::from_graph(graph, ord).unwrap();
    assert!(witness.triple.holds(graph, ord));
    assert!(pattern.admits_unit_lower(&witness.matrix).is_member());
    let (i, j, value) = match &witness.evidence {
        WitnessEvidence::Entry { i, j, value } => (*i, *j, value.clone()),
        other => panic!("unexpected evidence {other:?}"),
    };
    assert!(
        !pattern.allows(i, j),
        "evidence entry must sit on a forbidden slot"
    );
    assert_eq!(value, rat(1));
    match witness.kind {
        WitnessKind::DecompositionViolation => {
            let n = witness.matrix.n();
            let sigma = LdlFactors {
                l: witness.matrix.clone(),
                d: vec![rat(1); n],
            }
            .reassemble();
            assert_eq!(sigma.at(i, j), &value);
            assert!(!pattern.admits_symmetric(&sigma).unwrap().is_member());
        }
        WitnessKind::InverseViolation => {
            let inv = invert_unit_lower_substitution(&witness.matrix).unwrap();
            assert_eq!(inv.at(i, j), &value);
            assert!(!pattern.admits_unit_lower(&inv).is_member());
        }
        WitnessKind::DeterminantViolation => panic!("factor witness expected"),
    }
}

fn replay_determinant_witness(graph: &Graph, ord: &VertexOrdering, witness: &Witness) {
    let pattern = SparsityPattern::from_graph(graph, ord).unwrap();
    assert!(witness.triple.holds(graph, ord));
    assert_eq!(witness.kind, WitnessKind::DeterminantViolation);
    assert!(pattern
        .admits_symmetric(&witness.matrix)
        .unwrap()
        .is_member());
    let (clique, positions, lhs, rhs) = match &witness.evidence {
        WitnessEvidence::Determinant {
            clique,
            positions,
            lhs,
            rhs,
            ..
        } => (clique.clone(), positions.clone(), lhs.clone(), rhs.clone()),
        other => panic!("unexpected evidence {other:?}"),
    };
    assert!(!clique.contains(&witness.triple.w));
    assert_eq!(lhs, ratio(1, 3));
    assert_eq!(rhs, ratio(1, 4));
    // Recompute both sides from scratch.
    let factors = ldl_decompose(&witness.matrix).unwrap();
    let inverse = cholpat::verify::spd_inverse_from_factors(&factors).unwrap();
    let recomputed_lhs = cholpat::cholesky::submatrix_determinant(&inverse, &positions).unwrap();
    let mut recomputed_rhs = rat(1);
    for &p in &positions {
        recomputed_rhs /= factors.d[p - 1].clone();
    }
    assert_eq!(recomputed_lhs, lhs);
    assert_eq!(recomputed_rhs, rhs);
    assert_ne!(lhs, rhs);
}

#[test]
fn criterion_6_converse_property_suite() {
    let started = Instant::now();

    // (a) graphs that are not homogeneous, arbitrary orderings.
    let mut trials_a = 0usize;
    let mut seed = 0u64;
    while trials_a < 100 {
        seed += 1;
        let g = random_graph(seed, 8, 1, 2);
        if is_homogeneous(&g) {
            continue;
        }
        let ord = random_ordering(&g, seed);
        let fw = construct_factor_witness(&g, &ord)
            .unwrap()
            .expect("witness must exist");
        replay_factor_witness(&g, &ord, &fw);
        let dw = construct_determinant_witness(&g, &ord)
            .unwrap()
            .expect("witness must exist");
        replay_determinant_witness(&g, &ord, &dw);
        trials_a += 1;
    }

    // (b) homogeneous graphs with deliberately corrupted orderings.
    let mut trials_b = 0usize;
    let mut seed = 0u64;
    while trials_b < 100 {
        seed += 1;
        let (g, forest) = random_homogeneous_graph(seed, 10);
        let ord = find_hasse_scheme(&g).unwrap();
        let corrupted = match corrupt_hasse_ordering(&forest, &ord, seed) {
            Some(c) => c,
            None => continue, // single-class graph, nothing to corrupt
        };
        let fw = construct_factor_witness(&g, &corrupted)
            .unwrap()
            .expect("witness must exist");
        replay_factor_witness(&g, &corrupted, &fw);
        let dw = construct_determinant_witness(&g, &corrupted)
            .unwrap()
            .expect("witness must exist");
        replay_determinant_witness(&g, &corrupted, &dw);
        trials_b += 1;
    }

    assert_eq!(trials_a + trials_b, 200);
    assert!(started.elapsed() < Duration::from_secs(60));
    println!("acceptance 6 (converse suite, 200 witnesses replay exactly): pass");
}

#[test]
fn criterion_7_oracle_equivalences() {
    // (a) path-sum inverse equals substitution inverse, 200 cases, exact.
    let mut rng = SplitMix64::new(0x7a);
    for _ in 0..200 {
        let n = 1 + rng.below(8) as usize;
        let mut l: SquareMatrix<Rat> = SquareMatrix::identity(n);
        for i in 1..=n {
            for j in 1..i {
                let den = 1 + rng.below(3) as i64;
                l.set(i, j, ratio(rng.range_inclusive(-2 * den, 2 * den), den));
            }
        }
        let a = invert_unit_lower_substitution(&l).unwrap();
        let b = invert_unit_lower_pathsum(&l, ENUMERATION_CAP).unwrap();
        assert_eq!(a, b);
    }

    // (b) Cauchy–Binet expansion equals the direct determinant, 200 cases.
    for _ in 0..200 {
        let n = 2 + rng.below(5) as usize;
        let r = 1 + rng.below(n as u64) as usize;
        let mut b: RectMatrix<Rat> = RectMatrix::zero(n, r);
        for i in 1..=n {
            for j in 1..=r {
                b.set(i, j, rat(rng.range_inclusive(-2, 2)));
            }
        }
        let w: Vec<Rat> = (0..n)
            .map(|_| ratio(1 + rng.below(3) as i64, 1 + rng.below(2) as i64))
            .collect();
        let expanded = cauchy_binet_expand(&b, &w, ENUMERATION_CAP).unwrap();
        let mut gram: SquareMatrix<Rat> = SquareMatrix::zero(r);
        for i in 1..=r {
            for j in 1..=r {
                let mut acc = rat(0);
                for k in 1..=n {
                    acc += b.at(k, i).clone() * w[k - 1].clone() * b.at(k, j).clone();
                }
                gram.set(i, j, acc);
            }
        }
        assert_eq!(expanded, determinant(&gram));
    }

    // (c) nested-neighborhood recognition agrees with an independent brute
    // force scan of all 4-subsets, over 1000 sampled graphs on <= 7 vertices.
    let mut checked = 0usize;
    for seed in 0..1000u64 {
        let density = 1 + seed % 3;
        let g = random_graph(seed, 7, density, 4);
        assert_eq!(
            is_homogeneous(&g),
            brute_force_homogeneous(&g),
            "seed {seed}"
        );
        checked += 1;
    }
    assert_eq!(checked, 1000);
    println!("acceptance 7 (oracle equivalences, exact): pass");
}

fn brute_force_homogeneous(g: &Graph) -> bool {
    let n = g.n();
    let idx: Vec<usize> = (0..n).collect();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let quad = [idx[a], idx[b], idx[c], idx[d]];
                    let mut deg = [0usize; 4];
                    let mut edges = 0usize;
                    for x in 0..4 {
                        for y in (x + 1)..4 {
                            if g.has_edge_idx(quad[x], quad[y]) {
                                deg[x] += 1;
                                deg[y] += 1;
                                edges += 1;
                            }
                        }
                    }
                    let is_c4 = edges == 4 && deg.iter().all(|&d| d == 2);
                    let is_p4 = edges == 3 && deg.iter().all(|&d| (1..=2).contains(&d));
                    if is_c4 || is_p4 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn criterion_8_decomposable_baseline() {
    let started = Instant::now();
    let mut trials = 0usize;
    let mut saw_inverse_violation = false;
    let mut seed = 0u64;
    while trials < 200 {
        seed += 1;
        let g = random_chordal(seed, 9);
        if is_homogeneous(&g) {
            continue;
        }
        let ord = find_perfect_elimination_ordering(&g)
            .expect("construction yields a decomposable graph");
        let pattern = SparsityPattern::from_graph(&g, &ord).unwrap();

        // Factor route: reassembly stays in the pattern.
        let l = sample_unit_lower(&pattern, seed);
        let d = sample_positive_diagonal(g.n(), seed);
        let sigma = LdlFactors { l: l.clone(), d }.reassemble();
        assert!(
            pattern.admits_symmetric(&sigma).unwrap().is_member(),
            "seed {seed}: factor-to-matrix preservation must hold with a perfect elimination ordering"
        );

        // Matrix route: the Cholesky factor stays in the pattern.
        let spd = sample_spd(&pattern, seed);
        let factors = ldl_decompose(&spd).unwrap();
        assert!(
            pattern.admits_unit_lower(&factors.l).is_member(),
            "seed {seed}: matrix-to-factor preservation must hold with a perfect elimination ordering"
        );

        // The inverse-factor condition is allowed to fail, and must fail
        // somewhere across the campaign.
        let inv = invert_unit_lower_substitution(&l).unwrap();
        if !pattern.admits_unit_lower(&inv).is_member() {
            saw_inverse_violation = true;
        }
        let inv = invert_unit_lower_substitution(&factors.l).unwrap();
        if !pattern.admits_unit_lower(&inv).is_member() {
            saw_inverse_violation = true;
        }
        trials += 1;
    }
    assert!(
        saw_inverse_violation,
        "some trial must put the inverse factor outside the pattern"
    );
    assert!(started.elapsed() < Duration::from_secs(60));
    println!("acceptance 8 (decomposable baseline, 200 trials): pass");
}
