//! Equivalence verification and constructive counterexamples.
//!
//! The three-way equivalence under test says: for a graph with ordering σ,
//! "factor fits the pattern", "inverse factor fits the pattern" and
//! "reassembled matrix fits the pattern" all coincide exactly when the
//! graph is homogeneous and σ is a Hasse scheme; and in that case the
//! determinant of every maximal clique's block of Σ⁻¹ equals the product
//! of the matching reciprocal pivots. [`verify_equivalence`] probes both
//! claims with seeded random trials; the `construct_*_witness` functions
//! build deterministic counterexamples from a conflict triple whenever the
//! hypotheses fail.

use thiserror::Error;

use crate::cholesky::{invert_unit_lower_substitution, ldl_decompose, LdlFactors};
use crate::graph::{Graph, VertexSet};
use crate::matrix::{MatrixError, SquareMatrix};
use crate::order::VertexOrdering;
use crate::pattern::{
    sample_positive_diagonal, sample_spd, sample_unit_lower, PatternVerdict, SparsityPattern,
};
use crate::scalar::{Rat, Scalar};
use crate::structure::{find_conflict_triple, ConflictTriple, StructureError};

#[derive(Debug, Error, PartialEq)]
pub enum VerifyError {
    #[error("matrix is not in the pattern: {0}")]
    NotInPattern(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// The individual implications exercised per trial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statement {
    /// Sampled factor and positive diagonal reassemble into the pattern.
    FactorToSigma,
    /// Decomposing a patterned SPD matrix keeps the factor in the pattern.
    SigmaToFactor,
    /// The inverse of an in-pattern factor stays in the pattern.
    FactorToInverse,
    /// Clique determinant identity.
    CliqueDeterminant,
}

impl Statement {
    pub fn id(&self) -> &'static str {
        match self {
            Statement::FactorToSigma => "L->Sigma",
            Statement::SigmaToFactor => "Sigma->L",
            Statement::FactorToInverse => "L->Linv",
            Statement::CliqueDeterminant => "clique-determinant",
        }
    }

    pub const ALL: [Statement; 4] = [
        Statement::FactorToSigma,
        Statement::SigmaToFactor,
        Statement::FactorToInverse,
        Statement::CliqueDeterminant,
    ];
}

/// Structured description of a single failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureDetail {
    Entry {
        i: usize,
        j: usize,
        value: String,
    },
    NotPositiveDefinite {
        pivot_index: usize,
    },
    NotUnitLower {
        i: usize,
        j: usize,
        value: String,
    },
    CliqueMismatch {
        clique: VertexSet,
        lhs: String,
        rhs: String,
    },
}

impl<S: Scalar> PatternVerdict<S> {
    fn to_detail(&self) -> Option<FailureDetail> {
        match self {
            PatternVerdict::Member => None,
            PatternVerdict::ForbiddenNonzero { i, j, value } => Some(FailureDetail::Entry {
                i: *i,
                j: *j,
                value: value.to_string(),
            }),
            PatternVerdict::NotPositiveDefinite { pivot_index } => {
                Some(FailureDetail::NotPositiveDefinite {
                    pivot_index: *pivot_index,
                })
            }
            PatternVerdict::NotUnitLowerTriangular { i, j, value } => {
                Some(FailureDetail::NotUnitLower {
                    i: *i,
                    j: *j,
                    value: value.to_string(),
                })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialFailure {
    pub seed: u64,
    pub statement: Statement,
    pub detail: FailureDetail,
}

/// Aggregate outcome of a randomized verification campaign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub trials: u64,
    pub failures: Vec<TrialFailure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `trials` seeded rounds against graph + ordering. Each round samples
/// a factor with positive diagonal (checking the inverse and the
/// reassembly), samples a patterned SPD matrix (checking its factor and
/// inverse factor), and evaluates the clique determinant identity on the
/// sampled SPD matrix. Per-trial seeds are `seed + trial_index`, so any
/// failure replays in isolation.
pub fn verify_equivalence(
    graph: &Graph,
    ord: &VertexOrdering,
    trials: u64,
    seed: u64,
) -> Result<VerificationReport, VerifyError> {
    let pattern = SparsityPattern::from_graph(graph, ord)?;
    let cliques = graph.maximal_cliques();
    let mut failures = Vec::new();
    for t in 0..trials {
        let trial_seed = seed.wrapping_add(t);
        let mut push = |statement: Statement, detail: FailureDetail| {
            failures.push(TrialFailure {
                seed: trial_seed,
                statement,
                detail,
            });
        };

        // (a) factor route.
        let l = sample_unit_lower(&pattern, trial_seed);
        let d = sample_positive_diagonal(graph.n(), trial_seed);
        let inv = invert_unit_lower_substitution(&l)?;
        if let Some(detail) = pattern.admits_unit_lower(&inv).to_detail() {
            push(Statement::FactorToInverse, detail);
        }
        let sigma = LdlFactors { l, d }.reassemble();
        if let Some(detail) = pattern.admits_symmetric(&sigma)?.to_detail() {
            push(Statement::FactorToSigma, detail);
        }

        // (b) SPD route.
        let spd = sample_spd(&pattern, trial_seed);
        let factors = ldl_decompose(&spd)?;
        if let Some(detail) = pattern.admits_unit_lower(&factors.l).to_detail() {
            push(Statement::SigmaToFactor, detail);
        }
        let factor_inv = invert_unit_lower_substitution(&factors.l)?;
        if let Some(detail) = pattern.admits_unit_lower(&factor_inv).to_detail() {
            push(Statement::FactorToInverse, detail);
        }

        // (c) clique determinants on the SPD sample.
        for check in clique_checks_from_factors(&factors, &cliques, ord, 1e-9)? {
            if !check.equal {
                push(
                    Statement::CliqueDeterminant,
                    FailureDetail::CliqueMismatch {
                        clique: check.clique.clone(),
                        lhs: check.lhs.to_string(),
                        rhs: check.rhs.to_string(),
                    },
                );
            }
        }
    }
    Ok(VerificationReport { trials, failures })
}

/// Result of the determinant identity on one maximal clique.
#[derive(Clone, Debug, PartialEq)]
pub struct CliqueCheck<S> {
    pub clique: VertexSet,
    pub positions: Vec<usize>,
    pub lhs: S,
    pub rhs: S,
    pub equal: bool,
}

/// Evaluates, for every maximal clique `C`, whether the determinant of the
/// `σ(C)` block of `Σ⁻¹` equals the product of `1/D_ii` over `σ(C)`.
/// Requires `Σ` to fit the pattern of graph + ordering.
pub fn clique_determinant_check<S: Scalar>(
    sigma: &SquareMatrix<S>,
    graph: &Graph,
    ord: &VertexOrdering,
) -> Result<Vec<CliqueCheck<S>>, VerifyError> {
    clique_determinant_check_with(sigma, graph, ord, 1e-9)
}

pub fn clique_determinant_check_with<S: Scalar>(
    sigma: &SquareMatrix<S>,
    graph: &Graph,
    ord: &VertexOrdering,
    rel_tol: f64,
) -> Result<Vec<CliqueCheck<S>>, VerifyError> {
    let pattern = SparsityPattern::from_graph(graph, ord)?;
    let verdict = pattern.admits_symmetric(sigma)?;
    if !verdict.is_member() {
        return Err(VerifyError::NotInPattern(format!("{verdict:?}")));
    }
    let factors = ldl_decompose(sigma)?;
    clique_checks_from_factors(&factors, &graph.maximal_cliques(), ord, rel_tol)
}

fn clique_checks_from_factors<S: Scalar>(
    factors: &LdlFactors<S>,
    cliques: &[VertexSet],
    ord: &VertexOrdering,
    rel_tol: f64,
) -> Result<Vec<CliqueCheck<S>>, VerifyError> {
    let inverse = spd_inverse_from_factors(factors)?;
    let mut out = Vec::with_capacity(cliques.len());
    for clique in cliques {
        let mut positions: Vec<usize> = clique
            .iter()
            .map(|v| {
                ord.position(v)
                    .expect("clique members are ordered vertices")
            })
            .collect();
        positions.sort_unstable();
        let lhs = crate::cholesky::submatrix_determinant(&inverse, &positions)?;
        let rhs = positions
            .iter()
            .fold(S::one(), |acc, &p| acc / factors.d[p - 1].clone());
        let equal = lhs.approx_eq(&rhs, rel_tol);
        out.push(CliqueCheck {
            clique: clique.clone(),
            positions,
            lhs,
            rhs,
            equal,
        });
    }
    Ok(out)
}

/// `Σ⁻¹ = L⁻ᵀ·D⁻¹·L⁻¹` assembled from the factors.
pub fn spd_inverse_from_factors<S: Scalar>(
    factors: &LdlFactors<S>,
) -> Result<SquareMatrix<S>, MatrixError> {
    let linv = invert_unit_lower_substitution(&factors.l)?;
    let n = linv.n();
    let mut out = SquareMatrix::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            let mut acc = S::zero();
            for k in 1..=n {
                acc =
                    acc + linv.at(k, i).clone() * linv.at(k, j).clone() / factors.d[k - 1].clone();
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// An in-pattern factor whose reassembly leaves the pattern.
    DecompositionViolation,
    /// An in-pattern factor whose inverse leaves the pattern.
    InverseViolation,
    /// A patterned SPD matrix breaking the clique determinant identity.
    DeterminantViolation,
}

impl WitnessKind {
    pub fn id(&self) -> &'static str {
        match self {
            WitnessKind::DecompositionViolation => "decomposition-violation",
            WitnessKind::InverseViolation => "inverse-violation",
            WitnessKind::DeterminantViolation => "determinant-violation",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum WitnessEvidence {
    /// Offending entry of the reassembled matrix or the inverse factor.
    Entry { i: usize, j: usize, value: Rat },
    /// Clique block determinant vs. reciprocal pivot product, plus every
    /// maximal clique containing the triple's edge `u-v`.
    Determinant {
        clique: VertexSet,
        positions: Vec<usize>,
        lhs: Rat,
        rhs: Rat,
        qualifying: Vec<VertexSet>,
    },
}

/// A replayable counterexample anchored at a conflict triple.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub triple: ConflictTriple,
    pub matrix: SquareMatrix<Rat>,
    pub evidence: WitnessEvidence,
}

/// Builds a factor-based counterexample from the conflict triple, if one
/// exists. With `σ(v) < σ(u) < σ(w)` the factor carries ones at
/// `(σ(u), σ(v))` and `(σ(w), σ(v))`; its reassembly then puts a one on the
/// forbidden slot `(σ(w), σ(u))`. With `σ(u) < σ(v) < σ(w)` the ones sit at
/// `(σ(v), σ(u))` and `(σ(w), σ(v))`, and the chained path puts a one on the
/// same forbidden slot of the inverse instead.
pub fn construct_factor_witness(
    graph: &Graph,
    ord: &VertexOrdering,
) -> Result<Option<Witness>, StructureError> {
    let triple = match find_conflict_triple(graph, ord)? {
        Some(t) => t,
        None => return Ok(None),
    };
    let su = ord.position(&triple.u).unwrap();
    let sv = ord.position(&triple.v).unwrap();
    let sw = ord.position(&triple.w).unwrap();
    let n = graph.n();
    let mut l: SquareMatrix<Rat> = SquareMatrix::identity(n);
    let witness = if sv < su {
        l.set(su, sv, Rat::one());
        l.set(sw, sv, Rat::one());
        let sigma = LdlFactors {
            l: l.clone(),
            d: vec![Rat::one(); n],
        }
        .reassemble();
        let value = sigma.at(sw, su).clone();
        Witness {
            kind: WitnessKind::DecompositionViolation,
            triple,
            matrix: l,
            evidence: WitnessEvidence::Entry {
                i: sw,
                j: su,
                value,
            },
        }
    } else {
        l.set(sv, su, Rat::one());
        l.set(sw, sv, Rat::one());
        let inv = invert_unit_lower_substitution(&l).expect("unit lower by construction");
        let value = inv.at(sw, su).clone();
        Witness {
            kind: WitnessKind::InverseViolation,
            triple,
            matrix: l,
            evidence: WitnessEvidence::Entry {
                i: sw,
                j: su,
                value,
            },
        }
    };
    Ok(Some(witness))
}

/// Builds the SPD counterexample to the clique determinant identity from
/// the conflict triple, if one exists: the matrix is the identity except
/// for a 5 at `(σ(v), σ(v))` and ones coupling v to u and to w. The clique
/// is the first maximal clique containing `u` and `v` (it cannot contain
/// `w`); the determinant pair always lands on (1/3, 1/4).
pub fn construct_determinant_witness(
    graph: &Graph,
    ord: &VertexOrdering,
) -> Result<Option<Witness>, StructureError> {
    let triple = match find_conflict_triple(graph, ord)? {
        Some(t) => t,
        None => return Ok(None),
    };
    let su = ord.position(&triple.u).unwrap();
    let sv = ord.position(&triple.v).unwrap();
    let sw = ord.position(&triple.w).unwrap();
    let n = graph.n();
    let mut sigma: SquareMatrix<Rat> = SquareMatrix::identity(n);
    sigma.set(sv, sv, Rat::from_int(5));
    sigma.set(sv, su, Rat::one());
    sigma.set(su, sv, Rat::one());
    sigma.set(sv, sw, Rat::one());
    sigma.set(sw, sv, Rat::one());

    let qualifying: Vec<VertexSet> = graph
        .maximal_cliques()
        .into_iter()
        .filter(|c| c.contains(&triple.u) && c.contains(&triple.v))
        .collect();
    let clique = qualifying
        .first()
        .expect("u-v is an edge, so a maximal clique contains it")
        .clone();
    debug_assert!(!clique.contains(&triple.w));

    let factors = ldl_decompose(&sigma).expect("witness matrix is positive definite");
    let inverse = spd_inverse_from_factors(&factors).expect("factor is unit lower triangular");
    let mut positions: Vec<usize> = clique.iter().map(|v| ord.position(v).unwrap()).collect();
    positions.sort_unstable();
    let lhs = crate::cholesky::submatrix_determinant(&inverse, &positions)
        .expect("positions lie in range");
    let rhs = positions
        .iter()
        .fold(Rat::one(), |acc, &p| acc / factors.d[p - 1].clone());
    Ok(Some(Witness {
        kind: WitnessKind::DeterminantViolation,
        triple,
        matrix: sigma,
        evidence: WitnessEvidence::Determinant {
            clique,
            positions,
            lhs,
            rhs,
            qualifying,
        },
    }))
}
