//! Recognition of homogeneous (trivially perfect) graphs and verification
//! of zero-pattern preservation under the modified Cholesky decomposition.
//!
//! Given a graph and a vertex ordering σ, a symmetric positive definite
//! matrix *fits the pattern* when it vanishes wherever the σ-relabeled
//! graph lacks an edge; the same pattern restricted below the diagonal
//! constrains unit lower triangular factors. This crate:
//!
//! * recognizes decomposable and homogeneous graphs and produces the
//!   certifying orderings (perfect elimination orderings, Hasse schemes);
//! * decides pattern membership for matrices and factors exactly over
//!   rationals, or within tolerances over floats;
//! * verifies, by seeded randomized campaigns, that the pattern survives
//!   decomposition, inversion of the factor, and the clique determinant
//!   identity precisely on homogeneous graphs with Hasse schemes;
//! * constructs replayable counterexamples from a conflict triple whenever
//!   those hypotheses fail.

pub mod cholesky;
pub mod graph;
pub mod hasse;
pub mod io;
pub mod matrix;
pub mod order;
pub mod pattern;
pub mod rng;
pub mod scalar;
pub mod structure;
pub mod verify;

pub use graph::{Graph, GraphError, VertexSet};
pub use hasse::{build_hasse_forest, random_homogeneous_graph, HasseForest};
pub use matrix::{MatrixError, RectMatrix, SquareMatrix};
pub use order::{OrderError, VertexOrdering};
pub use pattern::{sample_spd, sample_unit_lower, PatternVerdict, SparsityPattern};
pub use scalar::{Rat, Scalar};
pub use structure::{
    check_hasse_scheme, check_perfect_elimination, find_conflict_triple, find_hasse_scheme,
    find_perfect_elimination_ordering, homogeneity_witness, is_hasse_scheme, is_homogeneous,
    is_perfect_elimination_ordering, ConflictTriple, StructureError,
};
pub use verify::{
    clique_determinant_check, construct_determinant_witness, construct_factor_witness,
    verify_equivalence, CliqueCheck, Statement, VerificationReport, VerifyError, Witness,
    WitnessEvidence, WitnessKind,
};
