//! Command-line front end: graph recognition, ordering construction, Hasse
//! export, verification campaigns, and witness emission.
//!
//! Exit codes: `recognize` uses 0 (homogeneous), 1 (decomposable only),
//! 2 (neither); `verify` uses 0 (pass) / 3 (fail); parse errors exit 64,
//! unreadable files 66, and other input/domain errors 65.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cholpat::cholesky::{invert_unit_lower_substitution, ldl_decompose_with, LdlFactors};
use cholpat::graph::Graph;
use cholpat::io::{self, dot, json, ParsedMatrix};
use cholpat::matrix::SquareMatrix;
use cholpat::order::VertexOrdering;
use cholpat::pattern::SparsityPattern;
use cholpat::scalar::{Scalar, DEFAULT_PIVOT_REL_TOL};
use cholpat::structure::{
    check_hasse_scheme, find_hasse_scheme, find_perfect_elimination_ordering, homogeneity_witness,
    is_hasse_scheme, is_homogeneous, is_perfect_elimination_ordering,
};
use cholpat::verify::{
    clique_determinant_check_with, construct_determinant_witness, construct_factor_witness,
    verify_equivalence, FailureDetail, Statement,
};

#[derive(Parser)]
#[command(
    name = "cholpat",
    version,
    about = "Homogeneous graphs and Cholesky zero patterns"
)]
struct Cli {
    /// Scalar preference: `rational` keeps whatever the input provides,
    /// `float` downgrades exact input to binary64.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Rational)]
    mode: Mode,

    /// Float zero tolerance for pattern membership.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Seed for randomized campaigns.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Trial count for randomized campaigns.
    #[arg(long, global = true, default_value_t = 200)]
    trials: u64,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Rational,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scheme {
    Pves,
    Htbes,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph: homogeneous, decomposable only, or neither.
    Recognize { graph: PathBuf },
    /// Emit a perfect elimination ordering or a Hasse scheme.
    Order {
        graph: PathBuf,
        #[arg(long, value_enum)]
        scheme: Scheme,
    },
    /// Export the Hasse forest as DOT.
    Hasse { graph: PathBuf },
    /// Check the pattern-preservation statements: one-shot against a given
    /// matrix, or as a seeded randomized campaign.
    Verify {
        graph: PathBuf,
        ordering: PathBuf,
        matrix: Option<PathBuf>,
    },
    /// Emit counterexample witnesses when the hypotheses fail.
    Witness { graph: PathBuf, ordering: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<io::ParseError> for Failure {
    fn from(e: io::ParseError) -> Failure {
        Failure::new(64, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Recognize { graph } => cmd_recognize(cli, graph),
        Command::Order { graph, scheme } => cmd_order(cli, graph, *scheme),
        Command::Hasse { graph } => cmd_hasse(cli, graph),
        Command::Verify {
            graph,
            ordering,
            matrix,
        } => cmd_verify(cli, graph, ordering, matrix.as_deref()),
        Command::Witness { graph, ordering } => cmd_witness(cli, graph, ordering),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(66, format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(io::parse_graph_auto(&read_file(path)?)?)
}

fn load_ordering(path: &Path, graph: &Graph) -> Result<VertexOrdering, Failure> {
    let ord = io::parse_ordering(&read_file(path)?)?;
    ord.matches(graph)
        .map_err(|e| Failure::new(65, e.to_string()))?;
    Ok(ord)
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(66, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn ordering_certificate(ord: &VertexOrdering) -> String {
    (1..=ord.len())
        .map(|pos| format!("{}={}", ord.label_at(pos).unwrap(), pos))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_recognize(cli: &Cli, graph_path: &Path) -> Result<u8, Failure> {
    let graph = load_graph(graph_path)?;
    let homogeneous = is_homogeneous(&graph);
    let peo = find_perfect_elimination_ordering(&graph);
    let mut out = String::new();
    let code = if homogeneous {
        out.push_str("homogeneous\n");
        let scheme = find_hasse_scheme(&graph).expect("homogeneous graph has a Hasse scheme");
        out.push_str(&format!("htbes: {}\n", ordering_certificate(&scheme)));
        out.push_str(&format!(
            "pves: {}\n",
            ordering_certificate(peo.as_ref().expect("homogeneous graphs are decomposable"))
        ));
        0
    } else if let Some(peo) = peo {
        out.push_str("decomposable, not homogeneous\n");
        out.push_str(&format!("pves: {}\n", ordering_certificate(&peo)));
        let quad = homogeneity_witness(&graph).expect("non-homogeneous graph has a witness");
        let members: Vec<&str> = quad.iter().map(String::as_str).collect();
        out.push_str(&format!("offending: {{{}}}\n", members.join(",")));
        1
    } else {
        out.push_str("not decomposable\n");
        if let Some(quad) = homogeneity_witness(&graph) {
            let members: Vec<&str> = quad.iter().map(String::as_str).collect();
            out.push_str(&format!("offending: {{{}}}\n", members.join(",")));
        }
        2
    };
    emit(cli, &out)?;
    Ok(code)
}

fn cmd_order(cli: &Cli, graph_path: &Path, scheme: Scheme) -> Result<u8, Failure> {
    let graph = load_graph(graph_path)?;
    let ord = match scheme {
        Scheme::Pves => find_perfect_elimination_ordering(&graph)
            .ok_or_else(|| Failure::new(65, "no such scheme: graph is not decomposable"))?,
        Scheme::Htbes => find_hasse_scheme(&graph)
            .map_err(|_| Failure::new(65, "no such scheme: graph is not homogeneous"))?,
    };
    // Re-validate before emitting.
    let valid = match scheme {
        Scheme::Pves => is_perfect_elimination_ordering(&graph, &ord),
        Scheme::Htbes => is_hasse_scheme(&graph, &ord),
    };
    assert!(valid, "constructed ordering failed validation");
    emit(cli, &io::write_ordering(&ord))?;
    Ok(0)
}

fn cmd_hasse(cli: &Cli, graph_path: &Path) -> Result<u8, Failure> {
    let graph = load_graph(graph_path)?;
    let forest =
        cholpat::build_hasse_forest(&graph).map_err(|e| Failure::new(65, e.to_string()))?;
    emit(cli, &dot::hasse_to_dot(&forest))?;
    Ok(0)
}

fn cmd_verify(
    cli: &Cli,
    graph_path: &Path,
    ordering_path: &Path,
    matrix_path: Option<&Path>,
) -> Result<u8, Failure> {
    let graph = load_graph(graph_path)?;
    let ord = load_ordering(ordering_path, &graph)?;
    let report_json = match matrix_path {
        None => {
            eprintln!("seed: {}", cli.seed);
            let report = verify_equivalence(&graph, &ord, cli.trials, cli.seed)
                .map_err(|e| Failure::new(65, e.to_string()))?;
            let value = json::report_to_json(&graph, &ord, &report);
            (value, report.passed())
        }
        Some(path) => {
            let parsed = io::parse_matrix_auto(&read_file(path)?)?;
            let parsed = match (cli.mode, parsed) {
                (Mode::Float, ParsedMatrix::Rational(m)) => {
                    ParsedMatrix::Float(m.map(|v| v.to_f64()))
                }
                (_, other) => other,
            };
            if parsed.n() != graph.n() {
                return Err(Failure::new(
                    65,
                    format!(
                        "matrix has dimension {} but the graph has {} vertices",
                        parsed.n(),
                        graph.n()
                    ),
                ));
            }
            let failures = match &parsed {
                ParsedMatrix::Rational(m) => one_shot(m, &graph, &ord, cli.tol)?,
                ParsedMatrix::Float(m) => one_shot(m, &graph, &ord, cli.tol)?,
            };
            let passed = failures.is_empty();
            (
                json::one_shot_report_to_json(&graph, &ord, &failures),
                passed,
            )
        }
    };
    let (value, passed) = report_json;
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    emit(cli, &text)?;
    Ok(if passed { 0 } else { 3 })
}

/// One-shot check of the membership statements (and, for in-pattern SPD
/// input, the clique determinant identity) against a supplied matrix. A
/// unit lower triangular matrix is treated as the factor; a symmetric one
/// as the SPD matrix.
fn one_shot<S: Scalar>(
    m: &SquareMatrix<S>,
    graph: &Graph,
    ord: &VertexOrdering,
    tol: f64,
) -> Result<Vec<(Statement, FailureDetail)>, Failure> {
    let pattern =
        SparsityPattern::from_graph(graph, ord).map_err(|e| Failure::new(65, e.to_string()))?;
    let mut failures: Vec<(Statement, FailureDetail)> = Vec::new();
    let mut push = |st: Statement, verdict: cholpat::PatternVerdict<S>| {
        if let Some(detail) = verdict_to_detail(&verdict) {
            failures.push((st, detail));
        }
    };

    if m.unit_lower_defect_within(tol).is_none() {
        // Factor route: L, its inverse, and the reassembly L·Lᵀ.
        push(
            Statement::SigmaToFactor,
            pattern.admits_unit_lower_with(m, tol),
        );
        let inv = invert_unit_lower_substitution(m).map_err(|e| Failure::new(65, e.to_string()))?;
        push(
            Statement::FactorToInverse,
            pattern.admits_unit_lower_with(&inv, tol),
        );
        let sigma = LdlFactors {
            l: m.clone(),
            d: vec![S::one(); m.n()],
        }
        .reassemble();
        let verdict = pattern
            .admits_symmetric_with(&sigma, tol, DEFAULT_PIVOT_REL_TOL)
            .map_err(|e| Failure::new(65, e.to_string()))?;
        let in_pattern = verdict.is_member();
        push(Statement::FactorToSigma, verdict);
        if in_pattern {
            check_cliques(&sigma, graph, ord, tol, &mut failures)?;
        }
    } else if m.symmetry_defect_within(tol).is_none() {
        // SPD route: membership, the Cholesky factor, and its inverse.
        let verdict = pattern
            .admits_symmetric_with(m, tol, DEFAULT_PIVOT_REL_TOL)
            .map_err(|e| Failure::new(65, e.to_string()))?;
        let in_pattern = verdict.is_member();
        let decomposable_input =
            !matches!(verdict, cholpat::PatternVerdict::NotPositiveDefinite { .. });
        push(Statement::FactorToSigma, verdict);
        if decomposable_input {
            let factors = ldl_decompose_with(m, tol, DEFAULT_PIVOT_REL_TOL)
                .map_err(|e| Failure::new(65, e.to_string()))?;
            push(
                Statement::SigmaToFactor,
                pattern.admits_unit_lower_with(&factors.l, tol),
            );
            let inv = invert_unit_lower_substitution(&factors.l)
                .map_err(|e| Failure::new(65, e.to_string()))?;
            push(
                Statement::FactorToInverse,
                pattern.admits_unit_lower_with(&inv, tol),
            );
        }
        if in_pattern {
            check_cliques(m, graph, ord, tol, &mut failures)?;
        }
    } else {
        return Err(Failure::new(
            65,
            "matrix is neither unit lower triangular nor symmetric",
        ));
    }
    Ok(failures)
}

fn check_cliques<S: Scalar>(
    sigma: &SquareMatrix<S>,
    graph: &Graph,
    ord: &VertexOrdering,
    tol: f64,
    failures: &mut Vec<(Statement, FailureDetail)>,
) -> Result<(), Failure> {
    let checks = clique_determinant_check_with(sigma, graph, ord, tol)
        .map_err(|e| Failure::new(65, e.to_string()))?;
    for check in checks {
        if !check.equal {
            failures.push((
                Statement::CliqueDeterminant,
                FailureDetail::CliqueMismatch {
                    clique: check.clique,
                    lhs: check.lhs.to_string(),
                    rhs: check.rhs.to_string(),
                },
            ));
        }
    }
    Ok(())
}

fn verdict_to_detail<S: Scalar>(verdict: &cholpat::PatternVerdict<S>) -> Option<FailureDetail> {
    match verdict {
        cholpat::PatternVerdict::Member => None,
        cholpat::PatternVerdict::ForbiddenNonzero { i, j, value } => Some(FailureDetail::Entry {
            i: *i,
            j: *j,
            value: value.to_string(),
        }),
        cholpat::PatternVerdict::NotPositiveDefinite { pivot_index } => {
            Some(FailureDetail::NotPositiveDefinite {
                pivot_index: *pivot_index,
            })
        }
        cholpat::PatternVerdict::NotUnitLowerTriangular { i, j, value } => {
            Some(FailureDetail::NotUnitLower {
                i: *i,
                j: *j,
                value: value.to_string(),
            })
        }
    }
}

fn cmd_witness(cli: &Cli, graph_path: &Path, ordering_path: &Path) -> Result<u8, Failure> {
    let graph = load_graph(graph_path)?;
    let ord = load_ordering(ordering_path, &graph)?;
    let factor =
        construct_factor_witness(&graph, &ord).map_err(|e| Failure::new(65, e.to_string()))?;
    let det =
        construct_determinant_witness(&graph, &ord).map_err(|e| Failure::new(65, e.to_string()))?;
    if factor.is_none() && det.is_none() {
        // Double-check through the validators before declaring victory.
        debug_assert!(is_homogeneous(&graph));
        debug_assert!(matches!(check_hasse_scheme(&graph, &ord), Ok(None)));
        emit(cli, "no witness: hypotheses hold\n")?;
        return Ok(0);
    }
    let value = serde_json::json!({
        "determinant-witness": det.map(|w| json::witness_to_json(&w)),
        "factor-witness": factor.map(|w| json::witness_to_json(&w)),
    });
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    emit(cli, &text)?;
    Ok(0)
}
