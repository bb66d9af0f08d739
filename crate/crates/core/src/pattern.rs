//! Sparsity patterns induced by a graph and a vertex ordering, membership
//! checks for symmetric positive definite matrices and unit lower
//! triangular factors, and seeded samplers for both spaces.
//!
//! The pattern permits a nonzero at `(i, j)` exactly when the vertices at
//! positions `i` and `j` are adjacent; the diagonal is always permitted.
//! A symmetric matrix "fits" when it is positive definite and vanishes on
//! every forbidden slot; a factor fits when it is unit lower triangular and
//! vanishes on every forbidden subdiagonal slot.

use crate::cholesky::ldl_decompose_with;
use crate::graph::Graph;
use crate::matrix::{MatrixError, SquareMatrix};
use crate::order::VertexOrdering;
use crate::rng::SplitMix64;
use crate::scalar::{Rat, Scalar, DEFAULT_PIVOT_REL_TOL, DEFAULT_ZERO_TOL};
use crate::structure::StructureError;

/// Symmetric set of permitted slots, diagonal always included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsityPattern {
    n: usize,
    allowed: Vec<bool>,
}

impl SparsityPattern {
    /// Pattern with every slot permitted.
    pub fn full(n: usize) -> Self {
        SparsityPattern {
            n,
            allowed: vec![true; n * n],
        }
    }

    /// Pattern permitting only the diagonal.
    pub fn diagonal(n: usize) -> Self {
        let mut p = SparsityPattern {
            n,
            allowed: vec![false; n * n],
        };
        for i in 1..=n {
            p.allow(i, i);
        }
        p
    }

    /// Pattern of a graph under an ordering: slot `(i, j)` is permitted iff
    /// the vertices at positions `i` and `j` are adjacent.
    pub fn from_graph(graph: &Graph, ord: &VertexOrdering) -> Result<Self, StructureError> {
        ord.matches(graph)?;
        let n = graph.n();
        let mut p = SparsityPattern::diagonal(n);
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    let vi = ord.label_at(i).unwrap();
                    let vj = ord.label_at(j).unwrap();
                    if graph.has_edge(vi, vj) {
                        p.allow(i, j);
                    }
                }
            }
        }
        Ok(p)
    }

    fn allow(&mut self, i: usize, j: usize) {
        self.allowed[(i - 1) * self.n + (j - 1)] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether slot `(i, j)` (1-based) may hold a nonzero.
    pub fn allows(&self, i: usize, j: usize) -> bool {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        self.allowed[(i - 1) * self.n + (j - 1)]
    }

    /// Permitted off-diagonal subdiagonal slots, row-major.
    pub fn allowed_subdiagonal(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..i {
                if self.allows(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Membership of a symmetric matrix: positive definite and zero on
    /// every forbidden slot. Uses default tolerances.
    pub fn admits_symmetric<S: Scalar>(
        &self,
        m: &SquareMatrix<S>,
    ) -> Result<PatternVerdict<S>, MatrixError> {
        self.admits_symmetric_with(m, DEFAULT_ZERO_TOL, DEFAULT_PIVOT_REL_TOL)
    }

    pub fn admits_symmetric_with<S: Scalar>(
        &self,
        m: &SquareMatrix<S>,
        zero_tol: f64,
        pivot_rel_tol: f64,
    ) -> Result<PatternVerdict<S>, MatrixError> {
        if m.n() != self.n {
            return Err(MatrixError::DimensionMismatch(format!(
                "matrix {} vs pattern {}",
                m.n(),
                self.n
            )));
        }
        if let Some((i, j)) = m.symmetry_defect_within(zero_tol) {
            return Err(MatrixError::NotSymmetric(i, j));
        }
        // Forbidden slots first, row-major over the subdiagonal; the mirror
        // slot carries the same value by symmetry.
        for i in 1..=self.n {
            for j in 1..i {
                if !self.allows(i, j) && !m.at(i, j).is_zero_within(zero_tol) {
                    return Ok(PatternVerdict::ForbiddenNonzero {
                        i,
                        j,
                        value: m.at(i, j).clone(),
                    });
                }
            }
        }
        match ldl_decompose_with(m, zero_tol, pivot_rel_tol) {
            Ok(_) => Ok(PatternVerdict::Member),
            Err(MatrixError::NotPositiveDefinite(k)) => {
                Ok(PatternVerdict::NotPositiveDefinite { pivot_index: k })
            }
            Err(other) => Err(other),
        }
    }

    /// Membership of a factor: unit lower triangular and zero on every
    /// forbidden subdiagonal slot. Uses default tolerances.
    pub fn admits_unit_lower<S: Scalar>(&self, l: &SquareMatrix<S>) -> PatternVerdict<S> {
        self.admits_unit_lower_with(l, DEFAULT_ZERO_TOL)
    }

    pub fn admits_unit_lower_with<S: Scalar>(
        &self,
        l: &SquareMatrix<S>,
        zero_tol: f64,
    ) -> PatternVerdict<S> {
        assert_eq!(l.n(), self.n, "factor and pattern dimensions must agree");
        if let Some((i, j)) = l.unit_lower_defect_within(zero_tol) {
            return PatternVerdict::NotUnitLowerTriangular {
                i,
                j,
                value: l.at(i, j).clone(),
            };
        }
        for i in 1..=self.n {
            for j in 1..i {
                if !self.allows(i, j) && !l.at(i, j).is_zero_within(zero_tol) {
                    return PatternVerdict::ForbiddenNonzero {
                        i,
                        j,
                        value: l.at(i, j).clone(),
                    };
                }
            }
        }
        PatternVerdict::Member
    }
}

/// Outcome of a membership check, carrying the first offending entry when
/// membership fails. Forbidden slots are scanned row-major.
#[derive(Clone, Debug, PartialEq)]
pub enum PatternVerdict<S> {
    Member,
    ForbiddenNonzero { i: usize, j: usize, value: S },
    NotPositiveDefinite { pivot_index: usize },
    NotUnitLowerTriangular { i: usize, j: usize, value: S },
}

impl<S> PatternVerdict<S> {
    pub fn is_member(&self) -> bool {
        matches!(self, PatternVerdict::Member)
    }
}

/// Seeded unit lower triangular sample inside the pattern: permitted
/// subdiagonal slots carry small rationals in `[-2, 2]`, everything else is
/// forced to zero.
pub fn sample_unit_lower(pat: &SparsityPattern, seed: u64) -> SquareMatrix<Rat> {
    let mut rng = SplitMix64::derived(seed, 0x4c);
    let mut l = SquareMatrix::identity(pat.n());
    for (i, j) in pat.allowed_subdiagonal() {
        let den = 1 + rng.below(4) as i64;
        let num = rng.range_inclusive(-2 * den, 2 * den);
        l.set(i, j, Rat::from_ratio(num, den));
    }
    debug_assert!(pat.admits_unit_lower(&l).is_member());
    l
}

/// Seeded positive diagonal for pairing with [`sample_unit_lower`].
pub fn sample_positive_diagonal(n: usize, seed: u64) -> Vec<Rat> {
    let mut rng = SplitMix64::derived(seed, 0xd1);
    (0..n)
        .map(|_| Rat::from_ratio(1 + rng.below(4) as i64, 1 + rng.below(4) as i64))
        .collect()
}

/// Seeded symmetric positive definite sample inside the pattern: permitted
/// off-diagonal slots carry rationals in `[-1, 1]`, and each diagonal entry
/// is one plus the absolute row sum, so strict diagonal dominance makes the
/// matrix positive definite regardless of the draw.
pub fn sample_spd(pat: &SparsityPattern, seed: u64) -> SquareMatrix<Rat> {
    let mut rng = SplitMix64::derived(seed, 0x5d);
    let n = pat.n();
    let mut m = SquareMatrix::zero(n);
    for i in 1..=n {
        for j in 1..i {
            if pat.allows(i, j) {
                let den = 1 + rng.below(4) as i64;
                let num = rng.range_inclusive(-den, den);
                let v = Rat::from_ratio(num, den);
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
    }
    for i in 1..=n {
        let diag = (1..=n)
            .filter(|&j| j != i)
            .fold(Rat::one(), |acc, j| acc + m.at(i, j).abs());
        m.set(i, i, diag);
    }
    debug_assert!(matches!(
        pat.admits_symmetric(&m),
        Ok(PatternVerdict::Member)
    ));
    m
}
