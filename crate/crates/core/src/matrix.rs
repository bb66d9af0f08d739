//! Dense matrices at desk scale.
//!
//! All public indices are 1-based, matching the position convention used by
//! vertex orderings; this keeps pattern slots, reported entries and index
//! sets on a single convention.

use thiserror::Error;

use crate::scalar::{Scalar, DEFAULT_ZERO_TOL};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is not positive definite (pivot {0})")]
    NotPositiveDefinite(usize),
    #[error("matrix is not unit lower triangular at ({0}, {1})")]
    NotUnitLowerTriangular(usize, usize),
    #[error("dimension {0} exceeds the cap {1} for this operation")]
    DimensionCap(usize, usize),
    #[error("empty index set")]
    EmptyIndexSet,
    #[error("index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix<S> {
    n: usize,
    entries: Vec<S>,
}

impl<S: Scalar> std::fmt::Debug for SquareMatrix<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SquareMatrix {}x{} [", self.n, self.n)?;
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> SquareMatrix<S> {
    pub fn zero(n: usize) -> Self {
        SquareMatrix {
            n,
            entries: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 1..=n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    n
                )));
            }
        }
        Ok(SquareMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix of integer entries; handy for fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n));
        SquareMatrix {
            n,
            entries: rows
                .iter()
                .flat_map(|r| r.iter().map(|&v| S::from_int(v)))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j` (1-based).
    pub fn at(&self, i: usize, j: usize) -> &S {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch(format!(
                "{} vs {}",
                self.n, other.n
            )));
        }
        let mut out = Self::zero(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                let mut acc = S::zero();
                for k in 1..=self.n {
                    acc = acc + self.at(i, k).clone() * other.at(k, j).clone();
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_within(DEFAULT_ZERO_TOL)
    }

    pub fn is_symmetric_within(&self, tol: f64) -> bool {
        self.symmetry_defect_within(tol).is_none()
    }

    /// First `(i, j)` where symmetry fails, scanning the upper triangle.
    pub fn symmetry_defect_within(&self, tol: f64) -> Option<(usize, usize)> {
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                let diff = self.at(i, j).clone() - self.at(j, i).clone();
                if !diff.is_zero_within(tol) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Checks `L_ii = 1` and `L_ij = 0` above the diagonal.
    pub fn unit_lower_defect_within(&self, tol: f64) -> Option<(usize, usize)> {
        for i in 1..=self.n {
            let diag = self.at(i, i).clone() - S::one();
            if !diag.is_zero_within(tol) {
                return Some((i, i));
            }
            for j in (i + 1)..=self.n {
                if !self.at(i, j).is_zero_within(tol) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        self.unit_lower_defect_within(DEFAULT_ZERO_TOL).is_none()
    }

    /// Principal submatrix on the 1-based indices `idx` (in the given order).
    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<Self, MatrixError> {
        if idx.is_empty() {
            return Err(MatrixError::EmptyIndexSet);
        }
        for &i in idx {
            if i == 0 || i > self.n {
                return Err(MatrixError::IndexOutOfRange(i, self.n));
            }
        }
        let m = idx.len();
        let mut out = Self::zero(m);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out.set(a + 1, b + 1, self.at(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Largest `|a_ii|` as a float; scale reference for float pivot checks.
    pub fn max_abs_diagonal(&self) -> f64 {
        (1..=self.n)
            .map(|i| self.at(i, i).abs().to_f64())
            .fold(0.0, f64::max)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SquareMatrix<T> {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Dense rectangular matrix, 1-based accessors, used by the Cauchy–Binet
/// expansion oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct RectMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> RectMatrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RectMatrix {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 1..=rows {
            for j in 1..=cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        self.entries[(i - 1) * self.cols + (j - 1)] = value;
    }

    /// Square matrix from the selected 1-based rows (all columns).
    pub fn row_submatrix(&self, rows: &[usize]) -> SquareMatrix<S> {
        assert_eq!(rows.len(), self.cols);
        let mut out = SquareMatrix::zero(self.cols);
        for (a, &i) in rows.iter().enumerate() {
            for j in 1..=self.cols {
                out.set(a + 1, j, self.at(i, j).clone());
            }
        }
        out
    }
}
