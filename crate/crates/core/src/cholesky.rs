//! Modified Cholesky decomposition and the determinant machinery around it.
//!
//! `ldl_decompose` produces the unique factorization `A = L·diag(D)·Lᵀ`
//! with unit lower triangular `L` and positive `D`, by plain forward
//! elimination without pivoting — pivoting would permute the very sparsity
//! structure these factors are checked against.
//!
//! Two independent inverses of a unit lower triangular matrix are provided:
//! forward substitution, and a signed sum over strictly decreasing index
//! tuples. The latter is exponential and capped; it exists as an oracle
//! against the substitution path, not as a production inverse.

use crate::matrix::{MatrixError, RectMatrix, SquareMatrix};
use crate::scalar::{Scalar, DEFAULT_PIVOT_REL_TOL, DEFAULT_ZERO_TOL};

/// Cap on the path-sum inverse and Cauchy–Binet expansions: both enumerate
/// exponentially many terms.
pub const ENUMERATION_CAP: usize = 12;

/// Factors of `A = L·diag(D)·Lᵀ`.
#[derive(Clone, PartialEq)]
pub struct LdlFactors<S> {
    pub l: SquareMatrix<S>,
    pub d: Vec<S>,
}

impl<S: Scalar> std::fmt::Debug for LdlFactors<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LdlFactors")
            .field("l", &self.l)
            .field("d", &self.d)
            .finish()
    }
}

impl<S: Scalar> LdlFactors<S> {
    /// Rebuilds `L·diag(D)·Lᵀ`.
    pub fn reassemble(&self) -> SquareMatrix<S> {
        let n = self.l.n();
        let mut out = SquareMatrix::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                let mut acc = S::zero();
                for k in 1..=n {
                    acc = acc
                        + self.l.at(i, k).clone() * self.d[k - 1].clone() * self.l.at(j, k).clone();
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn d_product(&self) -> S {
        self.d.iter().fold(S::one(), |acc, v| acc * v.clone())
    }
}

/// Modified Cholesky decomposition with default tolerances (exact scalars
/// ignore them).
pub fn ldl_decompose<S: Scalar>(a: &SquareMatrix<S>) -> Result<LdlFactors<S>, MatrixError> {
    ldl_decompose_with(a, DEFAULT_ZERO_TOL, DEFAULT_PIVOT_REL_TOL)
}

/// As [`ldl_decompose`], with explicit float tolerances: `zero_tol` for the
/// symmetry check, `pivot_rel_tol` scaled by the largest diagonal entry for
/// pivot acceptance.
pub fn ldl_decompose_with<S: Scalar>(
    a: &SquareMatrix<S>,
    zero_tol: f64,
    pivot_rel_tol: f64,
) -> Result<LdlFactors<S>, MatrixError> {
    if let Some((i, j)) = a.symmetry_defect_within(zero_tol) {
        return Err(MatrixError::NotSymmetric(i, j));
    }
    let n = a.n();
    let pivot_floor = pivot_rel_tol * a.max_abs_diagonal().max(1.0);
    let mut l: SquareMatrix<S> = SquareMatrix::identity(n);
    let mut d: Vec<S> = Vec::with_capacity(n);
    for j in 1..=n {
        let mut dj = a.at(j, j).clone();
        for k in 1..j {
            dj = dj - l.at(j, k).clone() * l.at(j, k).clone() * d[k - 1].clone();
        }
        if !dj.is_positive_pivot(pivot_floor) {
            return Err(MatrixError::NotPositiveDefinite(j));
        }
        for i in (j + 1)..=n {
            let mut v = a.at(i, j).clone();
            for k in 1..j {
                v = v - l.at(i, k).clone() * l.at(j, k).clone() * d[k - 1].clone();
            }
            l.set(i, j, v / dj.clone());
        }
        d.push(dj);
    }
    Ok(LdlFactors { l, d })
}

/// Inverse of a unit lower triangular matrix by forward substitution.
pub fn invert_unit_lower_substitution<S: Scalar>(
    l: &SquareMatrix<S>,
) -> Result<SquareMatrix<S>, MatrixError> {
    require_unit_lower(l)?;
    let n = l.n();
    let mut inv: SquareMatrix<S> = SquareMatrix::identity(n);
    for j in 1..=n {
        for i in (j + 1)..=n {
            // Row i of L times column j of the inverse must vanish.
            let mut acc = S::zero();
            for k in j..i {
                acc = acc + l.at(i, k).clone() * inv.at(k, j).clone();
            }
            inv.set(i, j, -acc);
        }
    }
    Ok(inv)
}

/// Inverse of a unit lower triangular matrix as a signed sum over strictly
/// decreasing index tuples: entry `(i, j)` below the diagonal sums
/// `(-1)^(len-1) · L_{τ1 τ2} ⋯ L_{τ(len-1) τ(len)}` over all strictly
/// decreasing tuples from `i` down to `j`.
pub fn invert_unit_lower_pathsum<S: Scalar>(
    l: &SquareMatrix<S>,
    cap: usize,
) -> Result<SquareMatrix<S>, MatrixError> {
    require_unit_lower(l)?;
    let n = l.n();
    if n > cap {
        return Err(MatrixError::DimensionCap(n, cap));
    }
    let mut inv: SquareMatrix<S> = SquareMatrix::identity(n);
    for i in 1..=n {
        for j in 1..i {
            let between: Vec<usize> = ((j + 1)..i).rev().collect();
            let mut total = S::zero();
            for mask in 0u32..(1 << between.len()) {
                let mut tuple = Vec::with_capacity(between.len() + 2);
                tuple.push(i);
                for (bit, &mid) in between.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        tuple.push(mid);
                    }
                }
                tuple.push(j);
                let mut product = S::one();
                for pair in tuple.windows(2) {
                    product = product * l.at(pair[0], pair[1]).clone();
                }
                // dim(τ) = tuple.len(); sign is (-1)^(dim-1).
                if tuple.len() % 2 == 0 {
                    total = total - product;
                } else {
                    total = total + product;
                }
            }
            inv.set(i, j, total);
        }
    }
    Ok(inv)
}

fn require_unit_lower<S: Scalar>(l: &SquareMatrix<S>) -> Result<(), MatrixError> {
    match l.unit_lower_defect_within(DEFAULT_ZERO_TOL) {
        Some((i, j)) => Err(MatrixError::NotUnitLowerTriangular(i, j)),
        None => Ok(()),
    }
}

/// Determinant: fraction-free (Bareiss) elimination for exact scalars,
/// partially pivoted LU for floats.
pub fn determinant<S: Scalar>(a: &SquareMatrix<S>) -> S {
    if S::EXACT {
        det_bareiss(a)
    } else {
        det_partial_pivot(a)
    }
}

fn det_bareiss<S: Scalar>(a: &SquareMatrix<S>) -> S {
    let n = a.n();
    if n == 0 {
        return S::one();
    }
    let mut m = a.clone();
    let mut sign_negative = false;
    let mut prev = S::one();
    for k in 1..n {
        if m.at(k, k).is_zero() {
            // Find a row below with a nonzero entry in this column.
            let swap = ((k + 1)..=n).find(|&r| !m.at(r, k).is_zero());
            match swap {
                Some(r) => {
                    for c in 1..=n {
                        let tmp = m.at(k, c).clone();
                        m.set(k, c, m.at(r, c).clone());
                        m.set(r, c, tmp);
                    }
                    sign_negative = !sign_negative;
                }
                None => return S::zero(),
            }
        }
        for i in (k + 1)..=n {
            for j in (k + 1)..=n {
                let v = (m.at(i, j).clone() * m.at(k, k).clone()
                    - m.at(i, k).clone() * m.at(k, j).clone())
                    / prev.clone();
                m.set(i, j, v);
            }
            m.set(i, k, S::zero());
        }
        prev = m.at(k, k).clone();
    }
    let det = m.at(n, n).clone();
    if sign_negative {
        -det
    } else {
        det
    }
}

fn det_partial_pivot<S: Scalar>(a: &SquareMatrix<S>) -> S {
    let n = a.n();
    if n == 0 {
        return S::one();
    }
    let mut m = a.clone();
    let mut det = S::one();
    for k in 1..=n {
        let pivot_row = (k..=n)
            .max_by(|&r, &s| {
                m.at(r, k)
                    .abs()
                    .partial_cmp(&m.at(s, k).abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap();
        if m.at(pivot_row, k).is_zero() {
            return S::zero();
        }
        if pivot_row != k {
            for c in 1..=n {
                let tmp = m.at(k, c).clone();
                m.set(k, c, m.at(pivot_row, c).clone());
                m.set(pivot_row, c, tmp);
            }
            det = -det;
        }
        det = det * m.at(k, k).clone();
        for i in (k + 1)..=n {
            let factor = m.at(i, k).clone() / m.at(k, k).clone();
            for j in k..=n {
                let v = m.at(i, j).clone() - factor.clone() * m.at(k, j).clone();
                m.set(i, j, v);
            }
        }
    }
    det
}

/// Determinant of the principal submatrix on the 1-based index set `indices`.
pub fn submatrix_determinant<S: Scalar>(
    a: &SquareMatrix<S>,
    indices: &[usize],
) -> Result<S, MatrixError> {
    let sub = a.principal_submatrix(indices)?;
    Ok(determinant(&sub))
}

/// Sum over all `r`-subsets `A` of row indices of
/// `det(B_A)² · ∏_{i∈A} w_i`; equals `det(Bᵀ·diag(w)·B)` by the
/// Cauchy–Binet identity and serves as its independent oracle.
pub fn cauchy_binet_expand<S: Scalar>(
    b: &RectMatrix<S>,
    w: &[S],
    cap: usize,
) -> Result<S, MatrixError> {
    let n = b.rows();
    let r = b.cols();
    if n > cap {
        return Err(MatrixError::DimensionCap(n, cap));
    }
    if r > n {
        return Err(MatrixError::DimensionMismatch(format!(
            "{} columns exceed {} rows",
            r, n
        )));
    }
    if w.len() != n {
        return Err(MatrixError::DimensionMismatch(format!(
            "{} weights for {} rows",
            w.len(),
            n
        )));
    }
    let mut total = S::zero();
    let mut subset: Vec<usize> = (1..=r).collect();
    loop {
        let minor = determinant(&b.row_submatrix(&subset));
        let mut term = minor.clone() * minor;
        for &i in &subset {
            term = term * w[i - 1].clone();
        }
        total = total + term;

        // Next r-combination of 1..=n in lexicographic order.
        let mut pos = r;
        while pos > 0 && subset[pos - 1] == n - (r - pos) {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        subset[pos - 1] += 1;
        for q in pos..r {
            subset[q] = subset[q - 1] + 1;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::scalar::{rat, ratio, Rat};

    fn random_unit_lower(n: usize, rng: &mut SplitMix64) -> SquareMatrix<Rat> {
        let mut l: SquareMatrix<Rat> = SquareMatrix::identity(n);
        for i in 1..=n {
            for j in 1..i {
                let den = 1 + rng.below(3) as i64;
                let num = rng.range_inclusive(-2 * den, 2 * den);
                l.set(i, j, ratio(num, den));
            }
        }
        l
    }

    #[test]
    fn tridiagonal_pivots() {
        let sigma: SquareMatrix<Rat> = SquareMatrix::from_int_rows(&[
            &[2, 1, 0, 0],
            &[1, 2, 1, 0],
            &[0, 1, 2, 1],
            &[0, 0, 1, 2],
        ]);
        let f = ldl_decompose(&sigma).unwrap();
        assert_eq!(f.d, vec![rat(2), ratio(3, 2), ratio(4, 3), ratio(5, 4)]);
        assert_eq!(f.reassemble(), sigma);
    }

    #[test]
    fn identity_decomposes_trivially() {
        let id: SquareMatrix<Rat> = SquareMatrix::identity(4);
        let f = ldl_decompose(&id).unwrap();
        assert_eq!(f.l, id);
        assert_eq!(f.d, vec![rat(1); 4]);
    }

    #[test]
    fn rejects_asymmetric_and_non_pd() {
        let bad: SquareMatrix<Rat> = SquareMatrix::from_int_rows(&[&[1, 2], &[3, 1]]);
        assert_eq!(ldl_decompose(&bad), Err(MatrixError::NotSymmetric(1, 2)));

        let indefinite: SquareMatrix<Rat> = SquareMatrix::from_int_rows(&[&[1, 2], &[2, 1]]);
        assert_eq!(
            ldl_decompose(&indefinite),
            Err(MatrixError::NotPositiveDefinite(2))
        );
    }

    #[test]
    fn substitution_inverse_multiplies_back() {
        let mut rng = SplitMix64::new(0x1d1);
        for _ in 0..30 {
            let n = 1 + rng.below(6) as usize;
            let l = random_unit_lower(n, &mut rng);
            let inv = invert_unit_lower_substitution(&l).unwrap();
            assert_eq!(l.mul(&inv).unwrap(), SquareMatrix::identity(n));
        }
    }

    #[test]
    fn pathsum_matches_three_by_three_case() {
        // L with ones at (2,1) and (3,2): the only surviving tuple from 3 to
        // 1 passes through 2 with positive sign.
        let mut l: SquareMatrix<Rat> = SquareMatrix::identity(3);
        l.set(2, 1, rat(1));
        l.set(3, 2, rat(1));
        let inv = invert_unit_lower_pathsum(&l, ENUMERATION_CAP).unwrap();
        assert_eq!(inv.at(3, 1), &rat(1));
        assert_eq!(inv.at(2, 1), &rat(-1));
        assert_eq!(inv.at(3, 2), &rat(-1));
    }

    #[test]
    fn pathsum_of_identity_is_identity() {
        let id: SquareMatrix<Rat> = SquareMatrix::identity(5);
        assert_eq!(invert_unit_lower_pathsum(&id, ENUMERATION_CAP).unwrap(), id);
    }

    #[test]
    fn pathsum_cap_enforced() {
        let id: SquareMatrix<Rat> = SquareMatrix::identity(13);
        assert_eq!(
            invert_unit_lower_pathsum(&id, ENUMERATION_CAP),
            Err(MatrixError::DimensionCap(13, ENUMERATION_CAP))
        );
    }

    #[test]
    fn pathsum_agrees_with_substitution() {
        let mut rng = SplitMix64::new(0xa11);
        for _ in 0..50 {
            let n = 1 + rng.below(8) as usize;
            let l = random_unit_lower(n, &mut rng);
            let a = invert_unit_lower_substitution(&l).unwrap();
            let b = invert_unit_lower_pathsum(&l, ENUMERATION_CAP).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rejects_non_unit_lower() {
        let m: SquareMatrix<Rat> = SquareMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            invert_unit_lower_substitution(&m),
            Err(MatrixError::NotUnitLowerTriangular(1, 2))
        );
    }

    #[test]
    fn determinant_matches_product_of_pivots() {
        let mut rng = SplitMix64::new(0xde7);
        for _ in 0..25 {
            let n = 1 + rng.below(5) as usize;
            let l = random_unit_lower(n, &mut rng);
            let mut d = Vec::new();
            for _ in 0..n {
                d.push(ratio(1 + rng.below(4) as i64, 1 + rng.below(4) as i64));
            }
            let sigma = LdlFactors { l, d: d.clone() }.reassemble();
            let det = determinant(&sigma);
            let product = d.into_iter().fold(rat(1), |acc, v| acc * v);
            assert_eq!(det, product);
        }
    }

    #[test]
    fn submatrix_determinant_identity() {
        let id: SquareMatrix<Rat> = SquareMatrix::identity(6);
        assert_eq!(submatrix_determinant(&id, &[2, 4, 5]).unwrap(), rat(1));
        assert_eq!(
            submatrix_determinant(&id, &[]),
            Err(MatrixError::EmptyIndexSet)
        );
    }

    #[test]
    fn float_determinant_pivots() {
        let m: SquareMatrix<f64> =
            SquareMatrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!((determinant(&m) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn cauchy_binet_single_unit_column() {
        let b: RectMatrix<Rat> =
            RectMatrix::from_fn(3, 1, |i, _| if i == 1 { rat(1) } else { rat(0) });
        let w = vec![rat(1), rat(1), rat(1)];
        assert_eq!(
            cauchy_binet_expand(&b, &w, ENUMERATION_CAP).unwrap(),
            rat(1)
        );
    }

    #[test]
    fn cauchy_binet_matches_direct_determinant() {
        let mut rng = SplitMix64::new(0xcb2);
        for _ in 0..40 {
            let n = 2 + rng.below(5) as usize;
            let r = 1 + rng.below(n as u64) as usize;
            let mut b: RectMatrix<Rat> = RectMatrix::zero(n, r);
            for i in 1..=n {
                for j in 1..=r {
                    b.set(i, j, rat(rng.range_inclusive(-2, 2)));
                }
            }
            let w: Vec<Rat> = (0..n).map(|_| rat(1 + rng.below(3) as i64)).collect();
            let expanded = cauchy_binet_expand(&b, &w, ENUMERATION_CAP).unwrap();

            // Direct route: det(Bᵀ diag(w) B).
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
    }

    #[test]
    fn ldl_uniqueness_recovers_factors() {
        let mut rng = SplitMix64::new(0x717);
        for _ in 0..25 {
            let n = 1 + rng.below(6) as usize;
            let l = random_unit_lower(n, &mut rng);
            let d: Vec<Rat> = (0..n)
                .map(|_| ratio(1 + rng.below(4) as i64, 1 + rng.below(4) as i64))
                .collect();
            let sigma = LdlFactors {
                l: l.clone(),
                d: d.clone(),
            }
            .reassemble();
            let f = ldl_decompose(&sigma).unwrap();
            assert_eq!(f.l, l);
            assert_eq!(f.d, d);
        }
    }
}
