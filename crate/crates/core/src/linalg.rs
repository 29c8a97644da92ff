//! Exact dense linear algebra over [`Rational`]: Vandermonde
//! construction, determinants by fraction-free (Bareiss) elimination,
//! Cramer's rule, and an independent elimination solver used as a
//! cross-check.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Pow, Zero};

use crate::rational::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    NonSquare { rows: usize, cols: usize },
    DimensionMismatch { expected: usize, got: usize },
    Singular,
}

impl fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinAlgError::NonSquare { rows, cols } => {
                write!(f, "matrix is not square ({rows}x{cols})")
            }
            LinAlgError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected} entries, got {got}")
            }
            LinAlgError::Singular => write!(f, "singular system"),
        }
    }
}

impl std::error::Error for LinAlgError {}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        Matrix::new(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Copy with column `j` replaced, as needed by Cramer's rule.
    pub fn with_column(&self, j: usize, col: &[Rational]) -> Matrix {
        assert_eq!(col.len(), self.rows);
        let mut m = self.clone();
        for (i, v) in col.iter().enumerate() {
            m.entries[i * m.cols + j] = v.clone();
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Exact determinant by fraction-free elimination.
    ///
    /// Denominators are cleared row by row first, so the elimination
    /// itself runs entirely on big integers with exact divisions.
    pub fn determinant(&self) -> Result<Rational, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let (int_rows, scale) = self.cleared_rows();
        let det = bareiss_det(int_rows);
        Ok(Rational::from_integer(det) / Rational::from_integer(scale))
    }

    /// Integer matrix obtained by scaling each row by the lcm of its
    /// denominators, together with the product of those scale factors.
    fn cleared_rows(&self) -> (Vec<Vec<Integer>>, Integer) {
        let mut scale = Integer::one();
        let rows = (0..self.rows)
            .map(|i| {
                let lcm = (0..self.cols)
                    .fold(Integer::one(), |l, j| l.lcm(self.get(i, j).denom()));
                scale *= &lcm;
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect();
        (rows, scale)
    }
}

/// Bareiss fraction-free determinant of an integer matrix. Every
/// division is exact; row swaps flip the sign.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    if negate {
        -det
    } else {
        det
    }
}

/// The (d+1)x(d+1) interpolation matrix with entry `i^j` at 1-indexed
/// row `i`, column `j`: row `i` is the evaluation of
/// `a_1 n + ... + a_{d+1} n^{d+1}` at `n = i`.
pub fn vandermonde(d: u32) -> Matrix {
    let n = d as usize + 1;
    let rows = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| Rational::from_integer(Integer::from(i).pow(j as u32)))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows)
}

fn check_system(m: &Matrix, b: &[Rational]) -> Result<(), LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if b.len() != m.rows() {
        return Err(LinAlgError::DimensionMismatch {
            expected: m.rows(),
            got: b.len(),
        });
    }
    Ok(())
}

/// Solves `M x = b` by Cramer's rule: `x_i = det(M_i)/det(M)` with
/// `M_i` the matrix with column `i` replaced by `b`.
pub fn cramer_solve(m: &Matrix, b: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
    check_system(m, b)?;
    let det = m.determinant()?;
    if det.is_zero() {
        return Err(LinAlgError::Singular);
    }
    (0..m.cols())
        .map(|j| Ok(m.with_column(j, b).determinant()? / &det))
        .collect()
}

/// Solves `M x = b` by fraction-free forward elimination on the
/// augmented matrix with back-substitution. Independent of
/// [`cramer_solve`]; the two must agree on every solvable system.
pub fn gauss_solve(m: &Matrix, b: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
    check_system(m, b)?;
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }

    // Augment, then clear denominators row by row; row scaling does not
    // change the solution.
    let mut aug: Vec<Vec<Integer>> = (0..n)
        .map(|i| {
            let lcm = (0..n)
                .fold(Integer::one(), |l, j| l.lcm(m.get(i, j).denom()))
                .lcm(b[i].denom());
            (0..n)
                .map(|j| m.get(i, j).numer() * (&lcm / m.get(i, j).denom()))
                .chain(std::iter::once(b[i].numer() * (&lcm / b[i].denom())))
                .collect()
        })
        .collect();

    let mut prev = Integer::one();
    for k in 0..n {
        if aug[k][k].is_zero() {
            match (k + 1..n).find(|&r| !aug[r][k].is_zero()) {
                Some(r) => aug.swap(k, r),
                None => return Err(LinAlgError::Singular),
            }
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                aug[i][j] = (&aug[i][j] * &aug[k][k] - &aug[i][k] * &aug[k][j]) / &prev;
            }
            aug[i][k] = Integer::zero();
        }
        prev = aug[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(aug[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(aug[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(aug[i][i].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    fn int_matrix(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
                .collect(),
        )
    }

    fn int_vec(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    /// Cofactor-expansion determinant, usable up to 4x4; the
    /// independent oracle for the elimination path.
    fn cofactor_det(m: &Matrix) -> Rational {
        let n = m.rows();
        assert!(m.is_square() && n <= 4);
        if n == 0 {
            return Rational::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut det = Rational::zero();
        for j in 0..n {
            let minor = Matrix::from_rows(
                (1..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| m.get(i, c).clone())
                            .collect()
                    })
                    .collect(),
            );
            let term = m.get(0, j) * &cofactor_det(&minor);
            if j % 2 == 0 {
                det += term;
            } else {
                det -= term;
            }
        }
        det
    }

    #[test]
    fn vandermonde_worked_example() {
        assert_eq!(vandermonde(1), int_matrix(&[&[1, 1], &[2, 4]]));
        assert_eq!(vandermonde(0), int_matrix(&[&[1]]));
        assert_eq!(
            vandermonde(2),
            int_matrix(&[&[1, 1, 1], &[2, 4, 8], &[3, 9, 27]])
        );
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(int_matrix(&[&[1, 1], &[2, 4]]).determinant().unwrap(), rat(2, 1));
        assert_eq!(Matrix::identity(3).determinant().unwrap(), rat(1, 1));
        assert_eq!(vandermonde(2).determinant().unwrap(), rat(12, 1));
    }

    #[test]
    fn determinant_rejects_non_square() {
        let m = Matrix::new(1, 2, int_vec(&[1, 2]));
        assert!(matches!(
            m.determinant(),
            Err(LinAlgError::NonSquare { rows: 1, cols: 2 })
        ));
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        let m = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(-3, 1), rat(2, 5)],
            vec![rat(0, 1), rat(4, 3), rat(1, 1)],
            vec![rat(-2, 1), rat(7, 2), rat(5, 6)],
        ]);
        assert_eq!(m.determinant().unwrap(), cofactor_det(&m));
    }

    /// Node-product form: det = prod_i i * prod_{i<j} (j - i) over the
    /// nodes 1..=d+1.
    fn vandermonde_det_formula(d: u32) -> Rational {
        let n = i64::from(d) + 1;
        let mut det = Integer::one();
        for i in 1..=n {
            det *= Integer::from(i);
        }
        for i in 1..=n {
            for j in i + 1..=n {
                det *= Integer::from(j - i);
            }
        }
        Rational::from_integer(det)
    }

    #[test]
    fn vandermonde_determinants_match_node_product() {
        for d in 0..=30 {
            let det = vandermonde(d).determinant().unwrap();
            assert!(!det.is_zero());
            assert_eq!(det, vandermonde_det_formula(d), "d = {d}");
        }
    }

    #[test]
    fn cramer_worked_example() {
        let m = int_matrix(&[&[1, 1], &[2, 4]]);
        let x = cramer_solve(&m, &int_vec(&[1, 3])).unwrap();
        assert_eq!(x, vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn cramer_identity_returns_rhs() {
        let b = vec![rat(7, 3), rat(-2, 1), rat(0, 1)];
        assert_eq!(cramer_solve(&Matrix::identity(3), &b).unwrap(), b);
    }

    #[test]
    fn cramer_interpolates_sum_of_squares() {
        let b = int_vec(&[1, 5, 14]);
        let x = cramer_solve(&vandermonde(2), &b).unwrap();
        assert_eq!(x, vec![rat(1, 6), rat(1, 2), rat(1, 3)]);
    }

    #[test]
    fn gauss_matches_cramer_on_worked_examples() {
        let cases: Vec<(Matrix, Vec<Rational>)> = vec![
            (int_matrix(&[&[1, 1], &[2, 4]]), int_vec(&[1, 3])),
            (Matrix::identity(3), vec![rat(7, 3), rat(-2, 1), rat(0, 1)]),
            (vandermonde(2), int_vec(&[1, 5, 14])),
        ];
        for (m, b) in cases {
            assert_eq!(gauss_solve(&m, &b).unwrap(), cramer_solve(&m, &b).unwrap());
        }
    }

    #[test]
    fn singular_system_is_reported() {
        let m = int_matrix(&[&[1, 1], &[1, 1]]);
        assert_eq!(gauss_solve(&m, &int_vec(&[1, 2])), Err(LinAlgError::Singular));
        assert_eq!(cramer_solve(&m, &int_vec(&[1, 2])), Err(LinAlgError::Singular));
    }

    #[test]
    fn one_by_one_system() {
        let m = int_matrix(&[&[5]]);
        assert_eq!(gauss_solve(&m, &int_vec(&[10])).unwrap(), int_vec(&[2]));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let m = Matrix::identity(2);
        assert!(matches!(
            cramer_solve(&m, &int_vec(&[1])),
            Err(LinAlgError::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    fn arb_matrix_and_rhs() -> impl Strategy<Value = (Matrix, Vec<Rational>)> {
        (1usize..=4).prop_flat_map(|n| {
            (
                prop::collection::vec((-9i64..=9, 1i64..=4), n * n),
                prop::collection::vec((-9i64..=9, 1i64..=4), n),
            )
                .prop_map(move |(entries, b)| {
                    (
                        Matrix::new(n, n, entries.into_iter().map(|(p, q)| rat(p, q)).collect()),
                        b.into_iter().map(|(p, q)| rat(p, q)).collect(),
                    )
                })
        })
    }

    proptest! {
        #[test]
        fn solvers_agree_and_residual_vanishes((m, b) in arb_matrix_and_rhs()) {
            prop_assert_eq!(m.determinant().unwrap(), cofactor_det(&m));
            if m.determinant().unwrap().is_zero() {
                prop_assert_eq!(cramer_solve(&m, &b), Err(LinAlgError::Singular));
                prop_assert_eq!(gauss_solve(&m, &b), Err(LinAlgError::Singular));
            } else {
                let x = cramer_solve(&m, &b).unwrap();
                prop_assert_eq!(&x, &gauss_solve(&m, &b).unwrap());
                prop_assert_eq!(m.mul_vec(&x), b);
            }
        }
    }
}
