//! Dense matrices over a generic coefficient type, with the exact linear
//! algebra the rest of the crate needs: fraction-free determinants,
//! characteristic polynomials by interpolation, and Gaussian elimination
//! over a field.

use super::poly::{interpolate, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::{Div, Mul, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }
}

impl<T: Clone + Zero + Mul<Output = T>> Matrix<T> {
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.at(r, k).clone() * rhs.at(k, c).clone();
            }
            acc
        })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One + PartialEq + Sub<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    /// Determinant by the Bareiss fraction-free scheme. All divisions are
    /// exact, so this is valid over any integral domain.
    pub fn det_bareiss(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.data.clone();
        let idx = |r: usize, c: usize| r * n + c;
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(idx(k, c), idx(r, c));
                        }
                        sign_flip = !sign_flip;
                    }
                    None => return T::zero(),
                }
            }
            let pivot = a[idx(k, k)].clone();
            for r in k + 1..n {
                for c in k + 1..n {
                    let num = a[idx(r, c)].clone() * pivot.clone()
                        - a[idx(r, k)].clone() * a[idx(k, c)].clone();
                    a[idx(r, c)] = num / prev.clone();
                }
                a[idx(r, k)] = T::zero();
            }
            prev = pivot;
        }
        let det = a[idx(n - 1, n - 1)].clone();
        if sign_flip {
            T::zero() - det
        } else {
            det
        }
    }
}

impl Matrix<BigInt> {
    /// Characteristic polynomial `det(xI - A)`, computed exactly by
    /// evaluation at integer nodes and interpolation. Monic of degree n.
    pub fn char_poly(&self) -> Polynomial<BigInt> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Polynomial::constant(BigInt::one());
        }
        let points: Vec<(BigRational, BigRational)> = (0..=n as i64)
            .map(|t| {
                let shifted = Matrix::from_fn(n, n, |r, c| {
                    let diag = if r == c { BigInt::from(t) } else { BigInt::zero() };
                    diag - self.at(r, c)
                });
                (
                    BigRational::from_integer(BigInt::from(t)),
                    BigRational::from_integer(shifted.det_bareiss()),
                )
            })
            .collect();
        let poly = interpolate(&points)
            .to_integer()
            .expect("characteristic polynomial has integer coefficients");
        debug_assert!(poly.is_monic());
        poly
    }
}

/// Solve `A x = b` over the rationals by Gauss-Jordan elimination.
/// Returns a particular solution (free variables set to zero), or `None`
/// if the system is inconsistent.
pub fn solve_rational(a: &Matrix<BigRational>, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.rows(), b.len());
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col].clone();
        for c in col..=cols {
            let v = std::mem::replace(&mut m[rank][c], BigRational::zero());
            m[rank][c] = v / &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let sub = &factor * &m[rank][c];
                    let v = std::mem::replace(&mut m[r][c], BigRational::zero());
                    m[r][c] = v - sub;
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // Inconsistent when a zero row has a nonzero right-hand side.
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for col in 0..cols {
        if pivot_of_col[col] != usize::MAX {
            x[col] = m[pivot_of_col[col]][cols].clone();
        }
    }
    // Guard against inconsistency hidden by free columns.
    for r in 0..rows {
        let mut acc = BigRational::zero();
        for c in 0..cols {
            acc += a.at(r, c) * &x[c];
        }
        if acc != b[r] {
            return None;
        }
    }
    Some(x)
}

/// Rank of a matrix over a field.
pub fn rank_field<T>(a: &Matrix<T>) -> usize
where
    T: Clone + Zero + One + PartialEq + Sub<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<T>> = (0..rows).map(|r| a.row(r).to_vec()).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let pivot = m[rank][col].clone();
        for c in col..cols {
            let v = std::mem::replace(&mut m[rank][c], T::zero());
            m[rank][c] = v / pivot.clone();
        }
        for r in rank + 1..rows {
            if !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let sub = factor.clone() * m[rank][c].clone();
                    let v = std::mem::replace(&mut m[r][c], T::zero());
                    m[r][c] = v - sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant_small() {
        let m = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det_bareiss(), BigInt::from(-2));
        let m = int_matrix(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(m.det_bareiss(), BigInt::from(-2));
        let singular = int_matrix(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det_bareiss(), BigInt::zero());
    }

    #[test]
    fn char_poly_fibonacci_matrix() {
        let m = int_matrix(&[&[0, 1], &[1, 1]]);
        assert_eq!(m.char_poly(), Polynomial::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn char_poly_identity() {
        let m = Matrix::<BigInt>::identity(3);
        // (x-1)^3 = x^3 - 3x^2 + 3x - 1
        assert_eq!(m.char_poly(), Polynomial::from_i64(&[-1, 3, -3, 1]));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        let a = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(1), q(-1)], vec![q(2), q(0)]]);
        let x = solve_rational(&a, &[q(3), q(1), q(4)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        assert!(solve_rational(&a, &[q(3), q(1), q(5)]).is_none());
    }

    #[test]
    fn rank_over_rationals() {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        let a = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(rank_field(&a), 1);
        let b = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(0), q(1)]]);
        assert_eq!(rank_field(&b), 2);
    }
}
