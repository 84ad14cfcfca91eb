//! Exact rational matrices and the row-reduction kernel.
//!
//! Everything above this layer (subspaces, brackets, Killing forms) reduces to
//! Gauss-Jordan elimination over `Rational`, so no tolerances appear anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Coordinate vector in some ambient space.
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn int_vector(values: &[i64]) -> Vector {
    values.iter().map(|&v| rat(v)).collect()
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `a += s * b`, skipping the work when `s` is zero.
pub(crate) fn axpy(a: &mut [Rational], s: &Rational, b: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += s * y;
        }
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row vectors. `cols` is needed so that an empty
    /// row list still knows its width.
    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self, Error> {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: n_rows,
            cols,
            entries,
        })
    }

    /// Convenience constructor for integer literals in tests and fixtures.
    ///
    /// Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| int_vector(r)).collect();
        Self::from_rows(rows, cols).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        self.row_iter().map(<[Rational]>::to_vec).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let start = r * other.cols;
                axpy(&mut out.entries[start..start + other.cols], a, other.row(k));
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vector, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.row_iter().map(|row| dot(row, v)).collect())
    }

    pub fn trace(&self) -> Result<Rational, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i)))
    }

    /// Reduced row echelon form with zero rows dropped, plus the pivot
    /// column of each remaining row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = rref_in_place(&mut rows, self.cols);
        rows.truncate(pivots.len());
        let m = Matrix::from_rows(rows, self.cols).expect("rref keeps widths");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self · v = 0}` as the rows of an RREF matrix.
    pub fn kernel(&self) -> Matrix {
        let (reduced, pivots) = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(n - pivots.len());
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = unit_vector(n, free);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(r, free).clone();
            }
            basis.push(v);
        }
        let mut rows = basis;
        let kept = rref_in_place(&mut rows, n);
        rows.truncate(kept.len());
        Matrix::from_rows(rows, n).expect("kernel vectors have ambient width")
    }

    /// Stacks `other` beneath `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Gauss-Jordan elimination on a list of rows. Rows are permuted and
/// rewritten so that the first `pivots.len()` rows form the RREF; the rest
/// are zero.
pub(crate) fn rref_in_place(rows: &mut [Vector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        if !inv.is_one() {
            for x in rows[next].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = -row[col].clone();
            axpy(row, &factor, &pivot_row);
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_dependent_rows() {
        let (r, p) = Matrix::from_ints(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, Matrix::from_ints(&[&[1, 2]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_identity_and_permutation() {
        let (r, p) = Matrix::identity(3).rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);

        let (r, p) = Matrix::from_ints(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_normalizes_fractions() {
        let m = Matrix::from_ints(&[&[3, 1, 2], &[6, 2, 5]]);
        let (r, p) = m.rref();
        assert_eq!(p, vec![0, 2]);
        assert_eq!(r.row(0), &[rat(1), ratio(1, 3), rat(0)][..]);
        assert_eq!(r.row(1), &int_vector(&[0, 0, 1])[..]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(2).kernel().rows(), 0);
        assert_eq!(
            Matrix::from_ints(&[&[1, 1]]).kernel(),
            Matrix::from_ints(&[&[1, -1]])
        );
        assert_eq!(Matrix::zeros(2, 3).kernel(), Matrix::identity(3));
    }

    #[test]
    fn kernel_of_empty_row_set() {
        let m = Matrix::zeros(0, 2);
        assert_eq!(m.kernel(), Matrix::identity(2));
    }

    #[test]
    fn mat_mul_examples() {
        let m = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(Matrix::identity(2).mul(&m).unwrap(), m);
        let u = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(u.mul(&u).unwrap(), Matrix::from_ints(&[&[1, 2], &[0, 1]]));
        assert!(m.mul(&Matrix::zeros(2, 2)).unwrap().is_zero());
    }

    #[test]
    fn mat_mul_dimension_mismatch() {
        let err = Matrix::zeros(2, 3).mul(&Matrix::zeros(2, 3)).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                expected: 3,
                found: 2
            }
        ));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(Matrix::identity(3).trace().unwrap(), rat(3));
        assert_eq!(
            Matrix::from_ints(&[&[1, 2], &[0, 1]]).trace().unwrap(),
            rat(2)
        );
        assert_eq!(Matrix::zeros(4, 4).trace().unwrap(), rat(0));
        assert!(matches!(
            Matrix::zeros(2, 3).trace(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn rationals_stay_reduced() {
        let x = ratio(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        let z = ratio(0, 7);
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn large_entries_do_not_overflow() {
        // Products of 2^40-sized pivots exceed i64.
        let big = 1i64 << 40;
        let m = Matrix::from_ints(&[&[big, 1], &[1, big]]);
        let sq = m.mul(&m).unwrap();
        let expected = BigInt::from(big) * BigInt::from(big) + BigInt::from(1);
        assert_eq!(sq.get(0, 0), &Rational::from_integer(expected));
        assert_eq!(m.rank(), 2);
    }
}
