//! Canonical subspaces of `Q^n`.
//!
//! A [`Subspace`] stores its basis in reduced row echelon form, so two
//! subspaces are equal exactly when their basis matrices are identical. Ideals
//! of a Lie algebra are plain subspaces of its coordinate space.

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{axpy, is_zero_vector, rref_in_place, unit_vector, Matrix, Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Smallest subspace containing every vector in `vectors`.
    pub fn span<V: AsRef<[Rational]>>(vectors: &[V], ambient_dim: usize) -> Result<Self, Error> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            if !is_zero_vector(v) {
                rows.push(v.to_vec());
            }
        }
        Ok(Self::from_rows_unchecked(rows, ambient_dim))
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Self::from_rows_unchecked(m.to_rows(), m.cols())
    }

    pub(crate) fn from_rows_unchecked(mut rows: Vec<Vector>, ambient_dim: usize) -> Self {
        let pivots = rref_in_place(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        let basis = Matrix::from_rows(rows, ambient_dim).expect("rows share the ambient width");
        Self { basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// RREF basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_iter()
    }

    /// Pivot column of each basis row, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot; the unit vectors at these columns
    /// complete the basis to the whole space.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` against the basis. The result vanishes on every pivot
    /// column and is zero exactly when `v` lies in the subspace.
    pub fn residue(&self, v: &[Rational]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.row_iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let factor = -r[p].clone();
            axpy(&mut r, &factor, row);
        }
        r
    }

    /// Coefficients of `v` in the RREF basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !is_zero_vector(&self.residue(v)) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim() && is_zero_vector(&self.residue(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim(),
                right: other.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let mut rows = self.basis.to_rows();
        rows.extend(other.basis.to_rows());
        Ok(Self::from_rows_unchecked(rows, self.ambient_dim()))
    }

    /// Intersection by solving `x·A = y·B` for the coefficient vectors.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let n = self.ambient_dim();
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Subspace::zero(n));
        }
        // Columns: coefficients of A's rows then of B's rows; one equation per coordinate.
        let mut system = Matrix::zeros(n, a + b);
        for c in 0..n {
            for r in 0..a {
                system.set(c, r, self.basis.get(r, c).clone());
            }
            for r in 0..b {
                system.set(c, a + r, -other.basis.get(r, c).clone());
            }
        }
        let kernel = system.kernel();
        let mut vectors = Vec::with_capacity(kernel.rows());
        for coeffs in kernel.row_iter() {
            let mut v = vec![Rational::zero(); n];
            for (r, x) in coeffs[..a].iter().enumerate() {
                axpy(&mut v, x, self.basis.row(r));
            }
            vectors.push(v);
        }
        Ok(Self::from_rows_unchecked(vectors, n))
    }

    /// Containment `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool, Error> {
        self.check_ambient(other)?;
        Ok(self.dim() <= other.dim() && self.basis_vectors().all(|v| other.contains(v)))
    }

    /// Standard basis vectors at the free columns.
    pub fn complement_basis(&self) -> Vec<Vector> {
        let n = self.ambient_dim();
        self.free_columns()
            .into_iter()
            .map(|c| unit_vector(n, c))
            .collect()
    }
}
