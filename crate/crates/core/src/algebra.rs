//! Lie algebras given by structure constants over the rationals.
//!
//! `[e_i, e_j] = Σ_k c^k_{ij} e_k`. Indices are 0-based in the API and
//! 1-based in anything shown to a user.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{axpy, is_zero_vector, unit_vector, zero_vector, Matrix, Rational, Vector};
use crate::subspace::Subspace;

/// Dense `n × n × n` table of structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    dim: usize,
    table: Vec<Rational>,
}

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            table: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// Wraps a raw table indexed `(i * n + j) * n + k`. No antisymmetry
    /// completion happens here; [`LieAlgebra::validate`] reports violations.
    pub fn from_dense(dim: usize, table: Vec<Rational>) -> Result<Self, Error> {
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: table.len(),
            });
        }
        Ok(Self { dim, table })
    }

    pub fn builder(dim: usize) -> ConstantsBuilder {
        ConstantsBuilder {
            constants: Self::zero(dim),
            defined: BTreeSet::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.dim + j) * self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[self.offset(i, j) + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_of_basis(&self, i: usize, j: usize) -> &[Rational] {
        let o = self.offset(i, j);
        &self.table[o..o + self.dim]
    }

    /// Nonzero entries `(i, j, k, c^k_{ij})` with `i < j`, in index order.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        let n = self.dim;
        (0..n).flat_map(move |i| {
            (i + 1..n).flat_map(move |j| {
                (0..n).filter_map(move |k| {
                    let c = self.get(i, j, k);
                    (!c.is_zero()).then_some((i, j, k, c))
                })
            })
        })
    }
}

/// Fills a table one bracket at a time, deriving `[e_j, e_i] = -[e_i, e_j]`.
#[derive(Debug)]
pub struct ConstantsBuilder {
    constants: StructureConstants,
    defined: BTreeSet<(usize, usize)>,
}

impl ConstantsBuilder {
    /// Sets `[e_i, e_j] = image`. Defining a pair twice, in either
    /// orientation, is an error; so is a nonzero `[e_i, e_i]`.
    pub fn bracket(&mut self, i: usize, j: usize, image: &[Rational]) -> Result<&mut Self, Error> {
        let n = self.constants.dim;
        for index in [i, j] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, dim: n });
            }
        }
        if image.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: image.len(),
            });
        }
        let key = (i.min(j), i.max(j));
        if !self.defined.insert(key) {
            return Err(Error::DuplicateBracket { i, j });
        }
        if i == j {
            if let Some(k) = image.iter().position(|c| !c.is_zero()) {
                return Err(Error::InvalidAlgebra(Violation::Antisymmetry { i, j, k }));
            }
            return Ok(self);
        }
        let (a, b) = (self.constants.offset(i, j), self.constants.offset(j, i));
        for (k, c) in image.iter().enumerate() {
            self.constants.table[a + k] = c.clone();
            self.constants.table[b + k] = -c.clone();
        }
        Ok(self)
    }

    pub fn bracket_ints(&mut self, i: usize, j: usize, image: &[i64]) -> Result<&mut Self, Error> {
        self.bracket(i, j, &crate::linalg::int_vector(image))
    }

    pub fn build(&self) -> StructureConstants {
        self.constants.clone()
    }
}

/// First identity a table fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `c^k_{ij} ≠ -c^k_{ji}` (or `c^k_{ii} ≠ 0` when `i == j`).
    Antisymmetry { i: usize, j: usize, k: usize },
    /// The Jacobi sum on `(e_i, e_j, e_k)` is `sum`, not zero.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        sum: Vector,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => write!(
                f,
                "antisymmetry fails for coefficient {} of [e{},e{}]",
                k + 1,
                i + 1,
                j + 1
            ),
            Violation::Jacobi { i, j, k, sum } => {
                write!(
                    f,
                    "Jacobi identity fails on triple ({},{},{}): sum = (",
                    i + 1,
                    j + 1,
                    k + 1
                )?;
                for (t, c) in sum.iter().enumerate() {
                    if t > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Valid,
    Violated(Violation),
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validation::Valid)
    }
}

/// A finite-dimensional Lie algebra over Q with named basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    constants: StructureConstants,
    labels: Vec<String>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Pairs a table with labels. The bracket axioms are not checked; use
    /// [`LieAlgebra::validated`] when the input is untrusted.
    pub fn new(constants: StructureConstants, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != constants.dim() {
            return Err(Error::InvalidLabels(format!(
                "expected {} labels, got {}",
                constants.dim(),
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if label.is_empty() || label.chars().any(|c| c.is_whitespace() || c == '#') {
                return Err(Error::InvalidLabels(format!(
                    "'{label}' is not a valid label"
                )));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::InvalidLabels(format!("'{label}' appears twice")));
            }
        }
        Ok(Self { constants, labels })
    }

    pub fn validated(constants: StructureConstants, labels: Vec<String>) -> Result<Self, Error> {
        let algebra = Self::new(constants, labels)?;
        match algebra.validate() {
            Validation::Valid => Ok(algebra),
            Validation::Violated(v) => Err(Error::InvalidAlgebra(v)),
        }
    }

    pub fn with_default_labels(constants: StructureConstants) -> Result<Self, Error> {
        let labels = default_labels(constants.dim());
        Self::new(constants, labels)
    }

    pub fn abelian(n: usize) -> Self {
        Self::with_default_labels(StructureConstants::zero(n)).expect("default labels are valid")
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn zero_ideal(&self) -> Subspace {
        Subspace::zero(self.dim())
    }

    /// Checks antisymmetry on all pairs, then Jacobi on basis triples
    /// `i < j < k` (enough by trilinearity once antisymmetry holds).
    pub fn validate(&self) -> Validation {
        let n = self.dim();
        let c = &self.constants;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if *c.get(i, j, k) != -c.get(j, i, k).clone() {
                        return Validation::Violated(Violation::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let sum =
                        self.jacobi_sum(&unit_vector(n, i), &unit_vector(n, j), &unit_vector(n, k));
                    if !is_zero_vector(&sum) {
                        return Validation::Violated(Violation::Jacobi { i, j, k, sum });
                    }
                }
            }
        }
        Validation::Valid
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobi_sum(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let mut s = self.bracket_unchecked(&self.bracket_unchecked(x, y), z);
        let t = self.bracket_unchecked(&self.bracket_unchecked(y, z), x);
        let u = self.bracket_unchecked(&self.bracket_unchecked(z, x), y);
        for ((a, b), c) in s.iter_mut().zip(t).zip(u) {
            *a += b + c;
        }
        s
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), Error> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_ambient(&self, s: &Subspace) -> Result<(), Error> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: self.dim(),
                right: s.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector, Error> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.constants.bracket_of_basis(i, j));
            }
        }
        out
    }

    /// `[A, B]`: span of brackets of basis vectors.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(a)?;
        self.check_ambient(b)?;
        let mut images = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                let v = self.bracket_unchecked(x, y);
                if !is_zero_vector(&v) {
                    images.push(v);
                }
            }
        }
        Ok(Subspace::from_rows_unchecked(images, self.dim()))
    }

    /// `[L, s]`, using basis vectors of `L` directly.
    pub fn bracket_with_full(&self, s: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(s)?;
        let n = self.dim();
        let mut images = Vec::with_capacity(n * s.dim());
        for i in 0..n {
            for y in s.basis_vectors() {
                let mut v = zero_vector(n);
                for (j, yj) in y.iter().enumerate() {
                    if i != j {
                        axpy(&mut v, yj, self.constants.bracket_of_basis(i, j));
                    }
                }
                if !is_zero_vector(&v) {
                    images.push(v);
                }
            }
        }
        Ok(Subspace::from_rows_unchecked(images, n))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        if s.ambient_dim() != self.dim() {
            return false;
        }
        let n = self.dim();
        (0..n).all(|i| {
            s.basis_vectors()
                .all(|y| s.contains(&self.bracket_unchecked(&unit_vector(n, i), y)))
        })
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.bracket_spaces(s, s)
            .and_then(|b| b.leq(s))
            .unwrap_or(false)
    }

    pub(crate) fn require_ideal(&self, s: &Subspace) -> Result<(), Error> {
        self.check_ambient(s)?;
        if self.is_ideal(s) {
            Ok(())
        } else {
            Err(Error::NotAnIdeal)
        }
    }

    /// Smallest ideal containing `vectors`: iterate `s ← s + [L, s]`.
    pub fn ideal_closure<V: AsRef<[Rational]>>(&self, vectors: &[V]) -> Result<Subspace, Error> {
        let mut s = Subspace::span(vectors, self.dim())?;
        loop {
            let next = s.sum(&self.bracket_with_full(&s)?)?;
            if next == s {
                return Ok(s);
            }
            s = next;
        }
    }

    /// Matrix of `ad(x) = [x, ·]`; column `j` is `[x, e_j]`.
    pub fn adjoint(&self, x: &[Rational]) -> Result<Matrix, Error> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.constants.bracket_of_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        let v = m.get(k, j) + xi * c;
                        m.set(k, j, v);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Gram matrix of the Killing form, `K_ij = tr(ad e_i · ad e_j)`.
    pub fn killing(&self) -> KillingMatrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n)
            .map(|i| {
                self.adjoint(&unit_vector(n, i))
                    .expect("unit vector has length n")
            })
            .collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                // tr(AB) = Σ_{r,c} A[r,c] B[c,r]
                let mut t = Rational::zero();
                for r in 0..n {
                    for c in 0..n {
                        let a = ads[i].get(r, c);
                        if a.is_zero() {
                            continue;
                        }
                        let b = ads[j].get(c, r);
                        if !b.is_zero() {
                            t += a * b;
                        }
                    }
                }
                k.set(j, i, t.clone());
                k.set(i, j, t);
            }
        }
        KillingMatrix(k)
    }

    /// `s^⊥` with respect to the Killing form.
    pub fn killing_orthogonal(&self, s: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(s)?;
        Ok(self.killing().orthogonal(s))
    }

    /// `s` viewed as a Lie algebra in its own RREF basis.
    ///
    /// The `r`-th basis vector of the result is row `r` of `s.basis()`.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra, Error> {
        self.check_ambient(s)?;
        let d = s.dim();
        let rows: Vec<&[Rational]> = s.basis_vectors().collect();
        let mut table = vec![Rational::zero(); d * d * d];
        for p in 0..d {
            for q in 0..d {
                if p == q {
                    continue;
                }
                let image = self.bracket_unchecked(rows[p], rows[q]);
                let coords = s.coordinates(&image).ok_or(Error::NotClosed)?;
                let o = (p * d + q) * d;
                table[o..o + d].clone_from_slice(&coords);
            }
        }
        let constants = StructureConstants::from_dense(d, table)?;
        LieAlgebra::with_default_labels(constants)
    }

    /// `L / i` with basis the cosets of `e_c` for the non-pivot columns of
    /// `i`, in index order.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, Projection), Error> {
        self.require_ideal(ideal)?;
        let projection = Projection {
            ideal: ideal.clone(),
            free: ideal.free_columns(),
        };
        let q = projection.free.len();
        let mut table = vec![Rational::zero(); q * q * q];
        for (p, &a) in projection.free.iter().enumerate() {
            for (r, &b) in projection.free.iter().enumerate() {
                if a == b {
                    continue;
                }
                let image = projection.apply(self.constants.bracket_of_basis(a, b));
                let o = (p * q + r) * q;
                table[o..o + q].clone_from_slice(&image);
            }
        }
        let labels = projection
            .free
            .iter()
            .map(|&c| self.labels[c].clone())
            .collect();
        let algebra = LieAlgebra::new(StructureConstants::from_dense(q, table)?, labels)?;
        Ok((algebra, projection))
    }

    /// Renders `v` as a combination of basis labels, e.g. `x + 1/2*y`.
    pub fn format_vector(&self, v: &[Rational]) -> String {
        format_combination(v, &self.labels)
    }
}

pub fn format_combination(v: &[Rational], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let negative = c < &Rational::zero();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if magnitude != Rational::from_integer(1.into()) {
            out.push_str(&format!("{magnitude}*"));
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Gram matrix of the Killing form on the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingMatrix(pub Matrix);

impl KillingMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    /// `K(x, y) = xᵀ K y`.
    pub fn form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let ky = self.0.apply(y).expect("vector length matches the algebra");
        crate::linalg::dot(x, &ky)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.0.rank() == self.0.rows()
    }

    /// `{v : K(v, b) = 0 for every basis vector b of s}`.
    pub fn orthogonal(&self, s: &Subspace) -> Subspace {
        let constraints = s
            .basis()
            .mul(&self.0)
            .expect("subspace ambient matches the Killing matrix");
        Subspace::row_space(&constraints.kernel())
    }
}

/// Canonical projection `L → L / I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    ideal: Subspace,
    free: Vec<usize>,
}

impl Projection {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn quotient_dim(&self) -> usize {
        self.free.len()
    }

    /// Coordinates of `v + I` in the quotient basis.
    pub fn apply(&self, v: &[Rational]) -> Vector {
        let r = self.ideal.residue(v);
        self.free.iter().map(|&c| r[c].clone()).collect()
    }

    /// The representative of a coset supported on the free columns.
    pub fn lift(&self, coords: &[Rational]) -> Vector {
        let mut v = zero_vector(self.ideal.ambient_dim());
        for (&c, x) in self.free.iter().zip(coords) {
            v[c] = x.clone();
        }
        v
    }

    /// Full preimage of a subspace of the quotient; always contains `I`.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        let mut rows: Vec<Vector> = s.basis_vectors().map(|v| self.lift(v)).collect();
        rows.extend(self.ideal.basis().to_rows());
        Subspace::from_rows_unchecked(rows, self.ideal.ambient_dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int_vector, rat};

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    /// Basis x, y, z with [z,x] = x, [z,y] = x + y.
    fn s32() -> LieAlgebra {
        let mut b = StructureConstants::builder(3);
        b.bracket_ints(2, 0, &[1, 0, 0]).unwrap();
        b.bracket_ints(2, 1, &[1, 1, 0]).unwrap();
        LieAlgebra::validated(b.build(), labels(&["x", "y", "z"])).unwrap()
    }

    fn heis() -> LieAlgebra {
        let mut b = StructureConstants::builder(3);
        b.bracket_ints(0, 1, &[0, 0, 1]).unwrap();
        LieAlgebra::validated(b.build(), default_labels(3)).unwrap()
    }

    fn sl2() -> LieAlgebra {
        let mut b = StructureConstants::builder(3);
        b.bracket_ints(0, 1, &[0, 2, 0]).unwrap();
        b.bracket_ints(0, 2, &[0, 0, -2]).unwrap();
        b.bracket_ints(1, 2, &[1, 0, 0]).unwrap();
        LieAlgebra::validated(b.build(), labels(&["h", "e", "f"])).unwrap()
    }

    fn sp(vs: &[&[i64]], n: usize) -> Subspace {
        let vs: Vec<Vector> = vs.iter().map(|v| int_vector(v)).collect();
        Subspace::span(&vs, n).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(s32().validate().is_valid());
        assert!(LieAlgebra::abelian(4).validate().is_valid());

        let mut b = StructureConstants::builder(3);
        b.bracket_ints(0, 1, &[1, 0, 0]).unwrap();
        b.bracket_ints(1, 2, &[0, 1, 0]).unwrap();
        b.bracket_ints(2, 0, &[0, 0, 1]).unwrap();
        let bad = LieAlgebra::with_default_labels(b.build()).unwrap();
        assert_eq!(
            bad.validate(),
            Validation::Violated(Violation::Jacobi {
                i: 0,
                j: 1,
                k: 2,
                sum: int_vector(&[-1, -1, -1])
            })
        );
    }

    #[test]
    fn validate_flags_broken_antisymmetry() {
        let mut table = vec![rat(0); 8];
        table[2] = rat(1); // [e1,e2] = e1 but [e2,e1] = 0
        let l = LieAlgebra::with_default_labels(StructureConstants::from_dense(2, table).unwrap())
            .unwrap();
        assert_eq!(
            l.validate(),
            Validation::Violated(Violation::Antisymmetry { i: 0, j: 1, k: 0 })
        );
    }

    #[test]
    fn builder_rejects_duplicates_and_diagonal() {
        let mut b = StructureConstants::builder(3);
        b.bracket_ints(0, 1, &[1, 0, 0]).unwrap();
        assert!(matches!(
            b.bracket_ints(1, 0, &[1, 0, 0]),
            Err(Error::DuplicateBracket { i: 1, j: 0 })
        ));
        assert!(matches!(
            b.bracket_ints(2, 2, &[0, 1, 0]),
            Err(Error::InvalidAlgebra(Violation::Antisymmetry { .. }))
        ));
        assert!(matches!(
            b.bracket_ints(0, 3, &[0, 0, 0]),
            Err(Error::IndexOutOfRange { index: 3, dim: 3 })
        ));
    }

    #[test]
    fn labels_must_be_unique() {
        let err = LieAlgebra::new(StructureConstants::zero(2), labels(&["a", "a"])).unwrap_err();
        assert!(matches!(err, Error::InvalidLabels(_)));
        assert!(LieAlgebra::new(StructureConstants::zero(2), labels(&["a"])).is_err());
    }

    #[test]
    fn bracket_vec_examples() {
        let l = s32();
        let (x, y, z) = (
            int_vector(&[1, 0, 0]),
            int_vector(&[0, 1, 0]),
            int_vector(&[0, 0, 1]),
        );
        assert_eq!(l.bracket(&z, &y).unwrap(), int_vector(&[1, 1, 0]));
        assert_eq!(l.bracket(&x, &x).unwrap(), int_vector(&[0, 0, 0]));
        assert_eq!(
            l.bracket(&int_vector(&[1, 0, 1]), &y).unwrap(),
            int_vector(&[1, 1, 0])
        );
        assert!(l.bracket(&x, &int_vector(&[1, 0])).is_err());
    }

    #[test]
    fn bracket_spaces_examples() {
        let l = s32();
        assert_eq!(
            l.bracket_spaces(&l.full(), &l.full()).unwrap(),
            sp(&[&[1, 0, 0], &[0, 1, 0]], 3)
        );
        assert!(l
            .bracket_spaces(&l.full(), &l.zero_ideal())
            .unwrap()
            .is_zero());
        let h = heis();
        assert_eq!(
            h.bracket_spaces(&h.full(), &h.full()).unwrap(),
            sp(&[&[0, 0, 1]], 3)
        );
    }

    #[test]
    fn is_ideal_examples() {
        let l = s32();
        assert!(l.is_ideal(&sp(&[&[1, 0, 0], &[0, 1, 0]], 3)));
        assert!(!l.is_ideal(&sp(&[&[0, 0, 1]], 3)));
        assert!(l.is_ideal(&l.zero_ideal()));
    }

    #[test]
    fn ideal_closure_examples() {
        let l = s32();
        assert_eq!(
            l.ideal_closure(&[int_vector(&[1, 0, 0])]).unwrap(),
            sp(&[&[1, 0, 0]], 3)
        );
        assert_eq!(
            l.ideal_closure(&[int_vector(&[0, 1, 0])]).unwrap(),
            sp(&[&[1, 0, 0], &[0, 1, 0]], 3)
        );
        assert!(l.ideal_closure::<Vector>(&[]).unwrap().is_zero());
    }

    #[test]
    fn adjoint_examples() {
        let l = s32();
        let ad_z = l.adjoint(&int_vector(&[0, 0, 1])).unwrap();
        assert_eq!(
            ad_z,
            Matrix::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 0]])
        );
        assert!(l.adjoint(&int_vector(&[0, 0, 0])).unwrap().is_zero());
        assert!(LieAlgebra::abelian(3)
            .adjoint(&int_vector(&[1, 2, 3]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn killing_examples() {
        assert!(heis().killing().is_zero());
        let k = s32().killing();
        assert_eq!(
            k.matrix(),
            &Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 2]])
        );
        let k = sl2().killing();
        assert_eq!(
            k.matrix(),
            &Matrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]])
        );
    }

    #[test]
    fn killing_orthogonal_examples() {
        let s = sl2();
        assert!(s.killing_orthogonal(&s.full()).unwrap().is_zero());
        let h = heis();
        assert!(h.killing_orthogonal(&h.full()).unwrap().is_full());
        let l = s32();
        let d = l.bracket_spaces(&l.full(), &l.full()).unwrap();
        assert!(l.killing_orthogonal(&d).unwrap().is_full());
    }

    #[test]
    fn restrict_examples() {
        let l = s32();
        let r = l.restrict(&l.full()).unwrap();
        assert_eq!(r.constants(), l.constants());
        let plane = l.restrict(&sp(&[&[1, 0, 0], &[0, 1, 0]], 3)).unwrap();
        assert_eq!(plane.dim(), 2);
        assert_eq!(plane.constants(), &StructureConstants::zero(2));
        assert!(matches!(
            l.restrict(&sp(&[&[0, 1, 0], &[0, 0, 1]], 3)),
            Err(Error::NotClosed)
        ));
    }

    #[test]
    fn quotient_examples() {
        let l = s32();
        let (q, _) = l.quotient(&l.zero_ideal()).unwrap();
        assert_eq!(q, l);
        let (q, proj) = l.quotient(&sp(&[&[1, 0, 0], &[0, 1, 0]], 3)).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.labels(), &["z".to_string()]);
        assert_eq!(proj.apply(&int_vector(&[5, 7, 3])), int_vector(&[3]));
        let h = heis();
        let (q, _) = h.quotient(&sp(&[&[0, 0, 1]], 3)).unwrap();
        assert_eq!(q.constants(), &StructureConstants::zero(2));
        assert!(matches!(
            l.quotient(&sp(&[&[0, 0, 1]], 3)),
            Err(Error::NotAnIdeal)
        ));
    }

    #[test]
    fn format_vector_uses_labels() {
        let l = s32();
        assert_eq!(l.format_vector(&int_vector(&[1, 1, 0])), "x + y");
        assert_eq!(
            l.format_vector(&[rat(-1), crate::linalg::ratio(1, 2), rat(0)]),
            "-x + 1/2*y"
        );
        assert_eq!(l.format_vector(&int_vector(&[0, 0, 0])), "0");
    }
}
