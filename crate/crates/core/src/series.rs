//! Characteristic series and the ideals they stabilize at.
//!
//! The derived series `L^(k+1) = [L^(k), L^(k)]` ends at the perfect radical,
//! the lower central series `L^(k+1) = [L, L^k]` ends at the near perfect
//! radical, and the upper central series `U_{k+1}(0) = U(U_k(0))` ends at the
//! smallest upper bounded ideal. Each chain is monotone in dimension, so it
//! stabilizes within `n` steps.

use std::fmt;

use crate::algebra::LieAlgebra;
use crate::error::Error;
use crate::linalg::{Matrix, Rational};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperCentral,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 3] = [
        SeriesKind::Derived,
        SeriesKind::LowerCentral,
        SeriesKind::UpperCentral,
    ];

    pub fn key(self) -> &'static str {
        match self {
            SeriesKind::Derived => "derived",
            SeriesKind::LowerCentral => "lower_central",
            SeriesKind::UpperCentral => "upper_central",
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// The distinct terms of a series. `terms[m]` with `m` the stabilization
/// index is the limit: every later term equals it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
}

impl SeriesReport {
    pub fn stabilization_index(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn limit(&self) -> &Subspace {
        self.terms.last().expect("a series has at least one term")
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// Iterates `step` from `start` until a term repeats.
    pub(crate) fn iterate<F>(kind: SeriesKind, start: Subspace, mut step: F) -> Result<Self, Error>
    where
        F: FnMut(&Subspace) -> Result<Subspace, Error>,
    {
        let mut terms = vec![start];
        loop {
            let next = step(terms.last().unwrap())?;
            if &next == terms.last().unwrap() {
                return Ok(Self { kind, terms });
            }
            terms.push(next);
        }
    }
}

pub fn derived_algebra(l: &LieAlgebra) -> Subspace {
    l.bracket_with_full(&l.full())
        .expect("full space matches the algebra")
}

pub fn derived_series(l: &LieAlgebra) -> SeriesReport {
    SeriesReport::iterate(SeriesKind::Derived, l.full(), |t| l.bracket_spaces(t, t))
        .expect("series terms live in the algebra")
}

pub fn lower_central_series(l: &LieAlgebra) -> SeriesReport {
    SeriesReport::iterate(SeriesKind::LowerCentral, l.full(), |t| {
        l.bracket_with_full(t)
    })
    .expect("series terms live in the algebra")
}

pub fn upper_central_series(l: &LieAlgebra) -> SeriesReport {
    SeriesReport::iterate(SeriesKind::UpperCentral, l.zero_ideal(), |t| {
        upper_extension(l, t)
    })
    .expect("upper central terms are ideals")
}

pub fn series(l: &LieAlgebra, kind: SeriesKind) -> SeriesReport {
    match kind {
        SeriesKind::Derived => derived_series(l),
        SeriesKind::LowerCentral => lower_central_series(l),
        SeriesKind::UpperCentral => upper_central_series(l),
    }
}

/// `U(I) = {x : [x, L] ⊆ I}`, the kernel of `x ↦ ([x, e_j] mod I)_j`.
pub fn upper_extension(l: &LieAlgebra, ideal: &Subspace) -> Result<Subspace, Error> {
    l.require_ideal(ideal)?;
    let n = l.dim();
    let free = ideal.free_columns();
    // Row (j, c) of the constraint system: coefficient of e_c in ([e_i, e_j] mod I), per i.
    let mut system = Matrix::zeros(n * free.len(), n);
    for j in 0..n {
        for i in 0..n {
            let residue = ideal.residue(l.constants().bracket_of_basis(i, j));
            for (t, &c) in free.iter().enumerate() {
                system.set(j * free.len() + t, i, residue[c].clone());
            }
        }
    }
    Ok(Subspace::row_space(&system.kernel()))
}

pub fn center(l: &LieAlgebra) -> Subspace {
    upper_extension(l, &l.zero_ideal()).expect("zero is an ideal")
}

/// Largest perfect ideal, `P(L)`.
pub fn perfect_radical(l: &LieAlgebra) -> Subspace {
    derived_series(l).limit().clone()
}

/// Largest near perfect ideal, `NP(L)`.
pub fn near_perfect_radical(l: &LieAlgebra) -> Subspace {
    lower_central_series(l).limit().clone()
}

/// Largest solvable ideal, computed as the Killing complement of `[L, L]`.
pub fn radical(l: &LieAlgebra) -> Subspace {
    l.killing().orthogonal(&derived_algebra(l))
}

pub fn smallest_upper_bounded_ideal(l: &LieAlgebra) -> Subspace {
    upper_central_series(l).limit().clone()
}

// The zero algebra counts as solvable, nilpotent, perfect and abelian, but
// not semisimple.

pub fn is_solvable(l: &LieAlgebra) -> bool {
    perfect_radical(l).is_zero()
}

pub fn is_nilpotent(l: &LieAlgebra) -> bool {
    near_perfect_radical(l).is_zero()
}

pub fn is_perfect(l: &LieAlgebra) -> bool {
    derived_algebra(l).is_full()
}

pub fn is_abelian(l: &LieAlgebra) -> bool {
    derived_algebra(l).is_zero()
}

/// `n > 0` and `R(L) = 0`, cross-checked against nondegeneracy of the
/// Killing form.
pub fn is_semisimple(l: &LieAlgebra) -> Result<bool, Error> {
    let by_radical = l.dim() > 0 && radical(l).is_zero();
    let by_killing = l.dim() > 0 && l.killing().is_nondegenerate();
    if by_radical != by_killing {
        return Err(Error::Inconsistent(format!(
            "radical test says semisimple={by_radical}, Killing form test says {by_killing}"
        )));
    }
    Ok(by_radical)
}

/// `[I, I] = I`.
pub fn is_perfect_ideal(l: &LieAlgebra, ideal: &Subspace) -> Result<bool, Error> {
    l.require_ideal(ideal)?;
    Ok(&l.bracket_spaces(ideal, ideal)? == ideal)
}

/// `[L, I] = I`.
pub fn is_near_perfect_ideal(l: &LieAlgebra, ideal: &Subspace) -> Result<bool, Error> {
    l.require_ideal(ideal)?;
    Ok(&l.bracket_with_full(ideal)? == ideal)
}

/// `U(I) = I`.
pub fn is_upper_bounded_ideal(l: &LieAlgebra, ideal: &Subspace) -> Result<bool, Error> {
    Ok(&upper_extension(l, ideal)? == ideal)
}

/// Whether the subalgebra `s` is solvable as a Lie algebra on its own.
pub fn is_solvable_subalgebra(l: &LieAlgebra, s: &Subspace) -> Result<bool, Error> {
    let mut t = s.clone();
    loop {
        let next = l.bracket_spaces(&t, &t)?;
        if next.is_zero() {
            return Ok(true);
        }
        if next == t {
            return Ok(false);
        }
        t = next;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub solvable: bool,
    pub nilpotent: bool,
    pub perfect: bool,
    pub abelian: bool,
    pub semisimple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileReport {
    pub dim: usize,
    pub derived: SeriesReport,
    pub lower_central: SeriesReport,
    pub upper_central: SeriesReport,
    pub perfect_radical: Subspace,
    pub near_perfect_radical: Subspace,
    pub radical: Subspace,
    pub center: Subspace,
    pub smallest_upper_bounded: Subspace,
    pub flags: Flags,
}

impl ProfileReport {
    pub fn series(&self, kind: SeriesKind) -> &SeriesReport {
        match kind {
            SeriesKind::Derived => &self.derived,
            SeriesKind::LowerCentral => &self.lower_central,
            SeriesKind::UpperCentral => &self.upper_central,
        }
    }
}

pub fn profile(l: &LieAlgebra) -> Result<ProfileReport, Error> {
    let derived = derived_series(l);
    let lower_central = lower_central_series(l);
    let upper_central = upper_central_series(l);
    let perfect_radical = derived.limit().clone();
    let near_perfect_radical = lower_central.limit().clone();
    let smallest_upper_bounded = upper_central.limit().clone();
    let center = upper_central
        .terms
        .get(1)
        .cloned()
        .unwrap_or_else(|| l.zero_ideal());
    let radical = radical(l);
    let d = &derived.terms;
    let flags = Flags {
        solvable: perfect_radical.is_zero(),
        nilpotent: near_perfect_radical.is_zero(),
        perfect: d.len() == 1,
        abelian: d.get(1).unwrap_or(&d[0]).is_zero(),
        semisimple: is_semisimple(l)?,
    };
    if !perfect_radical.leq(&near_perfect_radical)? {
        return Err(Error::Inconsistent("P(L) is not contained in NP(L)".into()));
    }
    if flags.nilpotent && !flags.solvable {
        return Err(Error::Inconsistent("nilpotent but not solvable".into()));
    }
    Ok(ProfileReport {
        dim: l.dim(),
        derived,
        lower_central,
        upper_central,
        perfect_radical,
        near_perfect_radical,
        radical,
        center,
        smallest_upper_bounded,
        flags,
    })
}

/// Embeds the coordinates of a restricted algebra back into `L`: row `r` of
/// `s.basis()` is basis vector `r` of the restriction.
pub fn embed(s: &Subspace, sub: &Subspace) -> Subspace {
    let mut rows = Vec::with_capacity(sub.dim());
    for coeffs in sub.basis_vectors() {
        let mut v = vec![Rational::default(); s.ambient_dim()];
        for (c, row) in coeffs.iter().zip(s.basis_vectors()) {
            crate::linalg::axpy(&mut v, c, row);
        }
        rows.push(v);
    }
    Subspace::from_rows_unchecked(rows, s.ambient_dim())
}
