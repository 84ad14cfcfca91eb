//! Exact computations on finite-dimensional Lie algebras over Q.
//!
//! Given structure constants, this crate computes the derived, lower central
//! and upper central series, the perfect radical `P(L)`, the near perfect
//! radical `NP(L)`, the solvable radical `R(L)`, the center, and the smallest
//! upper bounded ideal. The [`oracle`] module re-derives those results by
//! independent routes and checks the structural theorems relating them on
//! sampled ideals.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod format;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod series;
pub mod subspace;

pub use algebra::{
    KillingMatrix, LieAlgebra, Projection, StructureConstants, Validation, Violation,
};
pub use error::Error;
pub use linalg::{Matrix, Rational, Vector};
pub use series::{profile, Flags, ProfileReport, SeriesKind, SeriesReport};
pub use subspace::Subspace;
