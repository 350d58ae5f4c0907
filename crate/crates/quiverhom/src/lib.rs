//! An exact-arithmetic workbench for finite-dimensional quiver algebras.
//!
//! The crate computes homological invariants of admissible path-algebra
//! quotients — minimal projective resolutions, Ext and Hochschild cohomology
//! with their products, projective and injective dimension with periodicity
//! certificates — and builds on them: Nakayama/Gorenstein certification,
//! tilting modules and complement mutation, endomorphism algebras presented
//! by quiver and relations, degree-bounded (Fg) evidence and support-variety
//! fingerprints, and dimension-level verification that all of these agree
//! across the derived equivalence induced by a tilting module.
//!
//! Everything is computed over ℚ or a prime field with exact linear algebra;
//! there are no tolerances anywhere. See the `examples/` directory for a
//! runnable tour of each capability, and the `quiverhom` binary for the
//! file-driven command-line interface.

// Index loops mirror the matrix arithmetic they implement.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod derived;
pub mod endo;
pub mod error;
pub mod fg;
pub mod field;
pub mod hochschild;
pub mod homology;
pub mod matrix;
pub mod module;
pub mod nakayama;
pub mod parse;
pub mod present;
pub mod quiver;
pub mod samples;
pub mod tilting;
pub(crate) mod span;

pub use algebra::{build_quotient, tensor, FDAlgebra, TensorLayout};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::ExactMatrix;
pub use module::{FDModule, ModuleMap};
pub use quiver::{Arrow, Path, PathExpr, Quiver};
