//! Superboolean linear algebra and matrix representations of hereditary
//! collections (abstract simplicial complexes) and matroids.
//!
//! The crate is organised bottom-up:
//!
//! - [`semiring`]: the three-element superboolean semiring, bipotent
//!   semirings and their supertropicalization.
//! - [`matrix`]: superboolean matrices, permanents, nonsingularity, markers,
//!   dependence and rank.
//! - [`hereditary`]: hereditary collections stored by their bases, together
//!   with duality, minors, direct sums and the PR / BR / matroid axioms.
//! - [`field`]: exact linear algebra over small prime fields and vector
//!   matroids.
//! - [`represent`]: vector hereditary collections of superboolean matrices and
//!   the constructions that represent a collection by a matrix.
//! - [`graphs`]: incidence matrices, graphic matroids and the bipartite view
//!   of boolean matrices.
//! - [`catalog`]: the worked examples (Fano family, `M(K4)`, `W^3`, ...).
//! - [`format`]: the plain-text file formats shared with the CLI.

pub mod catalog;
pub mod error;
pub mod field;
pub mod format;
pub mod graphs;
pub mod hereditary;
pub mod matrix;
pub mod represent;
pub mod semiring;
pub mod subset;

pub use error::{Error, Result};
pub use field::FieldMatrix;
pub use graphs::{BipartiteGraph, Graph};
pub use hereditary::HereditaryCollection;
pub use matrix::SBMatrix;
pub use represent::Representation;
pub use semiring::SBElem;
pub use subset::ElementSet;
