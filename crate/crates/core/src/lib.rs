//! Exact cohomological classification of finite-dimensional associative
//! algebras over the rationals.
//!
//! Algebras are given by structure constants. The crate computes the spaces of
//! derivations into the dual module (all, inner, cyclic), the matching spaces
//! of quasi-additive bilinear functionals, point derivations at characters,
//! and from these decides weak amenability, cyclic amenability, cyclically
//! weak amenability and (0-)point amenability. The [`harness`] module turns
//! the known hereditary theorems about these notions into executable checks
//! over corpus and randomly composed algebras.

pub mod algebra;
pub mod characters;
pub mod cli;
pub mod cohomology;
pub mod exactla;
pub mod harness;

pub use algebra::{Algebra, AlgebraError, IdealSubspace, Morphism, Validation};
pub use characters::{Character, CharacterError, CharacterSet};
pub use cohomology::{classify, AmenabilityReport, Verdict};
pub use exactla::{Matrix, Rational, Subspace};
