//! Exact counts of rational curves osculating a very ample hypersurface.
//!
//! For a product of projective spaces `X = P^{s_1} x ... x P^{s_t}` (or any
//! homogeneous space described by a user-supplied invariant table), this crate
//! computes the number `OC(beta, X)` of rational curves of class `beta` that
//! meet a general very ample hypersurface at a general point with the maximal
//! finite contact order. The computation is a closed recursion over vector
//! partitions of `beta`, carried out entirely in arbitrary-precision rational
//! arithmetic: no value is ever rounded.
//!
//! The main entry points are:
//!
//! - [`AmbientSpace`]: the target space, with its two geometric scalars
//!   (the anticanonical degree pairing and the one-point invariant).
//! - [`OcTable`]: a memo table of computed counts, with
//!   [`OcTable::osculating_count`], [`OcTable::contribution_breakdown`] and
//!   the inverse solver [`OcTable::invariant_from_counts`].
//! - [`compute_table`]: batch evaluation over every class below a maximum.
//! - [`oracles`]: independent verification paths (an unmemoized ordered-tuple
//!   evaluator, Pieri products of Schubert classes, and a truncated jet-bundle
//!   Chern class expansion) used to cross-check the engine.
//! - [`verify`]: the built-in suite of published values and oracle checks.

pub mod cache;
pub mod class;
pub mod combinatorics;
pub mod engine;
pub mod error;
pub mod oracles;
pub mod partitions;
pub mod rational;
pub mod report;
pub mod space;
pub mod verify;

pub use class::CurveClass;
pub use engine::{compute_table, extend_table, Budget, ContributionReport, Correction, OcTable};
pub use error::Error;
pub use partitions::{enumerate_partitions, subclasses, VectorPartition};
pub use rational::Rational;
pub use space::AmbientSpace;
