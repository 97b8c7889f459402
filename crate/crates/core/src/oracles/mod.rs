//! Independent verification paths for the engine.
//!
//! Three deliberately separate computations cross-check the recursion:
//!
//! - [`oc_bruteforce`]: a literal evaluation summing over *ordered* tuples of
//!   classes with no memoization and no unordered collapsing, sharing neither
//!   code path nor combinatorial identity with the engine;
//! - [`schubert_line_count`]: the Pieri-rule product counting lines through a
//!   point and general codimension-2 subspaces, which pins the line counts on
//!   projective spaces;
//! - [`jet_coefficient`]: the truncated Chern-class expansion of the jet
//!   bundle whose single surviving monomial carries the same line count.

mod bruteforce;
mod jet;
mod schubert;

pub use bruteforce::{oc_bruteforce, DEFAULT_DEGREE_CAP};
pub use jet::{jet_coefficient, jet_contact_product, JetPolynomial};
pub use schubert::{schubert_line_count, SchubertClass};
