//! Exact computation of zeon powers of matrices and everything that
//! falls out of them: permanents and subpermanent matrices, the Johnson
//! scheme expansion and spectrum of (sI + tJ)^(ell), exponential moment
//! polynomials, elementary-subgraph expansions, generalized derangement
//! and arrangement triangles, and orbit counting for permutation groups.
//!
//! All arithmetic is exact: big integers, big rationals, and sparse
//! polynomials in the formal variables `s` and `t`. Floating point
//! appears only in the asymptotic convergence checks.

pub mod bipoly;
pub mod charpoly;
pub mod comb;
pub mod derange;
pub mod error;
pub mod exppoly;
pub mod genfunc;
pub mod golden;
pub mod groups;
pub mod johnson;
pub mod jsonio;
pub mod matrix;
pub mod par;
pub mod permanent;
pub mod rng;
pub mod subgraphs;
pub mod subsets;
pub mod unipoly;
pub mod verify;
pub mod zeon;

pub use bipoly::BiPoly;
pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use unipoly::UniPoly;
