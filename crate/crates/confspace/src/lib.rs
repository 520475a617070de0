//! Exact symbolic calculus on configuration-space function algebras.
//!
//! The crate implements, over the coefficient ring `Q[pi, L]` (`L` a formal
//! log-of-scale symbol), the function algebras `O_S` spanned by products of
//! two-point propagator factors `G_jk(x_j - x_k)`, their scaling/divergence
//! filtrations, set-partition combinatorics with Taylor expansion along
//! partial diagonals, distributions supported at the origin together with the
//! dual graded modules that house renormalization cocycles, a de Rham complex
//! with an Euler-inverse homotopy operator and exact cohomology ranks, and a
//! concrete renormalization engine: canonical distribution extensions for
//! `D = 1` chains and two-point `D = 2`, anomaly commutators, the circle
//! product of cocycles, scheme changes and the composition law of
//! scheme-change systems.
//!
//! Everything is computed exactly; no floating point enters any result.

pub mod exact_algebra;
pub mod partition_lattice;
pub mod origin_distributions;
pub mod derham;
pub mod engine;
pub mod probes;
pub mod numeric;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
