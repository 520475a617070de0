//! The coefficient ring, multivariate polynomials and the configuration-space
//! function algebras with quadric denominators, including homogeneous
//! decomposition and the scaling / divergence degree filtrations.

mod scalar;
mod degree;
mod poly;
mod propagator;
mod config;
pub mod grammar;

pub use scalar::Scalar;
pub use degree::Degree;
pub use poly::Poly;
pub use propagator::PropagatorElem;
pub use config::{ConfigElem, Coordinate, PairKey, Point, Term};
