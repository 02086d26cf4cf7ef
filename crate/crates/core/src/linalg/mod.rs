//! Exact rational and polynomial linear algebra.

mod intpoly;
pub mod matpoly;
pub mod matq;
pub mod modp;
pub mod mpoly;
pub mod rat;

pub use matpoly::{MatPoly, Minor};
pub use matq::{MatQ, Nullspace};
pub use mpoly::{MPoly, Monomial, Term};
pub use rat::Rat;
