//! Exact computation of order-theoretic invariants of C-semigroups: affine
//! semigroups with finite complement in an integer polyhedral cone.
//!
//! A [`CSemigroup`] is stored by its cone and its finite gap set. From it the
//! crate computes minimal generators, Frobenius and pseudo-Frobenius sets,
//! Apéry sets, Frobenius elements, weight sets and quasi-elasticity, builds
//! families of semigroups to order, and enumerates all semigroups of a cone
//! by genus to check the extended Wilf inequality `e(S) n(S) >= p c(S)`.

pub mod cli;
pub mod construct;
pub mod error;
pub mod genexp;
pub mod geom;
pub mod numerical;
pub mod oracle;
pub mod plot;
pub mod semigroup;
pub mod separation;
pub mod wilf;

pub use error::{Error, Result};
pub use geom::{Cone, IntPoint, RayCoords};
pub use numerical::{CofiniteNat, NumericalSemigroup};
pub use semigroup::{CSemigroup, Order};
