//! Exact computational algebraic geometry for bi-Lipschitz questions.
//!
//! The crate computes degrees, multiplicities, tangent cones and Zariski
//! tangent dimensions of affine varieties over the rationals. It also computes
//! the variety of limiting secant directions of a set `X`. A linear
//! projection restricted to `X` is a bi-Lipschitz embedding exactly when its
//! center misses that variety, so [`lipschitz::certify_projection`] decides
//! the question exactly.
//!
//! Everything is exact rational arithmetic on top of a Buchberger engine
//! ([`groebner`]); floating point appears only in the numeric [`sampler`].

pub mod error;
pub mod groebner;
pub mod ideal_ops;
pub mod invariants;
pub mod linalg;
pub mod lipschitz;
pub mod poly;
pub mod sampler;

pub use error::{BudgetKind, Error, Result};
pub use groebner::{Budget, GroebnerBasis, Ideal};
pub use poly::{Monomial, MonomialOrder, Parametrization, Polynomial, Rational, Ring};
