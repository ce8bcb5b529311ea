//! Exact coefficient arithmetic, sparse multivariate polynomials and
//! univariate real-root isolation.

pub mod field;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rowreduce;
pub mod univariate;

pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_polynomial, parse_rational};
pub use poly::{PolyRing, Polynomial};
pub use univariate::{sturm_isolate, RootInterval, UniPoly};
