//! Groebner bases and the ideal operations built on them.

pub mod buchberger;
pub mod ideal;
pub mod json;

pub use buchberger::{buchberger, Budget, GroebnerBasis, DEFAULT_MAX_REDUCTIONS};
pub use ideal::{eliminate, intersect, into_ring, is_zero_dimensional, minimal_polynomial, quotient_degree, radical_zero_dimensional, saturate, saturate_by, IdealSpec};
pub use json::{AnyIdeal, IdealFile};
