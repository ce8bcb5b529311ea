//! Voronoi cells of real algebraic varieties.
//!
//! * [`exactmath`]: rationals, prime fields, sparse polynomials, Sturm root isolation.
//! * [`groebner`]: reduced Groebner bases, elimination, saturation, intersection.
//! * [`voronoi`]: augmented Jacobian, normal bundle, critical and Voronoi ideals.
//! * [`degree_lab`]: Voronoi degrees over finite fields and closed-form degree formulas.
//! * [`lowrank`]: Voronoi cells of low-rank matrices via the singular value decomposition.
//! * [`sdp`]: spectrahedral inner approximations of Voronoi cells.

pub mod degree_lab;
pub mod error;
pub mod exactmath;
pub mod groebner;
pub mod linalg;
pub mod lowrank;
pub mod sdp;
pub mod voronoi;

pub use error::{Error, Result};
