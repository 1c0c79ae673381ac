//! Exact toric geometry and GIT stability for cyclic quotient singularities 1/r(α₁,α₂,α₃).
//!
//! The crate builds bricksets for toric models via star subdivisions and round-down
//! functions, and searches for stability parameters θ = θ_P + m·ϑ certifying that a
//! model is a moduli space of θ-stable G-constellations.

pub mod brick;
pub mod error;
pub mod fan;
pub mod fixtures;
pub mod geom;
pub mod hilbert;
pub mod io;
pub mod lattice;
pub mod pipeline;
pub mod reid;
pub mod render;
pub mod scalar;
pub mod semigroup;
pub mod stability;

pub use error::{Error, Result};
pub use lattice::{is_good_subdivision, GroupType, LatticePoint, Monomial, RoundDownContext};
pub use scalar::Scalar;
pub use stability::ThetaOf;

/// Default exact scalar.
pub type Q = num::BigRational;
/// Machine-word rationals, adequate at desk scale.
pub type Q64 = num::rational::Rational64;

/// Stability parameter over the default scalar.
pub type Theta = ThetaOf<Q>;
