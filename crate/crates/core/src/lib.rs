//! Diagrammatic link invariants built from Kauffman states: state graphs,
//! adequacy, fibers, guts of state surfaces, stable Jones coefficients and
//! hyperbolic volume bounds.

pub mod bounds;
pub mod diagram;
pub mod error;
pub mod jones;
pub mod laurent;
pub mod montesinos;
pub mod notation;
pub mod polyhedra;
pub mod states;

pub use diagram::{LinkDiagram, Smoothing};
pub use error::{Error, Result};

/// Exact rational used for slopes.
pub type Rational = num_rational::BigRational;
/// Exact integer-coefficient Laurent polynomial.
pub type IntPoly = laurent::LaurentPoly<num_bigint::BigInt>;
/// Volume bounds in double precision.
pub type VolumeBounds64 = bounds::VolumeBounds<f64>;
/// Volume bounds in single precision.
pub type VolumeBounds32 = bounds::VolumeBounds<f32>;
