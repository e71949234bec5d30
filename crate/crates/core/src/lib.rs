//! Geometry of single-qubit pure states and their optical preparation.
//!
//! The crate ties together three views of the same object:
//!
//! * [`qubit`]: amplitudes `(a, b)` on the unit 3-sphere, the `(θ, φ)` Bloch
//!   chart and the density-matrix picture `ρ = ½(I + r̂·σ⃗)`.
//! * [`hopf`]: the Hopf fibration `S¹ ↪ S³ → S²`, built from the ratio chart
//!   `b/a` and inverse stereographic projection, with fiber sampling.
//! * [`gadget`]: the quarter/half/quarter/half wave-plate stack that realizes
//!   any SU(2) transformation, and a two-input solver that prepares every
//!   point of the Bloch sphere with it.
//!
//! [`group_action`] holds the U(1) and ℝ* actions whose orbits are the
//! equivalence classes used throughout, and [`verify`] runs every invariant
//! family as a deterministic seeded report.

pub mod angle;
pub mod error;
pub mod gadget;
pub mod group_action;
pub mod hopf;
pub mod matrix;
pub mod qubit;
pub mod tolerance;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::Matrix2;
pub use num_complex::Complex64;
pub use qubit::{BlochAngles, BlochVector, DensityMatrix, PureState};
pub use tolerance::Tolerances;
