//! Thermality analysis of qubit equilibrium families.
//!
//! An equilibrium family `{(a_i, b_i)}` indexed by initial Bloch angles is an
//! initial-state-dependent thermal state exactly when `b = κa` for a single
//! complex constant `κ`. This crate estimates `κ` by least squares and turns
//! the verdict into a residual-based decision, evaluates the closed-form
//! predictions for the quantum walk on the line, and computes the
//! Bloch-sphere geometry of thermal families: isotherm planes, distances and
//! constant-temperature circles.

mod fit;
mod geometry;
mod predictions;

pub use fit::{estimate_kappa, EnsemblePoint, KappaFitOptions, ThermalVerdict, ThermoError};
pub use geometry::{
    cos_alpha, heat_entropy_check, isotherm_plane, plane_distance_origin,
    thermal_density_from_alpha, IsothermPlane,
};
pub use predictions::{predicted_b_gaussian, predicted_b_localized_hadamard};
