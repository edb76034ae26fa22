//! Exact algebra for single-qubit density operators.
//!
//! A qubit density operator with unit trace is stored as the pair `(a, b)`,
//!
//! ```text
//! ρ = [[ 1/2 + a,  b       ],
//!      [ b*,       1/2 - a ]]
//! ```
//!
//! with `a` real and `b` complex, subject to `a² + |b|² ≤ 1/4` (positivity).
//! On top of this parametrization the crate provides Bloch conversion,
//! spectral decomposition, entanglement-Hamiltonian extraction, Gibbs states,
//! von Neumann entropy and the entanglement temperature. All types are
//! immutable after construction and all operations are pure functions.

mod density;
mod error;
mod hamiltonian;
mod kraus;

pub use density::{BlochVector, QubitDensity, SpectralDecomp};
pub use error::QubitError;
pub use hamiltonian::{gibbs_state, EntHamiltonian};
pub use kraus::kraus_projector_asymptotic;

use num_complex::Complex64;

/// A dense 2×2 complex matrix in the computational basis, row major.
pub type Mat2 = [[Complex64; 2]; 2];

/// Absolute tolerance on `a² + |b|² - 1/4` accepted by constructors.
/// Time-averaged simulation data may overshoot exact positivity by rounding.
pub const POSITIVITY_TOL: f64 = 1e-12;
