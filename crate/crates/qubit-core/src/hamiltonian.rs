use num_complex::Complex64;

use crate::{Mat2, QubitDensity, QubitError};

/// A traceless 2×2 Hermitian operator `ε · (v̂ · σ)` with eigenvalues `±ε`.
///
/// `v̂` is the unit direction of the effective magnetic field. For fields
/// with a nonzero `z` component the operator has the equivalent form
///
/// ```text
/// H = ε/√(1+|κ|²) · [[1, κ], [κ*, −1]],    v̂ ∝ (Re κ, −Im κ, 1)
/// ```
///
/// and [`EntHamiltonian::kappa`] recovers `κ`. Purely equatorial fields
/// (`v̂_z = 0`) are the `κ → ∞` limit and are represented by the stored
/// direction alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntHamiltonian {
    epsilon: f64,
    field: [f64; 3],
}

impl EntHamiltonian {
    /// Builds `ε · (v̂ · σ)` from the complex parameter `κ`,
    /// with `v̂ = (Re κ, −Im κ, 1)/√(1+|κ|²)`.
    pub fn from_kappa(epsilon: f64, kappa: Complex64) -> Result<Self, QubitError> {
        if epsilon <= 0.0 {
            return Err(QubitError::NonpositiveEnergyScale { epsilon });
        }
        let norm = (1.0 + kappa.norm_sqr()).sqrt();
        Ok(Self::from_field(
            epsilon,
            [kappa.re / norm, -kappa.im / norm, 1.0 / norm],
        ))
    }

    /// Builds the operator from an already-normalized field direction.
    pub(crate) fn from_field(epsilon: f64, field: [f64; 3]) -> Self {
        Self { epsilon, field }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Unit field direction `v̂`.
    pub fn field(&self) -> [f64; 3] {
        self.field
    }

    /// The complex parameter `κ` such that `v̂ ∝ (Re κ, −Im κ, 1)`,
    /// or `None` for equatorial fields (`v̂_z = 0`).
    pub fn kappa(&self) -> Option<Complex64> {
        if self.field[2] == 0.0 {
            None
        } else {
            Some(Complex64::new(
                self.field[0] / self.field[2],
                -self.field[1] / self.field[2],
            ))
        }
    }

    /// Dense matrix `ε · (v̂ · σ)` in the computational basis.
    pub fn matrix(&self) -> Mat2 {
        let [vx, vy, vz] = self.field;
        let e = self.epsilon;
        [
            [
                Complex64::new(e * vz, 0.0),
                Complex64::new(e * vx, -e * vy),
            ],
            [
                Complex64::new(e * vx, e * vy),
                Complex64::new(-e * vz, 0.0),
            ],
        ]
    }
}

/// Gibbs state `e^{−βH} / tr(e^{−βH})`.
///
/// For a traceless 2×2 Hamiltonian `H = ε (v̂ · σ)` this closes to
/// `ρ = (I − tanh(βε) v̂ · σ)/2`. `β` may be zero or negative.
pub fn gibbs_state(h: &EntHamiltonian, beta: f64) -> QubitDensity {
    let t = (beta * h.epsilon()).tanh();
    let [vx, vy, vz] = h.field();
    // a = −tanh(βε) v̂_z / 2, b = −tanh(βε) (v̂_x − i v̂_y) / 2; the Bloch
    // radius is |tanh|/2 ≤ 1/2 so the construction cannot fail.
    QubitDensity::from_ab(
        -0.5 * t * vz,
        Complex64::new(-0.5 * t * vx, 0.5 * t * vy),
    )
    .expect("Gibbs state is always positive")
}
