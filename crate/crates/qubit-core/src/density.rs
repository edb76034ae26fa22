use num_complex::Complex64;

use crate::hamiltonian::EntHamiltonian;
use crate::{Mat2, QubitError, POSITIVITY_TOL};

/// Populations below this are treated as exactly zero when taking logarithms.
/// The entanglement temperature vanishes only logarithmically as the smaller
/// eigenvalue goes to zero, so states that are pure up to rounding must be
/// snapped to T = 0 explicitly.
const PURE_POPULATION_TOL: f64 = 1e-12;

/// A 2×2 Hermitian unit-trace positive operator `[[1/2+a, b], [b*, 1/2-a]]`.
///
/// `a` is the population asymmetry and `b` the coherence. Hermiticity and
/// unit trace are structural; positivity (`a² + |b|² ≤ 1/4`) is enforced at
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitDensity {
    a: f64,
    b: Complex64,
}

/// Cartesian Bloch vector of a qubit state, `‖B‖ ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

/// Eigenvalues and orthonormal eigenvectors of a qubit density operator.
///
/// `lambda_plus ≥ lambda_minus`, `lambda_plus + lambda_minus = 1`, and
/// `psi_plus`, `psi_minus` are unit vectors in the computational basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralDecomp {
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    pub psi_plus: [Complex64; 2],
    pub psi_minus: [Complex64; 2],
}

impl QubitDensity {
    /// Builds the density operator `[[1/2+a, b], [b*, 1/2-a]]`.
    pub fn from_ab(a: f64, b: Complex64) -> Result<Self, QubitError> {
        let radius_sq = a * a + b.norm_sqr();
        if radius_sq > 0.25 + POSITIVITY_TOL {
            return Err(QubitError::PositivityViolation { radius_sq });
        }
        Ok(Self { a, b })
    }

    /// Builds the state with Bloch vector `B = (x, y, z)`.
    pub fn from_bloch(bloch: &BlochVector) -> Result<Self, QubitError> {
        Self::from_ab(
            0.5 * bloch.z,
            Complex64::new(0.5 * bloch.x, -0.5 * bloch.y),
        )
    }

    /// The maximally mixed state `I/2`.
    pub fn maximally_mixed() -> Self {
        Self { a: 0.0, b: Complex64::ZERO }
    }

    /// The pure state `cos(γ/2)|+⟩ + e^{iφ} sin(γ/2)|−⟩` as a projector.
    pub fn pure_from_angles(gamma: f64, phi: f64) -> Self {
        // a = cos γ / 2, b = e^{-iφ} sin γ / 2
        Self {
            a: 0.5 * gamma.cos(),
            b: Complex64::from_polar(0.5 * gamma.sin(), -phi),
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// `√(a² + |b|²)`, half the Bloch-vector norm.
    pub fn radius(&self) -> f64 {
        (self.a * self.a + self.b.norm_sqr()).sqrt()
    }

    /// Dense matrix in the computational basis.
    pub fn matrix(&self) -> Mat2 {
        [
            [Complex64::new(0.5 + self.a, 0.0), self.b],
            [self.b.conj(), Complex64::new(0.5 - self.a, 0.0)],
        ]
    }

    /// Bloch vector `B = (2 Re b, −2 Im b, 2a)`.
    pub fn bloch(&self) -> BlochVector {
        BlochVector {
            x: 2.0 * self.b.re,
            y: -2.0 * self.b.im,
            z: 2.0 * self.a,
        }
    }

    /// Spectral decomposition with `λ± = 1/2 ± √(a² + |b|²)`.
    ///
    /// For `b = 0` the eigenvectors are the basis vectors, ordered so that
    /// `psi_plus` carries the larger population; the doubly degenerate case
    /// returns the canonical basis.
    pub fn eigendecompose(&self) -> SpectralDecomp {
        let r = self.radius();
        let lambda_plus = 0.5 + r;
        let lambda_minus = (0.5 - r).max(0.0);

        let e0 = [Complex64::ONE, Complex64::ZERO];
        let e1 = [Complex64::ZERO, Complex64::ONE];
        if self.b == Complex64::ZERO {
            let (psi_plus, psi_minus) = if self.a >= 0.0 { (e0, e1) } else { (e1, e0) };
            return SpectralDecomp { lambda_plus, lambda_minus, psi_plus, psi_minus };
        }

        // Shifts a ± r, with the cancelling branch rewritten as -|b|²/(a ± r)
        // to avoid loss of precision when |b| ≪ |a|.
        let bsq = self.b.norm_sqr();
        let (s_plus, s_minus) = if self.a >= 0.0 {
            (self.a + r, -bsq / (self.a + r))
        } else {
            (bsq / (r - self.a), self.a - r)
        };

        let eigvec = |s: f64| -> [Complex64; 2] {
            let n = (s * s + bsq).sqrt();
            // [ s·b/(|b|·n), |b|/n ]: unit norm, phase convention with a real
            // second component.
            let babs = bsq.sqrt();
            [self.b * (s / (babs * n)), Complex64::new(babs / n, 0.0)]
        };

        SpectralDecomp {
            lambda_plus,
            lambda_minus,
            psi_plus: eigvec(s_plus),
            psi_minus: eigvec(s_minus),
        }
    }

    /// Von Neumann entropy `S = −λ⁺ log λ⁺ − λ⁻ log λ⁻` in nats,
    /// with the convention `0·log 0 = 0`.
    pub fn von_neumann_entropy(&self) -> f64 {
        let dec = self.eigendecompose();
        let term = |l: f64| if l > 0.0 { -l * l.ln() } else { 0.0 };
        term(dec.lambda_plus) + term(dec.lambda_minus)
    }

    /// Entanglement temperature `T = 2ε / log(λ⁺/λ⁻)` in units of the energy
    /// scale `epsilon`.
    ///
    /// Returns `+∞` for the maximally mixed state and `0` for pure states.
    /// States whose Bloch vector points into the southern hemisphere of the
    /// effective-field direction (`a < 0`) get a negative temperature, so the
    /// value decreases continuously through `±∞` across the equator.
    pub fn ent_temperature(&self, epsilon: f64) -> f64 {
        let r = self.radius();
        if r == 0.0 {
            return f64::INFINITY;
        }
        let lambda_minus = 0.5 - r;
        if lambda_minus <= PURE_POPULATION_TOL {
            return 0.0;
        }
        let t = 2.0 * epsilon / ((0.5 + r) / lambda_minus).ln();
        if self.a < 0.0 {
            -t
        } else {
            t
        }
    }

    /// Extracts the traceless entanglement Hamiltonian whose Gibbs family
    /// contains this state:
    ///
    /// ```text
    /// H = ε/√(a²+|b|²) · [[a, b], [b*, −a]]
    /// ```
    ///
    /// Its unit field direction is `(Re b, −Im b, a)/√(a²+|b|²)`, i.e.
    /// `(Re κ, −Im κ, 1)/√(1+|κ|²)` with `κ = b/a` when `a ≠ 0`.
    pub fn extract_ent_hamiltonian(&self, epsilon: f64) -> Result<EntHamiltonian, QubitError> {
        if epsilon <= 0.0 {
            return Err(QubitError::NonpositiveEnergyScale { epsilon });
        }
        let r = self.radius();
        if r == 0.0 {
            return Err(QubitError::DegenerateState);
        }
        Ok(EntHamiltonian::from_field(
            epsilon,
            [self.b.re / r, -self.b.im / r, self.a / r],
        ))
    }
}
