use num_complex::Complex64;

use crate::{QubitDensity, QubitError};

const ORTHOGONALITY_TOL: f64 = 1e-10;

/// Asymptotic state of a channel whose Kraus operators are the orthogonal
/// projectors `|ψ⁺⟩⟨ψ⁺|` and `|ψ⁻⟩⟨ψ⁻|`:
///
/// ```text
/// ρ∞ = Σ_j ⟨ψ_j|ρ₀|ψ_j⟩ |ψ_j⟩⟨ψ_j|
/// ```
///
/// The result is diagonal in `{ψ±}` with populations given by the overlaps
/// with the initial state.
pub fn kraus_projector_asymptotic(
    psi_plus: &[Complex64; 2],
    psi_minus: &[Complex64; 2],
    rho0: &QubitDensity,
) -> Result<QubitDensity, QubitError> {
    let overlap =
        (psi_plus[0].conj() * psi_minus[0] + psi_plus[1].conj() * psi_minus[1]).norm();
    if overlap > ORTHOGONALITY_TOL {
        return Err(QubitError::NonOrthogonal { overlap });
    }

    let m = rho0.matrix();
    let mut m00 = 0.0;
    let mut m11 = 0.0;
    let mut m01 = Complex64::ZERO;
    let mut trace = 0.0;
    for psi in [psi_plus, psi_minus] {
        // p = ⟨ψ|ρ₀|ψ⟩
        let rho_psi = [
            m[0][0] * psi[0] + m[0][1] * psi[1],
            m[1][0] * psi[0] + m[1][1] * psi[1],
        ];
        let p = (psi[0].conj() * rho_psi[0] + psi[1].conj() * rho_psi[1]).re;
        m00 += p * psi[0].norm_sqr();
        m11 += p * psi[1].norm_sqr();
        m01 += p * psi[0] * psi[1].conj();
        trace += p;
    }
    // Renormalize so slightly non-ideal projector pairs still yield unit trace.
    QubitDensity::from_ab(0.5 * (m00 - m11) / trace, m01 / trace)
}
