//! Closed-form long-time averages of the coin coherence for the walk on the
//! line, used as ground truth against simulated equilibria.

use num_complex::Complex64;

/// Long-time average of `b` for a broad Gaussian packet with coin bias `θ`
/// and initial chirality angles `(γ, φ)`:
///
/// ```text
/// b̄ = ½ sin θ (sin θ sin γ cos φ + cos θ cos γ)
/// ```
///
/// The result is real: the Gaussian family is thermal with `κ = tan θ`, so
/// `b̄ = tan θ · ā` and `ā` is real.
pub fn predicted_b_gaussian(theta: f64, gamma: f64, phi: f64) -> f64 {
    let (st, ct) = theta.sin_cos();
    0.5 * st * (st * gamma.sin() * phi.cos() + ct * gamma.cos())
}

/// Long-time average of `b` for a single-site walker under the Hadamard coin
/// (`θ = π/4`):
///
/// ```text
/// b̄ = ½ (1 − 1/√2) [cos γ + sin γ (cos φ − i√2 sin φ)]
/// ```
///
/// Unlike the Gaussian case the imaginary part survives, which is what makes
/// the localized family non-thermal.
pub fn predicted_b_localized_hadamard(gamma: f64, phi: f64) -> Complex64 {
    let c = 0.5 * (1.0 - std::f64::consts::FRAC_1_SQRT_2);
    let (sg, cg) = gamma.sin_cos();
    let (sp, cp) = phi.sin_cos();
    c * Complex64::new(cg + sg * cp, -std::f64::consts::SQRT_2 * sg * sp)
}
