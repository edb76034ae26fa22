//! Bloch-sphere geometry of a thermal family `b = κa`.
//!
//! All equilibria of such a family lie on the line through the origin with
//! Bloch direction `(Re κ, −Im κ, 1)/√(1 + |κ|²)`; the set of initial states
//! that relax to a common equilibrium (an isotherm) is the plane orthogonal
//! to it at signed distance `cos α₀` from the centre of the sphere.

use num_complex::Complex64;
use qubit_core::QubitDensity;

/// Cosine of the angle between the initial Bloch vector `(γ, φ)` and the
/// thermal axis of the family with constant `κ`:
///
/// ```text
/// cos α = (Re κ · sin γ cos φ − Im κ · sin γ sin φ + cos γ) / √(1 + |κ|²)
/// ```
pub fn cos_alpha(kappa: Complex64, gamma: f64, phi: f64) -> f64 {
    let (sg, cg) = gamma.sin_cos();
    (kappa.re * sg * phi.cos() - kappa.im * sg * phi.sin() + cg) / (1.0 + kappa.norm_sqr()).sqrt()
}

/// The equilibrium state a pure initial state at angle `α` from the thermal
/// axis relaxes to: `a = cos α / (2√(1 + |κ|²))`, `b = κa`.
pub fn thermal_density_from_alpha(kappa: Complex64, alpha: f64) -> QubitDensity {
    let a = alpha.cos() / (2.0 * (1.0 + kappa.norm_sqr()).sqrt());
    QubitDensity::from_ab(a, kappa * a).expect("thermal state lies inside the Bloch ball")
}

/// Plane `normal · B = rhs` in Bloch coordinates `B = (x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsothermPlane {
    pub normal: [f64; 3],
    pub rhs: f64,
}

/// The isotherm of the family `κ` at axis angle `α₀`: all pure initial states
/// on this plane share `cos α = cos α₀` and relax to the same equilibrium.
pub fn isotherm_plane(kappa: Complex64, alpha0: f64) -> IsothermPlane {
    IsothermPlane {
        normal: [kappa.re, -kappa.im, 1.0],
        rhs: (1.0 + kappa.norm_sqr()).sqrt() * alpha0.cos(),
    }
}

/// Distance from the centre of the Bloch sphere to the plane; for an
/// isotherm this is `|cos α₀|`.
pub fn plane_distance_origin(plane: &IsothermPlane) -> f64 {
    let n = &plane.normal;
    plane.rhs.abs() / (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt()
}

/// First-law check along the family: returns `(δQ, T·ΔS)` for the move from
/// `α` to `α + dα`, which agree to first order in `dα`.
///
/// The populations are `λ(α) = ½(1 + cos α)` at energy `−ε` and
/// `½(1 − cos α)` at `+ε`, so `δQ = ε (cos α − cos(α + dα))`; the
/// temperature is evaluated at the midpoint `α + dα/2`.
pub fn heat_entropy_check(
    kappa: Complex64,
    epsilon: f64,
    alpha: f64,
    dalpha: f64,
) -> (f64, f64) {
    let delta_q = epsilon * (alpha.cos() - (alpha + dalpha).cos());
    let s0 = thermal_density_from_alpha(kappa, alpha).von_neumann_entropy();
    let s1 = thermal_density_from_alpha(kappa, alpha + dalpha).von_neumann_entropy();
    let t_mid = thermal_density_from_alpha(kappa, alpha + 0.5 * dalpha).ent_temperature(epsilon);
    (delta_q, t_mid * (s1 - s0))
}
