//! Property tests tying the fit, the geometry and the closed-form
//! predictions together.

use num_complex::Complex64;
use proptest::prelude::*;
use thermo_analysis::{
    cos_alpha, estimate_kappa, isotherm_plane, plane_distance_origin, predicted_b_gaussian,
    thermal_density_from_alpha, EnsemblePoint, KappaFitOptions,
};

fn kappa_strategy() -> impl Strategy<Value = Complex64> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

proptest! {
    #[test]
    fn cos_alpha_is_a_cosine(
        kappa in kappa_strategy(),
        gamma in 0.0..std::f64::consts::PI,
        phi in 0.0..std::f64::consts::TAU,
    ) {
        let c = cos_alpha(kappa, gamma, phi);
        prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&c));
    }

    #[test]
    fn thermal_eigenvalues_follow_the_axis_angle(
        kappa in kappa_strategy(),
        alpha in 0.01..3.13f64,
    ) {
        let rho = thermal_density_from_alpha(kappa, alpha);
        let spectral = rho.eigendecompose();
        // magnitude-ordered spectrum: λ± = ½(1 ± |cos α|)
        let r = 0.5 * alpha.cos().abs();
        prop_assert!((spectral.lambda_plus - (0.5 + r)).abs() < 1e-12);
        prop_assert!((spectral.lambda_minus - (0.5 - r)).abs() < 1e-12);
    }

    #[test]
    fn fit_recovers_kappa_from_synthetic_family(
        kappa in kappa_strategy(),
        scale in 0.05..0.2f64,
    ) {
        let pts: Vec<EnsemblePoint> = (0..7)
            .map(|i| {
                let a = scale * (0.3 + 0.1 * i as f64);
                EnsemblePoint { gamma: 0.3 * i as f64, phi: 0.0, a, b: kappa * a }
            })
            .collect();
        let v = estimate_kappa(&pts, &KappaFitOptions::default()).unwrap();
        prop_assert!((v.kappa_hat - kappa).norm() < 1e-10);
        prop_assert!(v.is_thermal);
    }

    #[test]
    fn residual_is_scale_invariant(
        kappa in kappa_strategy(),
        factor in 0.2..5.0f64,
    ) {
        // perturb one point off the line, then rescale the whole ensemble
        let base: Vec<EnsemblePoint> = (0..6)
            .map(|i| {
                let a = 0.04 + 0.03 * i as f64;
                let noise = if i == 3 { Complex64::new(0.01, -0.004) } else { Complex64::ZERO };
                EnsemblePoint { gamma: 0.4 * i as f64, phi: 1.0, a, b: kappa * a + noise }
            })
            .collect();
        let scaled: Vec<EnsemblePoint> = base
            .iter()
            .map(|p| EnsemblePoint { a: factor * p.a, b: factor * p.b, ..*p })
            .collect();
        let opts = KappaFitOptions { a_floor: 1e-6, ..Default::default() };
        let v0 = estimate_kappa(&base, &opts).unwrap();
        let v1 = estimate_kappa(&scaled, &opts).unwrap();
        prop_assert!((v0.residual - v1.residual).abs() < 1e-10 * (1.0 + v0.residual));
        prop_assert!((v0.kappa_hat - v1.kappa_hat).norm() < 1e-10);
    }

    #[test]
    fn isotherm_distance_never_exceeds_radius(
        kappa in kappa_strategy(),
        alpha0 in 0.0..std::f64::consts::PI,
    ) {
        let plane = isotherm_plane(kappa, alpha0);
        let d = plane_distance_origin(&plane);
        prop_assert!(d <= 1.0 + 1e-12);
        prop_assert!((d - alpha0.cos().abs()).abs() < 1e-12);
    }
}

#[test]
fn gaussian_prediction_matches_thermal_family_everywhere() {
    // b̄(θ, γ, φ) must equal κa with κ = tan θ and a from the axis angle
    for theta in [0.3, std::f64::consts::FRAC_PI_4, 1.3] {
        let kappa = Complex64::new(theta.tan(), 0.0);
        for i in 0..7 {
            let gamma = std::f64::consts::PI * i as f64 / 6.0;
            for j in 0..8 {
                let phi = std::f64::consts::TAU * j as f64 / 8.0;
                let ca = cos_alpha(kappa, gamma, phi);
                let rho = thermal_density_from_alpha(kappa, ca.acos());
                let b = predicted_b_gaussian(theta, gamma, phi);
                assert!(
                    (b - rho.b().re).abs() < 1e-13,
                    "theta={theta}, gamma={gamma}, phi={phi}"
                );
            }
        }
    }
}

#[test]
fn gaussian_family_fit_is_exactly_thermal() {
    // synthesize the Gaussian ensemble from the closed form; the fit must
    // return κ = tan θ with vanishing residual
    let theta = 0.9f64;
    let mut pts = Vec::new();
    for i in 0..6 {
        let gamma = std::f64::consts::PI * i as f64 / 5.0;
        for j in 0..8 {
            let phi = std::f64::consts::TAU * j as f64 / 8.0;
            let b = predicted_b_gaussian(theta, gamma, phi);
            pts.push(EnsemblePoint {
                gamma,
                phi,
                a: b / theta.tan(),
                b: Complex64::new(b, 0.0),
            });
        }
    }
    let v = estimate_kappa(&pts, &KappaFitOptions::default()).unwrap();
    assert!((v.kappa_hat - Complex64::new(theta.tan(), 0.0)).norm() < 1e-12);
    assert!(v.residual < 1e-12);
    assert!(v.is_thermal);
}
