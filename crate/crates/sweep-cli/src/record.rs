//! Output rows and the reporting conventions for the temperature column.

use num_complex::Complex64;
use qubit_core::QubitDensity;
use thermo_analysis::cos_alpha;
use walk_engine::EquilibriumSample;

/// CSV header, exactly the field list of [`SweepRecord`] in declared order.
pub const CSV_HEADER: &str =
    "theta,gamma,phi,a_bar,b_re,b_im,cos_alpha_pred,lambda_plus,S_vN,T_ent,converged,residual";

/// Population threshold below which a reported equilibrium counts as pure
/// (temperature reported as 0) or maximally mixed (reported as inf).
pub const REPORTING_TOL: f64 = 1e-3;

/// One grid point of a sweep: simulated averages plus derived analysis
/// columns. Energies are in units of the Hamiltonian scale ε = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub theta: f64,
    pub gamma: f64,
    pub phi: f64,
    pub a_bar: f64,
    pub b_re: f64,
    pub b_im: f64,
    /// `cos α` of the initial state relative to the thermal axis predicted
    /// for this coin, `κ = tan θ`.
    pub cos_alpha_pred: f64,
    pub lambda_plus: f64,
    pub s_vn: f64,
    /// May be `±inf`; serialized as the literal tokens `inf` / `-inf`.
    pub t_ent: f64,
    pub converged: bool,
    pub residual: f64,
}

/// Entanglement temperature with reporting snaps: equilibria within
/// [`REPORTING_TOL`] of a pure state report exactly 0, and equilibria whose
/// squared Bloch radius is below [`REPORTING_TOL`] report `+inf`. The raw
/// formula diverges only logarithmically near these limits, so finite-time
/// averages would otherwise print huge meaningless magnitudes.
pub fn reported_t_ent(rho: &QubitDensity, epsilon: f64) -> f64 {
    let r = rho.radius();
    if r * r < REPORTING_TOL {
        return f64::INFINITY;
    }
    if 0.5 - r < REPORTING_TOL {
        return 0.0;
    }
    rho.ent_temperature(epsilon)
}

impl SweepRecord {
    /// Assembles the record from a simulated equilibrium.
    pub fn from_sample(theta: f64, gamma: f64, phi: f64, sample: &EquilibriumSample) -> Self {
        let rho = sample
            .density()
            .expect("time average of valid states stays in the Bloch ball");
        let spectral = rho.eigendecompose();
        let kappa_pred = Complex64::new(theta.tan(), 0.0);
        Self {
            theta,
            gamma,
            phi,
            a_bar: sample.a_bar,
            b_re: sample.b_bar.re,
            b_im: sample.b_bar.im,
            cos_alpha_pred: cos_alpha(kappa_pred, gamma, phi),
            lambda_plus: spectral.lambda_plus,
            s_vn: rho.von_neumann_entropy(),
            t_ent: reported_t_ent(&rho, 1.0),
            converged: sample.converged,
            residual: sample.residual,
        }
    }

    /// One CSV line, no trailing newline. `f64` values use Rust's shortest
    /// round-trip formatting; infinities print as `inf` / `-inf`.
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.theta,
            self.gamma,
            self.phi,
            self.a_bar,
            self.b_re,
            self.b_im,
            self.cos_alpha_pred,
            self.lambda_plus,
            self.s_vn,
            self.t_ent,
            self.converged,
            self.residual,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn header_matches_field_order() {
        assert_eq!(CSV_HEADER.split(',').count(), 12);
        assert!(CSV_HEADER.starts_with("theta,gamma,phi,a_bar"));
        assert!(CSV_HEADER.ends_with("T_ent,converged,residual"));
    }

    #[test]
    fn infinity_serializes_as_inf_token() {
        let sample = EquilibriumSample {
            a_bar: 0.0,
            b_bar: Complex64::ZERO,
            converged: true,
            residual: 0.0,
        };
        let rec = SweepRecord::from_sample(FRAC_PI_4, 2.0, 1.0, &sample);
        assert!(rec.t_ent.is_infinite());
        let line = rec.csv_line();
        assert!(line.contains(",inf,"), "line = {line}");
        assert_eq!(format!("{}", f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn near_pure_average_reports_zero_temperature() {
        // λ− ≈ 6e−4: raw temperature would be a large finite number
        let rho = QubitDensity::from_ab(0.4994, Complex64::new(0.0, 0.0)).unwrap();
        assert_eq!(reported_t_ent(&rho, 1.0), 0.0);
        assert!(rho.ent_temperature(1.0) > 0.0);
    }

    #[test]
    fn near_mixed_average_reports_infinite_temperature() {
        let rho = QubitDensity::from_ab(0.01, Complex64::new(0.01, 0.0)).unwrap();
        assert_eq!(reported_t_ent(&rho, 1.0), f64::INFINITY);
    }

    #[test]
    fn generic_state_uses_raw_temperature() {
        let rho = QubitDensity::from_ab(0.2, Complex64::new(0.1, -0.05)).unwrap();
        assert_eq!(reported_t_ent(&rho, 1.3), rho.ent_temperature(1.3));
    }
}
