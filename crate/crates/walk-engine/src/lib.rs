//! Exact discrete-time quantum walk on the integer line.
//!
//! One step applies the coin unitary
//!
//! ```text
//! U_θ = [[cos θ, sin θ], [sin θ, −cos θ]]
//! ```
//!
//! to the chirality of every site and then shifts the `+` component one site
//! up and the `−` component one site down. The walker position plays the
//! role of an environment for the chirality qubit: tracing it out yields a
//! reduced density operator whose time average is the equilibrium object
//! analyzed by the `thermo-analysis` crate.

mod error;
mod state;

pub use error::WalkError;
pub use state::{CoinSpec, InitialKind, InitialSpec, WalkState};

use num_complex::Complex64;
use qubit_core::QubitDensity;

/// Default threshold on the sliding-window variation of the running mean
/// below which a time average is flagged as converged.
pub const CONVERGENCE_THRESHOLD: f64 = 5e-3;

/// Time-averaged reduced coin state of one evolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumSample {
    pub a_bar: f64,
    pub b_bar: Complex64,
    /// True when the running mean stopped moving within
    /// [`CONVERGENCE_THRESHOLD`] over the last tenth of the averaging window.
    pub converged: bool,
    /// Largest deviation of the running mean from its final value over the
    /// last tenth of the averaging window.
    pub residual: f64,
}

impl EquilibriumSample {
    /// The averaged reduced density operator.
    pub fn density(&self) -> Result<QubitDensity, qubit_core::QubitError> {
        QubitDensity::from_ab(self.a_bar, self.b_bar)
    }
}

/// Reduced density operator of the coin: partial trace over position.
///
/// `a = Σ_n |d_n|² − 1/2`, `b = Σ_n d_n e_n*`, normalized by the current
/// total norm so rounding drift cannot push the result off the Bloch ball.
pub fn coin_rdo(state: &WalkState) -> QubitDensity {
    let mut dd = 0.0;
    let mut ee = 0.0;
    let mut de = Complex64::ZERO;
    for (d, e) in state.d().iter().zip(state.e()) {
        dd += d.norm_sqr();
        ee += e.norm_sqr();
        de += d * e.conj();
    }
    let norm = dd + ee;
    QubitDensity::from_ab(0.5 * (dd - ee) / norm, de / norm)
        .expect("partial trace of a pure state is positive")
}

/// Evolves an initial state for `t_max` steps and returns the Cesàro mean of
/// `(a(t), b(t))` over `t ∈ [t_burn, t_max]`.
///
/// The lattice window is sized from the initial support plus `t_max`, so the
/// light cone can never overflow it.
pub fn evolve_and_average(
    spec: &InitialSpec,
    coin: &CoinSpec,
    t_burn: u32,
    t_max: u32,
) -> Result<EquilibriumSample, WalkError> {
    if t_burn >= t_max {
        return Err(WalkError::BadTimeWindow { t_burn, t_max });
    }
    let halfwidth = spec.support_halfwidth() + t_max as usize + 1;
    let mut state = init_state(spec, halfwidth)?;

    let mut sum_a = 0.0;
    let mut sum_b = Complex64::ZERO;
    let mut running = Vec::with_capacity((t_max - t_burn + 1) as usize);
    for t in 0..=t_max {
        if t > 0 {
            state.step(coin)?;
        }
        if t >= t_burn {
            let rdo = coin_rdo(&state);
            sum_a += rdo.a();
            sum_b += rdo.b();
            let n = running.len() as f64 + 1.0;
            running.push((sum_a / n, sum_b / n));
        }
    }

    let &(a_bar, b_bar) = running.last().expect("averaging window is nonempty");
    // at least two points: the final mean alone always has zero deviation
    let tail = (running.len() / 10).max(2).min(running.len());
    let residual = running[running.len() - tail..]
        .iter()
        .map(|&(a, b)| {
            let da = a - a_bar;
            let db = b - b_bar;
            (da * da + db.norm_sqr()).sqrt()
        })
        .fold(0.0, f64::max);

    Ok(EquilibriumSample {
        a_bar,
        b_bar,
        converged: residual < CONVERGENCE_THRESHOLD,
        residual,
    })
}

/// Builds the initial state of [`InitialSpec`] on a window of
/// `2·window_halfwidth + 1` sites centred on the origin.
pub fn init_state(spec: &InitialSpec, window_halfwidth: usize) -> Result<WalkState, WalkError> {
    WalkState::new(spec, window_halfwidth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn localized(gamma: f64, phi: f64) -> InitialSpec {
        InitialSpec::new(InitialKind::Localized, gamma, phi).unwrap()
    }

    #[test]
    fn localized_north_pole_chirality() {
        let state = init_state(&localized(0.0, 0.0), 4).unwrap();
        assert_eq!(state.d()[4], Complex64::ONE);
        assert!(state.d().iter().chain(state.e()).skip(5).all(|c| c.norm() == 0.0));
        assert!((state.norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn localized_equatorial_chirality() {
        let state = init_state(&localized(FRAC_PI_2, FRAC_PI_2), 2).unwrap();
        let w = std::f64::consts::FRAC_1_SQRT_2;
        assert!((state.d()[2] - Complex64::new(w, 0.0)).norm() < 1e-15);
        assert!((state.e()[2] - Complex64::new(0.0, w)).norm() < 1e-15);
    }

    #[test]
    fn gaussian_profile_and_norm() {
        let spec = InitialSpec::new(InitialKind::Gaussian { xi: 10.0 }, 0.0, 0.0).unwrap();
        let state = init_state(&spec, 80).unwrap();
        assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
        assert!(state.e().iter().all(|c| c.norm() == 0.0));
        // d_n ∝ e^{−n²/400}: check the ratio between neighbouring sites
        let center = 80;
        let ratio = (state.d()[center + 5] / state.d()[center]).re;
        assert!((ratio - (-25.0f64 / 400.0).exp()).abs() < 1e-12);
    }

    #[test]
    fn gaussian_window_too_small() {
        let spec = InitialSpec::new(InitialKind::Gaussian { xi: 10.0 }, 0.0, 0.0).unwrap();
        assert!(matches!(
            init_state(&spec, 10),
            Err(WalkError::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn hadamard_single_step() {
        let coin = CoinSpec::new(FRAC_PI_4).unwrap();
        let mut state = init_state(&localized(0.0, 0.0), 2).unwrap();
        state.step(&coin).unwrap();
        let w = std::f64::consts::FRAC_1_SQRT_2;
        assert!((state.d()[3] - Complex64::new(w, 0.0)).norm() < 1e-15);
        assert!((state.e()[1] - Complex64::new(w, 0.0)).norm() < 1e-15);
        assert_eq!(state.time(), 1);
    }

    #[test]
    fn hadamard_two_step_distribution() {
        let coin = CoinSpec::new(FRAC_PI_4).unwrap();
        let mut state = init_state(&localized(0.0, 0.0), 3).unwrap();
        state.step(&coin).unwrap();
        state.step(&coin).unwrap();
        let p = state.position_distribution();
        assert!((p[1] - 0.25).abs() < 1e-15); // n = −2
        assert!((p[3] - 0.5).abs() < 1e-15); // n = 0
        assert!((p[5] - 0.25).abs() < 1e-15); // n = +2
    }

    #[test]
    fn window_overflow_detected() {
        let coin = CoinSpec::new(FRAC_PI_4).unwrap();
        let mut state = init_state(&localized(0.0, 0.0), 1).unwrap();
        state.step(&coin).unwrap();
        assert!(matches!(state.step(&coin), Err(WalkError::WindowOverflow)));
    }

    #[test]
    fn rdo_of_product_state() {
        let gamma = 1.1;
        let phi = 2.3;
        let spec = InitialSpec::new(InitialKind::Gaussian { xi: 3.0 }, gamma, phi).unwrap();
        let rdo = coin_rdo(&init_state(&spec, 30).unwrap());
        assert!((rdo.a() - 0.5 * gamma.cos()).abs() < 1e-12);
        let expected_b = Complex64::from_polar(0.5 * gamma.sin(), -phi);
        assert!((rdo.b() - expected_b).norm() < 1e-12);
    }

    #[test]
    fn rdo_vanishes_after_one_hadamard_step() {
        // d and e live on different sites, so both a and b vanish.
        let coin = CoinSpec::new(FRAC_PI_4).unwrap();
        let mut state = init_state(&localized(0.0, 0.0), 2).unwrap();
        state.step(&coin).unwrap();
        let rdo = coin_rdo(&state);
        assert!(rdo.a().abs() < 1e-15);
        assert!(rdo.b().norm() < 1e-15);
    }

    #[test]
    fn light_cone_is_exact() {
        let coin = CoinSpec::new(0.9).unwrap();
        let spec = InitialSpec::new(InitialKind::Localized, 1.0, 0.5).unwrap();
        let mut state = init_state(&spec, 20).unwrap();
        for _ in 0..7 {
            state.step(&coin).unwrap();
        }
        let center = 20i64;
        for (i, (d, e)) in state.d().iter().zip(state.e()).enumerate() {
            let n = i as i64 - center;
            if n.abs() > 7 {
                assert_eq!(d.norm_sqr(), 0.0);
                assert_eq!(e.norm_sqr(), 0.0);
            }
        }
    }

    #[test]
    fn bad_time_window_rejected() {
        let coin = CoinSpec::new(FRAC_PI_4).unwrap();
        let err = evolve_and_average(&localized(0.0, 0.0), &coin, 50, 50).unwrap_err();
        assert!(matches!(err, WalkError::BadTimeWindow { .. }));
    }
}
