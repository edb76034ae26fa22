//! Sweep orchestration: grid evaluation, summaries, isotherm tables and
//! single-trajectory time series.

use std::collections::BTreeMap;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thermo_analysis::{
    estimate_kappa, isotherm_plane, plane_distance_origin, thermal_density_from_alpha,
    EnsemblePoint, KappaFitOptions, ThermalVerdict,
};
use walk_engine::{
    coin_rdo, evolve_and_average, init_state, CoinSpec, EquilibriumSample, InitialKind,
    InitialSpec, WalkState,
};

use crate::config::{InitKind, SweepConfig};
use crate::record::{reported_t_ent, SweepRecord, CSV_HEADER};
use crate::SweepError;

/// Per-coin thermality summary, keyed by the `θ` display string in the JSON
/// artifact.
#[derive(Debug, Clone, Serialize)]
pub struct ThetaSummary {
    pub kappa_hat: [f64; 2],
    pub residual: f64,
    pub is_thermal: bool,
    pub n_used: usize,
}

impl From<&ThermalVerdict> for ThetaSummary {
    fn from(v: &ThermalVerdict) -> Self {
        Self {
            kappa_hat: [v.kappa_hat.re, v.kappa_hat.im],
            residual: v.residual,
            is_thermal: v.is_thermal,
            n_used: v.n_used,
        }
    }
}

/// Result of one full sweep: ordered records plus one verdict per coin.
#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub records: Vec<SweepRecord>,
    pub summaries: BTreeMap<String, ThetaSummary>,
}

fn initial_spec(cfg: &SweepConfig, gamma: f64, phi: f64) -> Result<InitialSpec, SweepError> {
    let kind = match cfg.init_kind {
        InitKind::Localized => InitialKind::Localized,
        InitKind::Gaussian => InitialKind::Gaussian { xi: cfg.xi },
    };
    InitialSpec::new(kind, gamma, phi).map_err(|source| SweepError::Engine {
        theta: f64::NAN,
        gamma,
        phi,
        source,
    })
}

/// Evaluates the time-averaged equilibrium on the full `(θ, γ, φ)` grid.
///
/// Grid points are independent and run on the rayon pool; results are
/// collected in grid order so the output is deterministic byte-for-byte.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutput, SweepError> {
    cfg.validate()?;
    let gammas = cfg.gamma_grid();
    let phis = cfg.phi_grid();

    let mut grid = Vec::with_capacity(cfg.theta_list.len() * gammas.len() * phis.len());
    for &theta in &cfg.theta_list {
        for &gamma in &gammas {
            for &phi in &phis {
                grid.push((theta, gamma, phi));
            }
        }
    }

    let samples: Vec<(f64, f64, f64, EquilibriumSample)> = grid
        .par_iter()
        .map(|&(theta, gamma, phi)| {
            let coin = CoinSpec::new(theta).map_err(|source| SweepError::Engine {
                theta,
                gamma,
                phi,
                source,
            })?;
            let spec = initial_spec(cfg, gamma, phi)?;
            let sample = evolve_and_average(&spec, &coin, cfg.t_burn, cfg.t_max).map_err(
                |source| SweepError::Engine { theta, gamma, phi, source },
            )?;
            Ok((theta, gamma, phi, sample))
        })
        .collect::<Result<_, SweepError>>()?;

    let records: Vec<SweepRecord> = samples
        .iter()
        .map(|&(theta, gamma, phi, ref s)| SweepRecord::from_sample(theta, gamma, phi, s))
        .collect();

    let opts = KappaFitOptions { a_floor: cfg.a_floor, threshold: cfg.thermal_threshold };
    let mut summaries = BTreeMap::new();
    for &theta in &cfg.theta_list {
        let ensemble: Vec<EnsemblePoint> = samples
            .iter()
            .filter(|&&(t, ..)| t == theta)
            .map(|&(_, gamma, phi, ref s)| EnsemblePoint {
                gamma,
                phi,
                a: s.a_bar,
                b: s.b_bar,
            })
            .collect();
        let verdict = estimate_kappa(&ensemble, &opts)?;
        summaries.insert(format!("{theta}"), ThetaSummary::from(&verdict));
    }

    Ok(SweepOutput { records, summaries })
}

/// Writes the records as UTF-8 CSV with the stable header row.
pub fn write_csv<W: Write>(records: &[SweepRecord], mut w: W) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for rec in records {
        writeln!(w, "{}", rec.csv_line())?;
    }
    Ok(())
}

/// Writes the per-θ summary map as pretty JSON.
pub fn write_summary_json<W: Write>(
    summaries: &BTreeMap<String, ThetaSummary>,
    mut w: W,
) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut w, summaries)?;
    writeln!(w)
}

/// One analytic isotherm row for a thermal family `b = κa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsothermRow {
    pub alpha: f64,
    /// Right-hand side of the plane equation `(Re κ)x − (Im κ)y + z = rhs`.
    pub rhs: f64,
    /// Distance from the centre of the Bloch sphere to the plane, `|cos α|`.
    pub distance: f64,
    /// Temperature of the equilibrium on this isotherm, in units of ε.
    pub t_ent: f64,
}

/// Analytic (simulation-free) isotherm table over `α` uniform on `[0, π]`
/// inclusive.
pub fn isotherm_table(kappa: Complex64, alpha_steps: usize) -> Result<Vec<IsothermRow>, SweepError> {
    if alpha_steps < 2 {
        return Err(SweepError::Config(format!(
            "alpha_steps = {alpha_steps} but at least 2 are required"
        )));
    }
    let rows = (0..alpha_steps)
        .map(|i| {
            let alpha = std::f64::consts::PI * i as f64 / (alpha_steps - 1) as f64;
            let plane = isotherm_plane(kappa, alpha);
            let rho = thermal_density_from_alpha(kappa, alpha);
            IsothermRow {
                alpha,
                rhs: plane.rhs,
                distance: plane_distance_origin(&plane),
                t_ent: reported_t_ent(&rho, 1.0),
            }
        })
        .collect();
    Ok(rows)
}

/// Writes an isotherm table as CSV.
pub fn write_isotherms<W: Write>(rows: &[IsothermRow], mut w: W) -> std::io::Result<()> {
    writeln!(w, "alpha,rhs,distance,T_ent")?;
    for r in rows {
        writeln!(w, "{},{},{},{}", r.alpha, r.rhs, r.distance, r.t_ent)?;
    }
    Ok(())
}

/// One time step of a single-trajectory series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryRow {
    pub t: u32,
    pub a: f64,
    pub b_re: f64,
    pub b_im: f64,
    pub s_vn: f64,
}

/// Evolves one initial state and records `(a(t), b(t), S_vN(t))` for
/// `t = 0..=t_max`.
pub fn trajectory(
    spec: &InitialSpec,
    coin: &CoinSpec,
    t_max: u32,
) -> Result<Vec<TrajectoryRow>, SweepError> {
    let halfwidth = spec.support_halfwidth() + t_max as usize + 1;
    let mut state: WalkState = init_state(spec, halfwidth).map_err(|source| SweepError::Engine {
        theta: coin.theta(),
        gamma: spec.gamma(),
        phi: spec.phi(),
        source,
    })?;
    let mut rows = Vec::with_capacity(t_max as usize + 1);
    for t in 0..=t_max {
        if t > 0 {
            state.step(coin).map_err(|source| SweepError::Engine {
                theta: coin.theta(),
                gamma: spec.gamma(),
                phi: spec.phi(),
                source,
            })?;
        }
        let rdo = coin_rdo(&state);
        rows.push(TrajectoryRow {
            t,
            a: rdo.a(),
            b_re: rdo.b().re,
            b_im: rdo.b().im,
            s_vn: rdo.von_neumann_entropy(),
        });
    }
    Ok(rows)
}

/// Writes a trajectory as CSV.
pub fn write_trajectory<W: Write>(rows: &[TrajectoryRow], mut w: W) -> std::io::Result<()> {
    writeln!(w, "t,a,b_re,b_im,S_vN")?;
    for r in rows {
        writeln!(w, "{},{},{},{},{}", r.t, r.a, r.b_re, r.b_im, r.s_vn)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};

    #[test]
    fn isotherm_table_hadamard_values() {
        let rows = isotherm_table(Complex64::ONE, 5).unwrap();
        assert_eq!(rows.len(), 5);
        let expect = [1.0, std::f64::consts::FRAC_1_SQRT_2, 0.0, std::f64::consts::FRAC_1_SQRT_2, 1.0];
        for (row, want) in rows.iter().zip(expect) {
            assert!((row.distance - want).abs() < 1e-15, "alpha={}", row.alpha);
        }
        // α = π/2: maximally mixed equilibrium, infinite temperature
        assert!(rows[2].t_ent.is_infinite());
        // poles are pure: zero temperature
        assert_eq!(rows[0].t_ent, 0.0);
        assert_eq!(rows[4].t_ent, 0.0);
    }

    #[test]
    fn isotherm_rhs_for_tan_theta() {
        // κ = tan θ: rhs = cos α / cos θ; at θ = α = π/3 this is 1
        let rows = isotherm_table(Complex64::new(FRAC_PI_3.tan(), 0.0), 4).unwrap();
        // α grid 0, π/3, 2π/3, π — the second row is α = π/3
        assert!((rows[1].alpha - FRAC_PI_3).abs() < 1e-15);
        assert!((rows[1].rhs - 1.0).abs() < 1e-12);
    }

    #[test]
    fn isotherm_needs_two_steps() {
        assert!(matches!(
            isotherm_table(Complex64::ONE, 1),
            Err(SweepError::Config(_))
        ));
    }

    #[test]
    fn trajectory_starts_pure_and_has_full_length() {
        let spec = InitialSpec::new(InitialKind::Localized, 1.0, 0.5).unwrap();
        let coin = CoinSpec::new(FRAC_PI_4).unwrap();
        let rows = trajectory(&spec, &coin, 20).unwrap();
        assert_eq!(rows.len(), 21);
        assert_eq!(rows[0].t, 0);
        assert!(rows[0].s_vn.abs() < 1e-12);
        assert!((rows[0].a - 0.5 * 1.0f64.cos()).abs() < 1e-12);
    }

    #[test]
    fn tiny_sweep_has_grid_coverage_and_summary() {
        let cfg = SweepConfig {
            theta_list: vec![FRAC_PI_4],
            gamma_steps: 3,
            phi_steps: 2,
            xi: 2.0,
            t_burn: 10,
            t_max: 40,
            ..Default::default()
        };
        let out = run_sweep(&cfg).unwrap();
        assert_eq!(out.records.len(), 6);
        assert_eq!(out.summaries.len(), 1);
        // records are in grid order: theta-major, then gamma, then phi
        assert_eq!(out.records[0].gamma, 0.0);
        assert_eq!(out.records[1].phi, PI);
        assert!((out.records[4].gamma - PI).abs() < 1e-15);
    }
}
