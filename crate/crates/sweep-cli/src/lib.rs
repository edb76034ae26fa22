//! Deterministic sweep driver for the quantum-walk thermalization pipeline.
//!
//! Everything the `qwalk` binary does lives here so the integration tests
//! can exercise it directly: configuration handling, grid sweeps with CSV
//! and JSON emission, analytic isotherm tables, single-trajectory series,
//! and the acceptance verification suite.

pub mod config;
pub mod record;
pub mod sweep;
pub mod verify;

use thiserror::Error;

/// Errors of the sweep driver.
#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("engine failure at theta={theta}, gamma={gamma}, phi={phi}: {source}")]
    Engine {
        theta: f64,
        gamma: f64,
        phi: f64,
        #[source]
        source: walk_engine::WalkError,
    },
    #[error("kappa fit failed: {0}")]
    Fit(#[from] thermo_analysis::ThermoError),
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
}
