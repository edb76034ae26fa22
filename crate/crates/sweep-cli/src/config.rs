//! Sweep configuration: defaults, flat key-value config files, validation.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::path::Path;

use crate::SweepError;

/// Which initial walker profile the sweep simulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitKind {
    Localized,
    Gaussian,
}

impl std::str::FromStr for InitKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "localized" => Ok(Self::Localized),
            "gaussian" => Ok(Self::Gaussian),
            other => Err(format!("unknown init kind {other:?}, expected localized|gaussian")),
        }
    }
}

impl std::fmt::Display for InitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Localized => "localized",
            Self::Gaussian => "gaussian",
        })
    }
}

/// Full description of one deterministic sweep run.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Coin biases to sweep, each in the open interval (0, π/2).
    pub theta_list: Vec<f64>,
    pub init_kind: InitKind,
    /// Gaussian packet width; ignored for localized runs.
    pub xi: f64,
    /// Number of γ grid points on [0, π], inclusive of both poles.
    pub gamma_steps: usize,
    /// Number of φ grid points on the half-open interval [0, 2π).
    pub phi_steps: usize,
    pub t_burn: u32,
    pub t_max: u32,
    /// Residual threshold of the thermality verdict.
    pub thermal_threshold: f64,
    /// Samples with |ā| at or below this are excluded from the κ fit.
    pub a_floor: f64,
    pub output_path: String,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            theta_list: vec![FRAC_PI_4],
            init_kind: InitKind::Gaussian,
            xi: 10.0,
            gamma_steps: 6,
            phi_steps: 8,
            t_burn: 100,
            t_max: 400,
            thermal_threshold: 0.02,
            a_floor: 1e-3,
            output_path: "sweep.csv".into(),
        }
    }
}

impl SweepConfig {
    /// Checks every invariant; call after assembling a config from files
    /// and flag overrides.
    pub fn validate(&self) -> Result<(), SweepError> {
        if self.theta_list.is_empty() {
            return Err(SweepError::Config("theta_list must not be empty".into()));
        }
        for &theta in &self.theta_list {
            if !(theta > 0.0 && theta < FRAC_PI_2) {
                return Err(SweepError::Config(format!(
                    "theta {theta} outside the open interval (0, pi/2)"
                )));
            }
        }
        if self.gamma_steps < 2 {
            return Err(SweepError::Config(format!(
                "gamma_steps = {} but at least 2 are required",
                self.gamma_steps
            )));
        }
        if self.phi_steps < 1 {
            return Err(SweepError::Config("phi_steps must be at least 1".into()));
        }
        if self.t_burn >= self.t_max {
            return Err(SweepError::Config(format!(
                "t_burn {} must be below t_max {}",
                self.t_burn, self.t_max
            )));
        }
        if self.init_kind == InitKind::Gaussian && self.xi < 1.0 {
            return Err(SweepError::Config(format!("xi = {} must be at least 1", self.xi)));
        }
        if self.thermal_threshold <= 0.0 || self.thermal_threshold.is_nan() {
            return Err(SweepError::Config("thermal_threshold must be positive".into()));
        }
        if self.a_floor <= 0.0 || self.a_floor.is_nan() {
            return Err(SweepError::Config("a_floor must be positive".into()));
        }
        Ok(())
    }

    /// γ grid: `gamma_steps` points uniform on [0, π] inclusive.
    pub fn gamma_grid(&self) -> Vec<f64> {
        let n = self.gamma_steps;
        (0..n).map(|i| PI * i as f64 / (n - 1) as f64).collect()
    }

    /// φ grid: `phi_steps` points uniform on [0, 2π) half-open.
    pub fn phi_grid(&self) -> Vec<f64> {
        let n = self.phi_steps;
        (0..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect()
    }

    /// Loads a flat `key = value` config file; `#` starts a comment.
    /// Unset keys keep their default values.
    pub fn from_file(path: &Path) -> Result<Self, SweepError> {
        let text = std::fs::read_to_string(path)?;
        let mut cfg = Self::default();
        cfg.apply_text(&text)?;
        Ok(cfg)
    }

    fn apply_text(&mut self, text: &str) -> Result<(), SweepError> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                SweepError::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            self.set(key.trim(), value.trim()).map_err(|e| {
                SweepError::Config(format!("line {}: {e}", lineno + 1))
            })?;
        }
        Ok(())
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, String> {
            value
                .parse()
                .map_err(|_| format!("invalid value {value:?} for {key}"))
        }
        match key {
            "theta_list" => {
                self.theta_list = value
                    .split(',')
                    .map(|s| num("theta_list", s.trim()))
                    .collect::<Result<_, _>>()?;
            }
            "init_kind" => self.init_kind = value.parse()?,
            "xi" => self.xi = num(key, value)?,
            "gamma_steps" => self.gamma_steps = num(key, value)?,
            "phi_steps" => self.phi_steps = num(key, value)?,
            "t_burn" => self.t_burn = num(key, value)?,
            "t_max" => self.t_max = num(key, value)?,
            "thermal_threshold" => self.thermal_threshold = num(key, value)?,
            "a_floor" => self.a_floor = num(key, value)?,
            "output_path" => self.output_path = value.to_string(),
            other => return Err(format!("unknown config key {other:?}")),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        SweepConfig::default().validate().unwrap();
    }

    #[test]
    fn grids_have_declared_shape() {
        let cfg = SweepConfig::default();
        let gammas = cfg.gamma_grid();
        let phis = cfg.phi_grid();
        assert_eq!(gammas.len(), 6);
        assert_eq!(phis.len(), 8);
        assert_eq!(gammas[0], 0.0);
        assert!((gammas[5] - PI).abs() < 1e-15);
        assert_eq!(phis[0], 0.0);
        assert!(phis[7] < 2.0 * PI);
    }

    #[test]
    fn empty_theta_rejected() {
        let cfg = SweepConfig { theta_list: vec![], ..Default::default() };
        assert!(matches!(cfg.validate(), Err(SweepError::Config(_))));
    }

    #[test]
    fn out_of_range_theta_rejected() {
        let cfg = SweepConfig { theta_list: vec![FRAC_PI_2], ..Default::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn bad_time_window_rejected() {
        let cfg = SweepConfig { t_burn: 400, t_max: 400, ..Default::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn config_text_round_trip() {
        let mut cfg = SweepConfig::default();
        cfg.apply_text(
            "# comment\n\
             theta_list = 0.5, 0.7  # two coins\n\
             init_kind = localized\n\
             gamma_steps = 9\n\
             t_max = 500\n\
             output_path = out/run.csv\n",
        )
        .unwrap();
        assert_eq!(cfg.theta_list, vec![0.5, 0.7]);
        assert_eq!(cfg.init_kind, InitKind::Localized);
        assert_eq!(cfg.gamma_steps, 9);
        assert_eq!(cfg.t_max, 500);
        assert_eq!(cfg.output_path, "out/run.csv");
        // untouched keys keep defaults
        assert_eq!(cfg.phi_steps, 8);
    }

    #[test]
    fn unknown_key_is_an_error() {
        let mut cfg = SweepConfig::default();
        let err = cfg.apply_text("tmax = 3\n").unwrap_err();
        assert!(err.to_string().contains("unknown config key"));
    }
}
