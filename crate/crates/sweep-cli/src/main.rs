//! `qwalk`: deterministic quantum-walk thermalization sweeps.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use sweep_cli::config::{InitKind, SweepConfig};
use sweep_cli::sweep::{
    isotherm_table, run_sweep, trajectory, write_csv, write_isotherms, write_summary_json,
    write_trajectory,
};
use sweep_cli::verify::{compute_verify_data, run_checks};
use walk_engine::{CoinSpec, InitialKind, InitialSpec};

#[derive(Parser)]
#[command(
    name = "qwalk",
    about = "Discrete-time quantum walk simulator and open-qubit thermalization analyzer",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Config-file path plus flag overrides; flags win over file values.
#[derive(Args, Clone)]
struct ConfigArgs {
    /// Flat key=value config file ('#' starts a comment)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Coin bias(es) in (0, pi/2), comma-separated
    #[arg(long, value_delimiter = ',')]
    theta: Option<Vec<f64>>,
    /// Initial walker profile
    #[arg(long, value_parser = clap::value_parser!(InitKind))]
    init: Option<InitKind>,
    /// Gaussian packet width (>= 1)
    #[arg(long)]
    xi: Option<f64>,
    /// Number of gamma grid points on [0, pi], inclusive
    #[arg(long)]
    gamma_steps: Option<usize>,
    /// Number of phi grid points on [0, 2pi), half-open
    #[arg(long)]
    phi_steps: Option<usize>,
    /// First time step included in the average
    #[arg(long)]
    t_burn: Option<u32>,
    /// Last time step of the evolution
    #[arg(long)]
    t_max: Option<u32>,
    /// Residual threshold of the thermality verdict
    #[arg(long)]
    threshold: Option<f64>,
    /// Exclude samples with |a_bar| at or below this from the kappa fit
    #[arg(long)]
    a_floor: Option<f64>,
    /// Output CSV path; the JSON summary lands next to it
    #[arg(long)]
    out: Option<String>,
}

impl ConfigArgs {
    fn resolve(&self) -> Result<SweepConfig> {
        let mut cfg = match &self.config {
            Some(path) => SweepConfig::from_file(path)
                .with_context(|| format!("reading config {}", path.display()))?,
            None => SweepConfig::default(),
        };
        if let Some(thetas) = &self.theta {
            cfg.theta_list = thetas.clone();
        }
        if let Some(init) = self.init {
            cfg.init_kind = init;
        }
        if let Some(xi) = self.xi {
            cfg.xi = xi;
        }
        if let Some(n) = self.gamma_steps {
            cfg.gamma_steps = n;
        }
        if let Some(n) = self.phi_steps {
            cfg.phi_steps = n;
        }
        if let Some(t) = self.t_burn {
            cfg.t_burn = t;
        }
        if let Some(t) = self.t_max {
            cfg.t_max = t;
        }
        if let Some(th) = self.threshold {
            cfg.thermal_threshold = th;
        }
        if let Some(floor) = self.a_floor {
            cfg.a_floor = floor;
        }
        if let Some(out) = &self.out {
            cfg.output_path = out.clone();
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Time series a(t), b(t), S_vN(t) of a single initial state
    Simulate {
        #[command(flatten)]
        config: ConfigArgs,
        /// Polar Bloch angle of the initial chirality, in [0, pi]
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
        /// Azimuthal Bloch angle of the initial chirality, in [0, 2pi)
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
    },
    /// Full (theta, gamma, phi) grid sweep with CSV + JSON summary
    Sweep {
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Analytic isotherm table for a thermal family b = kappa * a
    Isotherms {
        /// Real part of kappa
        #[arg(long, default_value_t = 1.0)]
        kappa_re: f64,
        /// Imaginary part of kappa
        #[arg(long, default_value_t = 0.0)]
        kappa_im: f64,
        /// Number of alpha grid points on [0, pi], inclusive (>= 2)
        #[arg(long, default_value_t = 19)]
        alpha_steps: usize,
        /// Output CSV path; stdout when omitted
        #[arg(long)]
        out: Option<String>,
    },
    /// Run the acceptance checks; exit 0 iff all pass
    Verify {
        #[command(flatten)]
        config: ConfigArgs,
    },
}

fn writer_for(path: Option<&str>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) if p != "-" => {
            let file = File::create(p).with_context(|| format!("creating {p}"))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        _ => Ok(Box::new(std::io::stdout().lock())),
    }
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Simulate { config, gamma, phi } => {
            let cfg = config.resolve()?;
            let theta = cfg.theta_list[0];
            let coin = CoinSpec::new(theta)?;
            let kind = match cfg.init_kind {
                InitKind::Localized => InitialKind::Localized,
                InitKind::Gaussian => InitialKind::Gaussian { xi: cfg.xi },
            };
            let spec = InitialSpec::new(kind, gamma, phi)?;
            let rows = trajectory(&spec, &coin, cfg.t_max)?;
            let out = config.out.as_deref();
            write_trajectory(&rows, writer_for(out)?)?;
        }
        Command::Sweep { config } => {
            let cfg = config.resolve()?;
            let output = run_sweep(&cfg)?;
            let csv_path = Path::new(&cfg.output_path);
            write_csv(
                &output.records,
                BufWriter::new(
                    File::create(csv_path)
                        .with_context(|| format!("creating {}", csv_path.display()))?,
                ),
            )?;
            let json_path = csv_path.with_extension("json");
            write_summary_json(
                &output.summaries,
                BufWriter::new(
                    File::create(&json_path)
                        .with_context(|| format!("creating {}", json_path.display()))?,
                ),
            )?;
            println!(
                "wrote {} records to {} and summaries to {}",
                output.records.len(),
                csv_path.display(),
                json_path.display()
            );
            for (theta, summary) in &output.summaries {
                println!(
                    "theta = {theta}: kappa_hat = {:+.4}{:+.4}i, residual = {:.4}, thermal = {}",
                    summary.kappa_hat[0],
                    summary.kappa_hat[1],
                    summary.residual,
                    summary.is_thermal
                );
            }
        }
        Command::Isotherms { kappa_re, kappa_im, alpha_steps, out } => {
            let rows = isotherm_table(Complex64::new(kappa_re, kappa_im), alpha_steps)?;
            write_isotherms(&rows, writer_for(out.as_deref())?)?;
        }
        Command::Verify { config } => {
            let cfg = config.resolve()?;
            let data = compute_verify_data(&cfg)?;
            let results = run_checks(&data, &cfg);
            let mut failures = 0;
            for result in &results {
                println!("{}", result.line());
                if !result.passed {
                    failures += 1;
                }
            }
            if failures > 0 {
                bail!("{failures} of {} acceptance checks failed", results.len());
            }
            println!("all {} acceptance checks passed", results.len());
        }
    }
    Ok(())
}
