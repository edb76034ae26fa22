use thiserror::Error;

/// Errors produced by walk construction and evolution.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum WalkError {
    /// The coin bias must lie strictly inside (0, π/2); the walk degenerates
    /// when sin θ or cos θ vanishes.
    #[error("coin bias {theta} outside the open interval (0, π/2)")]
    InvalidCoinBias { theta: f64 },

    /// Initial-state angles or width out of range.
    #[error("invalid initial state: {reason}")]
    InvalidInitial { reason: String },

    /// The requested window cannot hold the truncated Gaussian profile.
    #[error("window halfwidth {halfwidth} smaller than the Gaussian cutoff {cutoff}")]
    WindowTooSmall { halfwidth: usize, cutoff: usize },

    /// A step would move nonzero amplitude outside the window.
    #[error("nonzero amplitude would leave the lattice window")]
    WindowOverflow,

    /// Averaging requires 0 ≤ t_burn < t_max.
    #[error("bad averaging window: t_burn = {t_burn}, t_max = {t_max}")]
    BadTimeWindow { t_burn: u32, t_max: u32 },
}
