use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::WalkError;

/// Coin unitary parameter. `theta` is restricted to the open interval
/// (0, π/2), which is sufficient to realize every distinct walk evolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinSpec {
    theta: f64,
}

impl CoinSpec {
    pub fn new(theta: f64) -> Result<Self, WalkError> {
        if !(theta > 0.0 && theta < FRAC_PI_2) {
            return Err(WalkError::InvalidCoinBias { theta });
        }
        Ok(Self { theta })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// Spatial profile of the initial walker.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialKind {
    /// All amplitude on the origin site.
    Localized,
    /// `d_n, e_n ∝ e^{−n²/4ξ²}`, truncated at `|n| ≤ ⌈6ξ⌉` and renormalized.
    Gaussian { xi: f64 },
}

/// Initial product state: a spatial profile times the chirality
/// `cos(γ/2)|+⟩ + e^{iφ} sin(γ/2)|−⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialSpec {
    kind: InitialKind,
    gamma: f64,
    phi: f64,
}

impl InitialSpec {
    pub fn new(kind: InitialKind, gamma: f64, phi: f64) -> Result<Self, WalkError> {
        if !(0.0..=PI).contains(&gamma) {
            return Err(WalkError::InvalidInitial {
                reason: format!("gamma = {gamma} outside [0, π]"),
            });
        }
        if !(0.0..TAU).contains(&phi) {
            return Err(WalkError::InvalidInitial {
                reason: format!("phi = {phi} outside [0, 2π)"),
            });
        }
        if let InitialKind::Gaussian { xi } = kind {
            if xi < 1.0 || xi.is_nan() {
                return Err(WalkError::InvalidInitial {
                    reason: format!("Gaussian width xi = {xi} must be ≥ 1"),
                });
            }
        }
        Ok(Self { kind, gamma, phi })
    }

    pub fn kind(&self) -> InitialKind {
        self.kind
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Halfwidth of the initial spatial support: 0 for a localized walker,
    /// the truncation cutoff `⌈6ξ⌉` for a Gaussian one. The truncated mass
    /// at that cutoff is below 1e−8.
    pub fn support_halfwidth(&self) -> usize {
        match self.kind {
            InitialKind::Localized => 0,
            InitialKind::Gaussian { xi } => (6.0 * xi).ceil() as usize,
        }
    }

    /// Chirality amplitudes `(cos(γ/2), e^{iφ} sin(γ/2))`.
    pub fn chirality(&self) -> (f64, Complex64) {
        (
            (self.gamma / 2.0).cos(),
            Complex64::from_polar((self.gamma / 2.0).sin(), self.phi),
        )
    }
}

/// Walker amplitudes over a finite lattice window.
///
/// Slot `i` holds the amplitudes of lattice site `offset + i`; `d` is the
/// `+` chirality component and `e` the `−` component. Scratch buffers are
/// preallocated so stepping never allocates.
#[derive(Debug, Clone)]
pub struct WalkState {
    offset: i64,
    d: Vec<Complex64>,
    e: Vec<Complex64>,
    t: u32,
    d_next: Vec<Complex64>,
    e_next: Vec<Complex64>,
}

impl WalkState {
    pub(crate) fn new(spec: &InitialSpec, window_halfwidth: usize) -> Result<Self, WalkError> {
        let len = 2 * window_halfwidth + 1;
        let mut d = vec![Complex64::ZERO; len];
        let mut e = vec![Complex64::ZERO; len];
        let (chi_d, chi_e) = spec.chirality();
        let center = window_halfwidth;

        match spec.kind() {
            InitialKind::Localized => {
                d[center] = Complex64::new(chi_d, 0.0);
                e[center] = chi_e;
            }
            InitialKind::Gaussian { xi } => {
                let cutoff = spec.support_halfwidth();
                if cutoff > window_halfwidth {
                    return Err(WalkError::WindowTooSmall {
                        halfwidth: window_halfwidth,
                        cutoff,
                    });
                }
                let mut weight_sq = 0.0;
                for n in -(cutoff as i64)..=cutoff as i64 {
                    let w = (-(n * n) as f64 / (4.0 * xi * xi)).exp();
                    weight_sq += w * w;
                }
                let scale = weight_sq.sqrt().recip();
                for n in -(cutoff as i64)..=cutoff as i64 {
                    let w = scale * (-(n * n) as f64 / (4.0 * xi * xi)).exp();
                    let i = (center as i64 + n) as usize;
                    d[i] = Complex64::new(w * chi_d, 0.0);
                    e[i] = chi_e * w;
                }
            }
        }

        Ok(Self {
            offset: -(window_halfwidth as i64),
            d,
            e,
            t: 0,
            d_next: vec![Complex64::ZERO; len],
            e_next: vec![Complex64::ZERO; len],
        })
    }

    /// Applies one walk step: coin `U_θ` on every site, then the conditional
    /// shift. Fails without modifying the state if nonzero amplitude would
    /// leave the window.
    pub fn step(&mut self, coin: &CoinSpec) -> Result<(), WalkError> {
        let c = coin.theta().cos();
        let s = coin.theta().sin();
        let len = self.d.len();

        let out_top = c * self.d[len - 1] + s * self.e[len - 1];
        let out_bottom = s * self.d[0] - c * self.e[0];
        if out_top != Complex64::ZERO || out_bottom != Complex64::ZERO {
            return Err(WalkError::WindowOverflow);
        }

        self.d_next[0] = Complex64::ZERO;
        self.e_next[len - 1] = Complex64::ZERO;
        for i in 0..len - 1 {
            self.d_next[i + 1] = c * self.d[i] + s * self.e[i];
        }
        for i in 1..len {
            self.e_next[i - 1] = s * self.d[i] - c * self.e[i];
        }
        std::mem::swap(&mut self.d, &mut self.d_next);
        std::mem::swap(&mut self.e, &mut self.e_next);
        self.t += 1;
        Ok(())
    }

    /// `+` chirality amplitudes by window slot.
    pub fn d(&self) -> &[Complex64] {
        &self.d
    }

    /// `−` chirality amplitudes by window slot.
    pub fn e(&self) -> &[Complex64] {
        &self.e
    }

    /// Lattice index of window slot 0.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Number of steps taken so far.
    pub fn time(&self) -> u32 {
        self.t
    }

    /// Total norm squared, 1 up to rounding at all times.
    pub fn norm_sqr(&self) -> f64 {
        self.d
            .iter()
            .zip(&self.e)
            .map(|(d, e)| d.norm_sqr() + e.norm_sqr())
            .sum()
    }

    /// Position probabilities by window slot.
    pub fn position_distribution(&self) -> Vec<f64> {
        self.d
            .iter()
            .zip(&self.e)
            .map(|(d, e)| d.norm_sqr() + e.norm_sqr())
            .collect()
    }
}
