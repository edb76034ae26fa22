use num_complex::Complex64;
use thiserror::Error;

/// One equilibrium of the family: the initial Bloch angles and the
/// time-averaged reduced-state parameters they produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsemblePoint {
    pub gamma: f64,
    pub phi: f64,
    pub a: f64,
    pub b: Complex64,
}

/// Knobs of the thermality decision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaFitOptions {
    /// Points with `|a|` at or below this are excluded from the fit; near the
    /// equatorial plane `b/a` is a 0/0 ratio dominated by simulation noise.
    pub a_floor: f64,
    /// Relative residual below which the family is declared thermal. The
    /// exact criterion is `b = κa`; the default absorbs finite-time noise.
    pub threshold: f64,
}

impl Default for KappaFitOptions {
    fn default() -> Self {
        Self { a_floor: 1e-3, threshold: 0.02 }
    }
}

/// Outcome of fitting `b = κa` over an ensemble.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalVerdict {
    pub kappa_hat: Complex64,
    /// `max_i |b_i − κ̂ a_i|` over the ensemble, normalized by the largest
    /// `|a_i|` (floored), so it is invariant under a common rescaling.
    pub residual: f64,
    /// Number of points retained for the fit.
    pub n_used: usize,
    pub is_thermal: bool,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThermoError {
    /// Fewer than 3 points above the floor, or fewer than 2 distinct initial
    /// conditions among them.
    #[error("insufficient ensemble for a kappa fit: {reason}")]
    InsufficientEnsemble { reason: String },
}

/// Least-squares estimate of `κ` in `b = κa` (real regressor `a`), with a
/// thermality verdict.
pub fn estimate_kappa(
    ensemble: &[EnsemblePoint],
    opts: &KappaFitOptions,
) -> Result<ThermalVerdict, ThermoError> {
    let retained: Vec<&EnsemblePoint> = ensemble
        .iter()
        .filter(|p| p.a.abs() > opts.a_floor)
        .collect();
    if retained.len() < 3 {
        return Err(ThermoError::InsufficientEnsemble {
            reason: format!(
                "{} points with |a| > {}, need at least 3",
                retained.len(),
                opts.a_floor
            ),
        });
    }
    let mut distinct: Vec<(f64, f64)> = Vec::new();
    for p in &retained {
        if !distinct.contains(&(p.gamma, p.phi)) {
            distinct.push((p.gamma, p.phi));
        }
    }
    if distinct.len() < 2 {
        return Err(ThermoError::InsufficientEnsemble {
            reason: "retained points do not span 2 distinct initial conditions".into(),
        });
    }

    let mut num = Complex64::ZERO;
    let mut den = 0.0;
    for p in &retained {
        num += p.b * p.a;
        den += p.a * p.a;
    }
    let kappa_hat = num / den;

    let scale = ensemble
        .iter()
        .map(|p| p.a.abs())
        .fold(opts.a_floor, f64::max);
    let residual = ensemble
        .iter()
        .map(|p| (p.b - kappa_hat * p.a).norm())
        .fold(0.0, f64::max)
        / scale;

    let n_used = retained.len();
    Ok(ThermalVerdict {
        kappa_hat,
        residual,
        n_used,
        is_thermal: residual < opts.threshold && n_used >= 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(gamma: f64, phi: f64, a: f64, b: Complex64) -> EnsemblePoint {
        EnsemblePoint { gamma, phi, a, b }
    }

    #[test]
    fn exact_linear_family() {
        let pts: Vec<_> = (0..5)
            .map(|i| {
                let a = 0.05 + 0.03 * i as f64;
                point(i as f64, 0.0, a, Complex64::new(2.0 * a, 0.0))
            })
            .collect();
        let v = estimate_kappa(&pts, &KappaFitOptions::default()).unwrap();
        assert!((v.kappa_hat - Complex64::new(2.0, 0.0)).norm() < 1e-14);
        assert!(v.residual < 1e-14);
        assert!(v.is_thermal);
        assert_eq!(v.n_used, 5);
    }

    #[test]
    fn complex_kappa_recovered() {
        let kappa = Complex64::new(0.4, -1.3);
        let pts: Vec<_> = (0..6)
            .map(|i| {
                let a = -0.2 + 0.07 * i as f64;
                point(0.3 * i as f64, 0.1, a, kappa * a)
            })
            .collect();
        let v = estimate_kappa(&pts, &KappaFitOptions::default()).unwrap();
        assert!((v.kappa_hat - kappa).norm() < 1e-13);
        assert!(v.is_thermal);
    }

    #[test]
    fn nonlinear_family_rejected() {
        // b depends on the angles beyond a common factor: not thermal
        let pts: Vec<_> = (0..8)
            .map(|i| {
                let gamma = 0.4 * i as f64;
                point(
                    gamma,
                    0.0,
                    0.15 * gamma.cos(),
                    Complex64::new(0.15 * gamma.cos(), 0.1 * gamma.sin()),
                )
            })
            .collect();
        let v = estimate_kappa(&pts, &KappaFitOptions::default()).unwrap();
        assert!(!v.is_thermal);
        assert!(v.residual > 0.1);
    }

    #[test]
    fn floor_excludes_equatorial_points() {
        let mut pts = vec![
            point(0.1, 0.0, 0.2, Complex64::new(0.2, 0.0)),
            point(0.5, 0.0, 0.15, Complex64::new(0.15, 0.0)),
            point(0.9, 0.0, 0.1, Complex64::new(0.1, 0.0)),
        ];
        // equatorial point with garbage ratio must not perturb the fit
        pts.push(point(1.5, 0.0, 1e-5, Complex64::new(0.0, 1e-4)));
        let v = estimate_kappa(&pts, &KappaFitOptions::default()).unwrap();
        assert_eq!(v.n_used, 3);
        assert!((v.kappa_hat - Complex64::ONE).norm() < 1e-12);
        assert!(v.is_thermal);
    }

    #[test]
    fn too_few_points() {
        let pts = vec![
            point(0.1, 0.0, 0.2, Complex64::new(0.2, 0.0)),
            point(0.5, 0.0, 0.15, Complex64::new(0.15, 0.0)),
        ];
        assert!(matches!(
            estimate_kappa(&pts, &KappaFitOptions::default()),
            Err(ThermoError::InsufficientEnsemble { .. })
        ));
    }

    #[test]
    fn degenerate_initial_conditions() {
        let pts = vec![
            point(0.1, 0.0, 0.2, Complex64::new(0.2, 0.0)),
            point(0.1, 0.0, 0.21, Complex64::new(0.21, 0.0)),
            point(0.1, 0.0, 0.19, Complex64::new(0.19, 0.0)),
        ];
        assert!(matches!(
            estimate_kappa(&pts, &KappaFitOptions::default()),
            Err(ThermoError::InsufficientEnsemble { .. })
        ));
    }
}
