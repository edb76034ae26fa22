use thiserror::Error;

/// Errors produced by density-matrix construction and analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QubitError {
    /// `a² + |b|²` exceeds 1/4 beyond the accepted tolerance, so one
    /// eigenvalue of the would-be density operator is negative.
    #[error("positivity violation: a² + |b|² = {radius_sq} exceeds 1/4")]
    PositivityViolation { radius_sq: f64 },

    /// The state is maximally mixed, so the entanglement Hamiltonian has no
    /// defined field direction.
    #[error("degenerate state: entanglement Hamiltonian undefined for the maximally mixed state")]
    DegenerateState,

    /// The two projector directions passed to the Kraus map are not
    /// orthogonal within tolerance.
    #[error("projectors are not orthogonal: |⟨ψ⁺|ψ⁻⟩| = {overlap}")]
    NonOrthogonal { overlap: f64 },

    /// The energy scale of an entanglement Hamiltonian must be positive.
    #[error("energy scale must be positive, got {epsilon}")]
    NonpositiveEnergyScale { epsilon: f64 },
}
