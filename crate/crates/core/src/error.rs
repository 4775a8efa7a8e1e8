//! Error type shared by all numerical operations.

/// Failure modes of the quadrature engines, the root solvers and the lattice
/// iteration.  Domain violations are reported eagerly, before any numerical
/// work starts; convergence failures carry enough context to describe what was
/// attempted.
#[derive(Debug, Clone, thiserror::Error)]
pub enum SpectralError {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature or extrapolation did not reach the requested tolerance
    /// within its evaluation budget.
    #[error("did not converge to the requested tolerance: {0}")]
    NonConvergence(String),

    /// A root bracket could not be established (no sign change).
    #[error("no sign change on bracket [{lo}, {hi}]")]
    BracketFailure { lo: f64, hi: f64 },

    /// The lattice eigeniteration hit its iteration cap; the best residual
    /// reached is reported so partial results can still be inspected.
    #[error("iteration limit after {iterations} steps, residual {residual:.3e}")]
    IterationLimit { iterations: usize, residual: f64 },

    /// The decay-rate fit has too few usable sites.
    #[error("insufficient decay window: {sites} usable sites")]
    InsufficientDecay { sites: usize },

    /// A vector length does not match the lattice it is applied to.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

impl SpectralError {
    pub fn domain(msg: impl Into<String>) -> Self {
        SpectralError::Domain(msg.into())
    }

    pub fn non_convergence(msg: impl Into<String>) -> Self {
        SpectralError::NonConvergence(msg.into())
    }
}
