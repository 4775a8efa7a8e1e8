//! Quadrature configuration shared by every integral in the library.

use crate::error::SpectralError;

/// Which representation of the Green integrals to evaluate.
///
/// `Auto` follows the accuracy/cost tradeoff of the two routes: the tensor
/// trapezoidal rule is spectrally accurate for smooth periodic integrands but
/// needs its grid to resolve the resolvent peak of width `sqrt(E-1)`, so it is
/// used for `E ≥ 1.1` in dimensions where the full grid is affordable, while
/// the Laplace–Bessel representation handles the near-edge region and high
/// dimensions at one-dimensional cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Auto,
    Direct,
    Laplace,
}

/// Tolerances and budgets for the quadrature engines.
///
/// `grid_points_per_axis` is the starting grid of the direct tensor rule in
/// low dimension; the engine doubles it until two successive grids agree to
/// `rel_tol`, within per-dimension caps that keep the total point count
/// affordable.  `laplace_truncation` overrides the adaptive split point of the
/// Laplace integral (numeric panel region vs. certified asymptotic tail).
/// `epsilon_floor` is the smallest admissible resolvent smoothing parameter.
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub grid_points_per_axis: usize,
    pub laplace_truncation: Option<f64>,
    pub epsilon_floor: f64,
    pub backend: Backend,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            grid_points_per_axis: 256,
            laplace_truncation: None,
            epsilon_floor: 1e-6,
            backend: Backend::Auto,
        }
    }
}

impl QuadratureConfig {
    /// Validate the invariants: `rel_tol > 0`, the starting grid is even and
    /// at least 8, and any truncation override is positive.
    pub fn validate(&self) -> Result<(), SpectralError> {
        if !(self.rel_tol > 0.0) {
            return Err(SpectralError::domain("rel_tol must be positive"));
        }
        if self.grid_points_per_axis < 8 || self.grid_points_per_axis % 2 != 0 {
            return Err(SpectralError::domain(
                "grid_points_per_axis must be even and at least 8",
            ));
        }
        if let Some(t) = self.laplace_truncation {
            if !(t > 0.0) {
                return Err(SpectralError::domain("laplace_truncation must be positive"));
            }
        }
        if !(self.epsilon_floor > 0.0) {
            return Err(SpectralError::domain("epsilon_floor must be positive"));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_backend(mut self, backend: Backend) -> Self {
        self.backend = backend;
        self
    }
}

/// Starting grid for the adaptive tensor rule in dimension `d`, derived from
/// the configured per-axis grid but capped so the initial full grid stays
/// cheap in high dimension.
pub(crate) fn tensor_start_grid(d: usize, cfg: &QuadratureConfig) -> usize {
    let cap = match d {
        1 | 2 | 3 => cfg.grid_points_per_axis.max(8),
        4 => 32,
        5 => 16,
        _ => 8,
    };
    cfg.grid_points_per_axis.min(cap).max(8)
}

/// Largest per-axis grid the adaptive tensor rule may reach in dimension `d`.
/// The caps bound the total evaluation count near 10^9 points.
pub(crate) fn tensor_max_grid(d: usize) -> usize {
    match d {
        1 => 1 << 21,
        2 => 1 << 13,
        3 => 1 << 10,
        4 => 128,
        5 => 48,
        _ => 24,
    }
}
