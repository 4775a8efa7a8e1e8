//! Spectral data of the discrete Schrödinger operator `H = -Δ/(2d) + v·δ_0`
//! on the lattice `Z^d`, studied through its Fourier transform on the torus
//! `T^d = [-π, π)^d`.
//!
//! In momentum space the free part acts as multiplication by the band symbol
//! `g(θ) = (1/d) Σ_j cos θ_j` and the impurity becomes the rank-one term
//! `v (φ, ·) φ` with `φ = (2π)^{-d/2} 𝟙`.  Everything the library computes
//! reduces to the two normalized lattice Green integrals
//!
//! ```text
//! I_d(E) = (2π)^{-d} ∫_{T^d} dθ / (E - g(θ)),
//! J_d(E) = (2π)^{-d} ∫_{T^d} dθ / (E - g(θ))²  = -dI_d/dE,
//! ```
//!
//! and their boundary behaviour as `E` approaches the band edge `E = 1`:
//!
//! * [`green`] evaluates `I` and `J` by direct tensor-product quadrature and
//!   through the Laplace–Bessel representation `I_d(E) = ∫_0^∞ e^{-tE} I_0(t/d)^d dt`,
//!   and decides finiteness analytically before any quadrature runs.
//! * [`solver`] turns the eigenvalue condition `v · I_d(E) = 1` into the
//!   critical coupling `v_c = 1/I_d(1)`, the unique discrete eigenvalue above
//!   the band, the eigenvector in both representations, and the spectral
//!   weight of the bound state at the impurity site.
//! * [`simon_wolff`] computes the boundary data of the free resolvent (the
//!   smoothed imaginary part, the density of states) and sorts real energies
//!   into the Simon–Wolff sets X, Y and Z that govern spectral averaging.
//! * [`oracle`] diagonalizes the operator on a finite box with a matrix-free
//!   stencil, providing ground truth that is independent of all quadrature.
//!
//! All quadrature reductions follow a fixed pairwise summation order, so
//! results are bitwise reproducible regardless of the rayon thread count.

pub mod complex;
pub mod config;
pub mod error;
pub mod green;
// WIP pub mod oracle;
pub mod quadrature;
// WIP pub mod simon_wolff;
// WIP pub mod solver;
pub mod special;
pub mod torus;

pub use config::{Backend, QuadratureConfig};
pub use error::SpectralError;
pub use green::{
    closed_form_i, greens_i, greens_j, integrability_class, laplace_bessel_i, GreenValue,
    IntegrabilityClass,
};
/* WIP
pub use solver::{
    classify_spectrum, coupling_for_energy, critical_coupling, eigenvalue, eigenvector_momentum,
    eigenvector_position, point_mass_weight, position_profile, Coupling, CriticalCoupling,
    EigenKind, EigenSolution, Regime, SpectrumReport,
}; WIP */
pub use torus::{symbol, SymbolValue, TorusPoint};
