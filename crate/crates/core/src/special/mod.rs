//! Hand-rolled special functions needed by the integral transforms: the
//! modified Bessel function `I₀` (through its logarithm), the oscillatory
//! Bessel function `J₀`, and complete elliptic integrals via the
//! arithmetic–geometric mean, including the complex-modulus case.

pub mod bessel;
pub mod elliptic;

pub use bessel::{j0, ln_i0};
pub use elliptic::{agm, agm_complex, ellip_k, ellip_k_complex};
