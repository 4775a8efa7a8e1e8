//! Lattice Green integrals of the band symbol `g(θ) = (1/d) Σ_j cos θ_j`:
//!
//! ```text
//! I_d(E) = (2π)^{-d} ∫_{T^d} dθ / (E - g(θ)),
//! J_d(E) = (2π)^{-d} ∫_{T^d} dθ / (E - g(θ))².
//! ```
//!
//! Finiteness is decided analytically before any quadrature runs.  Since `g`
//! ranges over `[-1, 1]` and behaves like `1 - |θ|²/(2d)` at its maximum, the
//! integrals are finite for `|E| > 1`; at the band edge `|E| = 1` the local
//! model `∫ r^{d-1-2s} dr` makes `I` finite exactly for `d ≥ 3` and `J` for
//! `d ≥ 5`; inside the band both diverge on the level set `g = E`.
//!
//! Two independent evaluation routes are kept deliberately separate so they
//! can cross-check each other: [`direct`] integrates on the torus itself
//! (tensor grids away from the edge, a smooth-window singularity split at the
//! edge), while [`laplace`] uses
//! `1/(E-g) = ∫_0^∞ e^{-t(E-g)} dt` and the product structure of the torus to
//! collapse everything to the one-dimensional integral
//! `I_d(E) = ∫_0^∞ e^{-tE} I₀(t/d)^d dt` (one more factor of `t` for `J`).
//!
//! Both parities of the energy are accepted: `θ ↦ θ + π` per axis flips the
//! sign of `g`, so `I_d(-E) = -I_d(E)` and `J_d(-E) = J_d(E)`.

pub mod direct;
pub mod laplace;

pub use direct::{divergence_scan_i, divergence_scan_j, DivergenceScan};

use crate::config::{Backend, QuadratureConfig};
use crate::error::SpectralError;
use crate::special::elliptic::ellip_k;

/// Joint finiteness of the two Green integrals at a real energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegrabilityClass {
    /// `I_d(E)` and `J_d(E)` both converge (`|E| > 1`, or `|E| = 1, d ≥ 5`).
    BothFinite,
    /// `I_d(E)` converges but `J_d(E)` diverges (`|E| = 1`, `3 ≤ d ≤ 4`).
    OnlyIFinite,
    /// Neither converges (`|E| < 1`, or `|E| = 1, d ≤ 2`).
    BothDivergent,
}

impl IntegrabilityClass {
    pub fn i_finite(self) -> bool {
        !matches!(self, IntegrabilityClass::BothDivergent)
    }

    pub fn j_finite(self) -> bool {
        matches!(self, IntegrabilityClass::BothFinite)
    }
}

/// Classify both Green integrals at energy `E` in dimension `d`.
///
/// Total in the energy: the band is `[-1, 1]` and the two edges are
/// equivalent under `g ↦ -g`.
pub fn integrability_class(dim: usize, energy: f64) -> IntegrabilityClass {
    assert!(dim >= 1, "dimension must be at least 1");
    assert!(energy.is_finite(), "energy must be finite");
    let a = energy.abs();
    if a > 1.0 {
        IntegrabilityClass::BothFinite
    } else if a == 1.0 {
        if dim >= 5 {
            IntegrabilityClass::BothFinite
        } else if dim >= 3 {
            IntegrabilityClass::OnlyIFinite
        } else {
            IntegrabilityClass::BothDivergent
        }
    } else {
        IntegrabilityClass::BothDivergent
    }
}

/// Outcome of a Green-integral evaluation.
///
/// For a divergent integral, `divergence_exponent` is the power `α` in the
/// growth law `P(δ) ≍ δ^{-α}` of the partial integrals over `|g - E| > δ`
/// (`α = 0` marks logarithmic growth); see [`DivergenceScan`] for the
/// numerical counterpart.
#[derive(Debug, Clone, Copy)]
pub enum GreenValue {
    Finite { value: f64, err_estimate: f64 },
    Divergent { divergence_exponent: f64 },
}

impl GreenValue {
    /// The finite value, if there is one.
    pub fn value(&self) -> Option<f64> {
        match self {
            GreenValue::Finite { value, .. } => Some(*value),
            GreenValue::Divergent { .. } => None,
        }
    }

    /// The finite value; panics on a divergent result.
    pub fn expect_finite(&self) -> f64 {
        match self {
            GreenValue::Finite { value, .. } => *value,
            GreenValue::Divergent {
                divergence_exponent,
            } => panic!("Green integral diverges (partial-integral exponent {divergence_exponent})"),
        }
    }

    pub fn err_estimate(&self) -> Option<f64> {
        match self {
            GreenValue::Finite { err_estimate, .. } => Some(*err_estimate),
            GreenValue::Divergent { .. } => None,
        }
    }
}

fn validate(dim: usize, energy: f64, cfg: &QuadratureConfig) -> Result<(), SpectralError> {
    cfg.validate()?;
    if dim == 0 {
        return Err(SpectralError::domain("dimension must be at least 1"));
    }
    if !energy.is_finite() {
        return Err(SpectralError::domain("energy must be finite"));
    }
    Ok(())
}

fn pick_backend(dim: usize, abs_energy: f64, cfg: &QuadratureConfig) -> Backend {
    match cfg.backend {
        Backend::Auto => {
            if abs_energy >= 1.1 && dim <= 4 {
                Backend::Direct
            } else {
                Backend::Laplace
            }
        }
        other => other,
    }
}

/// First Green integral `I_d(E)`.
///
/// Returns `Err` for `|E| < 1`, where the integrand changes sign on a set
/// where it is not absolutely integrable, so no value (finite or infinite)
/// exists; use [`divergence_scan_i`] to study that regime.
pub fn greens_i(dim: usize, energy: f64, cfg: &QuadratureConfig) -> Result<GreenValue, SpectralError> {
    validate(dim, energy, cfg)?;
    let e = energy.abs();
    let sign = if energy < 0.0 { -1.0 } else { 1.0 };
    if e < 1.0 {
        return Err(SpectralError::domain(
            "I_d(E) is undefined for |E| < 1: the integrand is sign-indefinite and not absolutely integrable",
        ));
    }
    if !integrability_class(dim, e).i_finite() {
        return Ok(GreenValue::Divergent {
            divergence_exponent: (2.0 - dim as f64) / 2.0,
        });
    }
    let (value, err_estimate) = match pick_backend(dim, e, cfg) {
        Backend::Direct => direct::integral(dim, e, 1, cfg)?,
        _ => laplace::integral(dim, e, 1, cfg)?,
    };
    Ok(GreenValue::Finite {
        value: sign * value,
        err_estimate,
    })
}

/// Second Green integral `J_d(E) = -dI_d/dE`.
pub fn greens_j(dim: usize, energy: f64, cfg: &QuadratureConfig) -> Result<GreenValue, SpectralError> {
    validate(dim, energy, cfg)?;
    let e = energy.abs();
    if !integrability_class(dim, e).j_finite() {
        // The integrand is nonnegative, so the integral is honestly +∞; the
        // exponent follows the local models (edge: ∫ r^{d-5} dr, interior:
        // a codimension-one level set of 1/(E-g)²).
        let exponent = if e < 1.0 { 1.0 } else { (4.0 - dim as f64) / 2.0 };
        return Ok(GreenValue::Divergent {
            divergence_exponent: exponent,
        });
    }
    let (value, err_estimate) = match pick_backend(dim, e, cfg) {
        Backend::Direct => direct::integral(dim, e, 2, cfg)?,
        _ => laplace::integral(dim, e, 2, cfg)?,
    };
    Ok(GreenValue::Finite {
        value,
        err_estimate,
    })
}

/// Evaluate `I_d(E)` through the Laplace–Bessel representation regardless of
/// the configured backend (the cross-check counterpart of the direct route).
pub fn laplace_bessel_i(
    dim: usize,
    energy: f64,
    cfg: &QuadratureConfig,
) -> Result<GreenValue, SpectralError> {
    greens_i(dim, energy, &cfg.clone().with_backend(Backend::Laplace))
}

/// Closed forms available in low dimension for `|E| > 1`:
/// `I_1(E) = 1/√(E²-1)` and `I_2(E) = (2/(πE)) K(1/E)` (modulus convention),
/// extended to negative energies by oddness.  `None` elsewhere.
pub fn closed_form_i(dim: usize, energy: f64) -> Option<f64> {
    if !energy.is_finite() || energy.abs() <= 1.0 {
        return None;
    }
    let e = energy.abs();
    let sign = if energy < 0.0 { -1.0 } else { 1.0 };
    match dim {
        1 => Some(sign / ((e - 1.0) * (e + 1.0)).sqrt()),
        2 => Some(sign * 2.0 / (std::f64::consts::PI * e) * ellip_k(1.0 / e)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn classification_table() {
        use IntegrabilityClass::*;
        for d in 1..=8 {
            assert_eq!(integrability_class(d, 1.7), BothFinite, "d={d} above band");
            assert_eq!(integrability_class(d, -3.0), BothFinite, "d={d} below band");
            assert_eq!(integrability_class(d, 0.4), BothDivergent, "d={d} interior");
            let edge = integrability_class(d, 1.0);
            let expected = if d >= 5 {
                BothFinite
            } else if d >= 3 {
                OnlyIFinite
            } else {
                BothDivergent
            };
            assert_eq!(edge, expected, "d={d} edge");
            assert_eq!(integrability_class(d, -1.0), expected, "d={d} lower edge");
        }
    }

    #[test]
    fn closed_form_d1_has_elementary_values() {
        // E = √2 gives E² - 1 = 1, so I_1 = 1 exactly.
        let v = closed_form_i(1, std::f64::consts::SQRT_2).unwrap();
        assert!((v - 1.0).abs() < 1e-15, "got {v}");
        assert!(closed_form_i(1, 1.0).is_none());
        assert!(closed_form_i(3, 2.0).is_none());
    }

    #[test]
    fn closed_form_d2_matches_reference() {
        // Reference values computed with 40-digit arithmetic.
        for (e, want) in [
            (1.25, 1.0161993600970582),
            (1.5, 0.76804673935845534),
            (2.0, 0.53659100357468219),
            (5.0, 0.20204628956474102),
        ] {
            let got = closed_form_i(2, e).unwrap();
            assert!(
                (got - want).abs() < 1e-14 * want,
                "I_2({e}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn greens_i_is_odd_in_energy() {
        let cfg = cfg();
        let p = greens_i(3, 2.5, &cfg).unwrap().expect_finite();
        let m = greens_i(3, -2.5, &cfg).unwrap().expect_finite();
        assert_eq!(p, -m);
        let jp = greens_j(3, 2.5, &cfg).unwrap().expect_finite();
        let jm = greens_j(3, -2.5, &cfg).unwrap().expect_finite();
        assert_eq!(jp, jm);
    }

    #[test]
    fn interior_energy_is_a_domain_error_for_i() {
        let err = greens_i(2, 0.3, &cfg()).unwrap_err();
        assert!(matches!(err, SpectralError::Domain(_)));
    }

    #[test]
    fn interior_energy_diverges_for_j() {
        match greens_j(3, 0.3, &cfg()).unwrap() {
            GreenValue::Divergent {
                divergence_exponent,
            } => assert_eq!(divergence_exponent, 1.0),
            other => panic!("expected divergence, got {other:?}"),
        }
    }

    #[test]
    fn edge_divergence_exponents_follow_the_local_model() {
        match greens_i(1, 1.0, &cfg()).unwrap() {
            GreenValue::Divergent {
                divergence_exponent,
            } => assert_eq!(divergence_exponent, 0.5),
            other => panic!("unexpected {other:?}"),
        }
        match greens_i(2, 1.0, &cfg()).unwrap() {
            GreenValue::Divergent {
                divergence_exponent,
            } => assert_eq!(divergence_exponent, 0.0),
            other => panic!("unexpected {other:?}"),
        }
        match greens_j(4, 1.0, &cfg()).unwrap() {
            GreenValue::Divergent {
                divergence_exponent,
            } => assert_eq!(divergence_exponent, 0.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn pointwise_bounds_sandwich_i() {
        // 1/(E+1) ≤ I_d(E) ≤ 1/(E-1) pointwise from g ∈ [-1, 1].
        let cfg = cfg();
        for d in 1..=5 {
            for e in [1.2, 2.0, 4.0] {
                let v = greens_i(d, e, &cfg).unwrap().expect_finite();
                assert!(
                    v > 1.0 / (e + 1.0) && v < 1.0 / (e - 1.0),
                    "d={d} E={e}: {v}"
                );
            }
        }
    }
}
