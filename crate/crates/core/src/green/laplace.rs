//! Laplace–Bessel representation of the Green integrals.
//!
//! Writing `1/(E-g) = ∫_0^∞ e^{-t(E-g)} dt` and using
//! `(2π)^{-1} ∫ e^{t cos θ / d} dθ = I₀(t/d)` per axis gives
//!
//! ```text
//! I_d(E) = ∫_0^∞ e^{-tE} I₀(t/d)^d dt,      J_d(E) = ∫_0^∞ t e^{-tE} I₀(t/d)^d dt,
//! ```
//!
//! valid whenever the integral converges — exactly the finiteness classes of
//! the torus integrals.  The integrand is evaluated as
//! `exp(d·ln I₀(t/d) - tE)` so large `t` never overflows.
//!
//! The evaluation splits at `t = T` (default `50·d`, so the panel region ends
//! where the `I₀` power series hands over to its large-argument expansion):
//!
//! * `[0, T]`: adaptive Gauss–Legendre panels on the exact integrand.
//! * `[T, ∞)`: with `a = E - 1` and `z = t/d`, the integrand equals
//!   `t^{w} (2πt/d)^{-d/2} e^{-at} S(z)^d` where `S(z) = Σ_k a_k z^{-k}` is
//!   the `I₀` correction series and `w = 0, 1` for `I, J`.  `S^d` is expanded
//!   once as a polynomial in `1/z` truncated at degree 8.  At the band edge
//!   (`a = 0`) the tail reduces to explicit power integrals
//!   `∫_T^∞ t^{-s} dt = T^{1-s}/(s-1)`; off the edge it is integrated on
//!   geometrically growing panels until `e^{-at}` has certifiably killed the
//!   remainder.  The magnitude of the last retained series term enters the
//!   error estimate, so the asymptotic truncation is accounted for honestly.

use crate::config::QuadratureConfig;
use crate::error::SpectralError;
use crate::quadrature::panels::{integrate_adaptive, integrate_panels};
use crate::special::bessel::{i0_asym_coeffs, ln_i0};

const TAIL_DEGREE: usize = 9;

/// Coefficients of `S(z)^d mod z^{-9}` in the variable `x = 1/z`.
fn s_power_coeffs(dim: usize) -> [f64; TAIL_DEGREE] {
    let a = i0_asym_coeffs();
    let mut c = [0.0; TAIL_DEGREE];
    c[0] = 1.0;
    for _ in 0..dim {
        let mut next = [0.0; TAIL_DEGREE];
        for i in 0..TAIL_DEGREE {
            if c[i] == 0.0 {
                continue;
            }
            for j in 0..TAIL_DEGREE - i {
                next[i + j] += c[i] * a[j];
            }
        }
        c = next;
    }
    c
}

fn poly_eval(c: &[f64; TAIL_DEGREE], x: f64) -> f64 {
    let mut s = c[TAIL_DEGREE - 1];
    for k in (0..TAIL_DEGREE - 1).rev() {
        s = c[k] + x * s;
    }
    s
}

/// Green integral of the given order (1 for `I`, 2 for `J`) at `E ≥ 1`;
/// returns `(value, error estimate)`.  The caller has already excluded
/// divergent classes.
pub(crate) fn integral(
    dim: usize,
    energy: f64,
    order: u32,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64), SpectralError> {
    debug_assert!(order == 1 || order == 2);
    debug_assert!(energy >= 1.0);
    let d = dim as f64;
    let t_split = cfg.laplace_truncation.unwrap_or(50.0 * d);
    let weight = move |t: f64| if order == 2 { t } else { 1.0 };

    let f = |t: f64| weight(t) * (d * ln_i0(t / d) - t * energy).exp();
    let numeric = integrate_adaptive(f, 0.0, t_split, 16, 8192, 0.25 * cfg.rel_tol);

    let (tail, tail_err) = tail_integral(dim, energy, order, t_split);
    Ok((numeric.value + tail, numeric.err_estimate + tail_err))
}

fn tail_integral(dim: usize, energy: f64, order: u32, t_split: f64) -> (f64, f64) {
    let d = dim as f64;
    let a = energy - 1.0;
    let coeffs = s_power_coeffs(dim);
    let half_d = 0.5 * d;
    let w = (order - 1) as f64;

    if a == 0.0 {
        // Exact power integrals; convergence (s > 1 for every k) is the
        // finiteness class the caller enforced.
        let mut tail = 0.0;
        let mut last_term = 0.0;
        for (k, &ck) in coeffs.iter().enumerate() {
            let s = half_d + k as f64 - w;
            last_term = ck * d.powi(k as i32) * t_split.powf(1.0 - s) / (s - 1.0);
            tail += last_term;
        }
        let prefactor = (d / (2.0 * std::f64::consts::PI)).powf(half_d);
        return (prefactor * tail, prefactor * last_term.abs());
    }

    // Off the edge: integrate the asymptotic form on geometric panels.
    let prefactor = (d / (2.0 * std::f64::consts::PI)).powf(half_d);
    let cheap = |t: f64| {
        prefactor * t.powf(w - half_d) * (-a * t).exp() * poly_eval(&coeffs, d / t)
    };
    let ratio = 1.6;
    let mut cheap_mut = cheap;
    let mut lo = t_split;
    let mut total = 0.0;
    let mut prev_seg = f64::INFINITY;
    let mut remainder_bound = 0.0;
    for _ in 0..400 {
        let hi = lo * ratio;
        let seg = integrate_panels(&mut cheap_mut, lo, hi, 4);
        total += seg;
        if a * hi >= 45.0 {
            // ∫_hi^∞ ≤ cheap(hi)/a since the power factor only decays.
            remainder_bound = cheap(hi).abs() / a;
            break;
        }
        if seg.abs() <= 1e-16 * total.abs().max(1e-300) {
            let r = (seg / prev_seg).abs().clamp(0.0, 0.9);
            remainder_bound = seg.abs() * r / (1.0 - r);
            break;
        }
        prev_seg = seg;
        lo = hi;
    }
    // Truncating S^d at degree 8 leaves a relative error of roughly the last
    // retained term.
    let x = d / t_split;
    let trunc_rel = (coeffs[TAIL_DEGREE - 1] * x.powi((TAIL_DEGREE - 1) as i32)).abs();
    (total, remainder_bound + trunc_rel * total.abs())
}
