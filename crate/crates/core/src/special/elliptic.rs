//! Complete elliptic integral of the first kind via the
//! arithmetic–geometric mean, in the modulus convention
//!
//! `K(k) = ∫₀^{π/2} dφ / √(1 - k² sin²φ) = π / (2·AGM(1, √(1-k²)))`.
//!
//! The complex version uses the AGM with the standard square-root branch
//! choice `|a₁ - b₁| ≤ |a₁ + b₁|`, which tracks the principal branch of `K`
//! off the real cut `k ∈ [1, ∞)`; every complex call site here carries a
//! strictly nonzero imaginary part, so the cut is never touched.

use crate::complex::{c64, C64};
use std::f64::consts::PI;

/// Arithmetic–geometric mean of two nonnegative reals.
pub fn agm(a: f64, b: f64) -> f64 {
    debug_assert!(a >= 0.0 && b >= 0.0);
    let (mut a, mut b) = (a.max(b), a.min(b));
    if b == 0.0 {
        return 0.0;
    }
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
    }
    0.5 * (a + b)
}

/// Complete elliptic integral `K(k)` for modulus `0 ≤ k ≤ 1`; `K(1) = ∞`.
pub fn ellip_k(k: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&k), "modulus out of range: {k}");
    let kp = ((1.0 - k) * (1.0 + k)).sqrt();
    let m = agm(1.0, kp);
    if m == 0.0 {
        f64::INFINITY
    } else {
        0.5 * PI / m
    }
}

/// Complex AGM with the branch choice that keeps iterates in the right
/// half-plane sector of quadratic convergence.
pub fn agm_complex(a0: C64, b0: C64) -> C64 {
    let (mut a, mut b) = (a0, b0);
    for _ in 0..64 {
        let an = (a + b).scale(0.5);
        let mut bn = (a * b).sqrt();
        if (an - bn).abs() > (an + bn).abs() {
            bn = -bn;
        }
        a = an;
        b = bn;
        if (a - b).abs() <= 4.0 * f64::EPSILON * a.abs() {
            break;
        }
    }
    (a + b).scale(0.5)
}

/// Principal-branch complete elliptic integral for a complex modulus off the
/// real cut.
pub fn ellip_k_complex(k: C64) -> C64 {
    let one = c64(1.0, 0.0);
    let kp = (one - k * k).sqrt();
    let m = agm_complex(one, kp);
    m.recip().scale(0.5 * PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values computed with 40-digit arithmetic.
    const K_REF: [(f64, f64); 7] = [
        (0.0, 1.5707963267948966),
        (0.1, 1.574745561517356),
        (0.5, 1.685750354812596),
        (std::f64::consts::FRAC_1_SQRT_2, 1.8540746773013719),
        (0.9, 2.2805491384227702),
        (0.99, 3.3566005233611924),
        // Reference evaluated at the binary double nearest 0.999999: the
        // map k ↦ K amplifies modulus rounding by 1/(1-k²) ≈ 5·10⁵ here.
        (0.999999, 7.947479773547967),
    ];

    const K_COMPLEX_REF: [(f64, f64, f64, f64); 5] = [
        (0.3, -0.4, 1.5335767112151651, -0.085659241296394521),
        (0.8, -0.1, 1.9431434586617694, -0.17642976375344183),
        (1.5, -0.2, 1.2537148087655711, -1.052212033529026),
        (2.0, -1.0, 0.91119556380496501, -0.63133428324134524),
        (0.2, -2.0, 1.0072178918781681, -0.048169566390870631),
    ];

    #[test]
    fn agm_of_equal_arguments_is_identity() {
        assert_eq!(agm(3.5, 3.5), 3.5);
    }

    #[test]
    fn agm_is_symmetric() {
        assert_eq!(agm(1.0, 0.2), agm(0.2, 1.0));
    }

    #[test]
    fn real_k_matches_reference() {
        for &(k, want) in &K_REF {
            let got = ellip_k(k);
            assert!(
                (got - want).abs() < 1e-14 * want,
                "K({k}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn k_diverges_at_unit_modulus() {
        assert!(ellip_k(1.0).is_infinite());
    }

    #[test]
    fn complex_k_matches_reference() {
        for &(re, im, wre, wim) in &K_COMPLEX_REF {
            let got = ellip_k_complex(c64(re, im));
            assert!(
                (got.re - wre).abs() < 1e-13 && (got.im - wim).abs() < 1e-13,
                "K({re}+{im}i) = {got:?}, want ({wre}, {wim})"
            );
        }
    }

    #[test]
    fn complex_k_reduces_to_real_k_near_the_axis() {
        let k = 0.6;
        let real = ellip_k(k);
        let cplx = ellip_k_complex(c64(k, -1e-14));
        assert!((cplx.re - real).abs() < 1e-12);
        assert!(cplx.im.abs() < 1e-12);
    }
}
