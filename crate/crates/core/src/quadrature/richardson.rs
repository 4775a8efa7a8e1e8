//! Richardson extrapolation of a quantity measured along a ladder of
//! regularization parameters ε₀ > ε₁ > … > 0.
//!
//! Each rung stores the measured value together with the numerical error of
//! that measurement.  Extrapolation to ε = 0 runs a Neville tableau through
//! the rungs; the reported uncertainty combines the tableau's own
//! convergence (difference of the last corrections) with the measurement
//! errors propagated through the equivalent Lagrange weights, so a ladder
//! built from sloppy rungs cannot claim a sharp limit.

use super::sum::pairwise_sum;

/// One measurement on the ladder.
#[derive(Debug, Clone, Copy)]
pub struct LadderRung {
    pub eps: f64,
    pub value: f64,
    pub err: f64,
}

/// Extrapolated limit with an honest uncertainty.
#[derive(Debug, Clone, Copy)]
pub struct Extrapolated {
    pub value: f64,
    pub err_estimate: f64,
}

/// A ladder of measurements at decreasing ε.
#[derive(Debug, Clone, Default)]
pub struct EpsLadder {
    rungs: Vec<LadderRung>,
}

impl EpsLadder {
    pub fn new() -> Self {
        EpsLadder { rungs: Vec::new() }
    }

    pub fn push(&mut self, eps: f64, value: f64, err: f64) {
        debug_assert!(eps > 0.0, "ladder parameter must be positive");
        if let Some(last) = self.rungs.last() {
            debug_assert!(eps < last.eps, "ladder must descend");
        }
        self.rungs.push(LadderRung { eps, value, err });
    }

    pub fn rungs(&self) -> &[LadderRung] {
        &self.rungs
    }

    /// Neville extrapolation of the rung values to ε = 0.
    pub fn extrapolate(&self) -> Extrapolated {
        let n = self.rungs.len();
        assert!(n >= 2, "extrapolation needs at least two rungs");
        let eps: Vec<f64> = self.rungs.iter().map(|r| r.eps).collect();
        let mut col: Vec<f64> = self.rungs.iter().map(|r| r.value).collect();
        // diag[j] is the degree-j extrapolant through the last j+1 rungs.
        let mut diag = Vec::with_capacity(n);
        diag.push(col[n - 1]);
        for j in 1..n {
            for i in (j..n).rev() {
                col[i] = (eps[i] * col[i - 1] - eps[i - j] * col[i]) / (eps[i] - eps[i - j]);
            }
            diag.push(col[n - 1]);
        }
        // Each Neville column gains one order, so corrections shrink by at
        // least the ladder ratio squared; the previous correction scaled by
        // 1/4 guards against an accidentally vanishing last correction.
        let c1 = (diag[n - 1] - diag[n - 2]).abs();
        let c2 = if n >= 3 {
            (diag[n - 2] - diag[n - 3]).abs()
        } else {
            c1
        };
        let tableau_err = c1.max(0.25 * c2);
        let propagated = self.propagated_measurement_error();
        Extrapolated {
            value: diag[n - 1],
            err_estimate: tableau_err + propagated,
        }
    }

    /// Measurement errors pushed through the Lagrange weights of the
    /// full-degree extrapolant at 0: Σ_i |L_i(0)| · err_i.
    fn propagated_measurement_error(&self) -> f64 {
        let n = self.rungs.len();
        let terms: Vec<f64> = (0..n)
            .map(|i| {
                let mut w = 1.0;
                for j in 0..n {
                    if j != i {
                        w *= self.rungs[j].eps / (self.rungs[j].eps - self.rungs[i].eps);
                    }
                }
                w.abs() * self.rungs[i].err
            })
            .collect();
        pairwise_sum(&terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_ladder_is_exact() {
        // f(ε) = 1 + 2ε + 3ε² is reproduced exactly by three or more rungs.
        let mut ladder = EpsLadder::new();
        for k in 0..4 {
            let e = 0.2 / f64::powi(2.0, k);
            ladder.push(e, 1.0 + 2.0 * e + 3.0 * e * e, 0.0);
        }
        let ext = ladder.extrapolate();
        assert!((ext.value - 1.0).abs() < 1e-14, "got {}", ext.value);
    }

    #[test]
    fn beats_best_rung_on_smooth_limit() {
        // f(ε) = sin(ε)/ε → 1; the extrapolant must outperform the smallest ε.
        let mut ladder = EpsLadder::new();
        for k in 0..4 {
            let e = 0.1 / f64::powi(2.0, k);
            ladder.push(e, e.sin() / e, 0.0);
        }
        let ext = ladder.extrapolate();
        let best_rung_err = (ladder.rungs()[3].value - 1.0).abs();
        let ext_err = (ext.value - 1.0).abs();
        assert!(ext_err < 1e-2 * best_rung_err, "ext {ext_err}, rung {best_rung_err}");
        assert!(ext.err_estimate >= ext_err, "estimate must cover the true error");
    }

    #[test]
    fn measurement_noise_inflates_the_estimate() {
        let mut clean = EpsLadder::new();
        let mut noisy = EpsLadder::new();
        for k in 0..4 {
            let e = 0.1 / f64::powi(2.0, k);
            clean.push(e, 1.0 + e, 0.0);
            noisy.push(e, 1.0 + e, 1e-6);
        }
        let a = clean.extrapolate();
        let b = noisy.extrapolate();
        assert!(b.err_estimate > a.err_estimate + 1e-6);
    }

    #[test]
    fn linear_decay_extrapolates_to_zero() {
        // Outside-spectrum behaviour: f(ε) = c·ε + d·ε³ has limit 0.
        let mut ladder = EpsLadder::new();
        for k in 0..4 {
            let e = 0.04 / f64::powi(2.0, k);
            ladder.push(e, 0.7 * e + 2.0 * e * e * e, 0.0);
        }
        let ext = ladder.extrapolate();
        assert!(ext.value.abs() < 1e-15, "got {}", ext.value);
    }
}
