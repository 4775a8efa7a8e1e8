//! Deterministic tensor-product quadrature on the d-dimensional torus.
//!
//! Integrands of interest depend on the angles only through the sum of
//! cosines `Σ_j cos θ_j` (the dispersion) and, for windowed variants, the
//! squared Euclidean norm `Σ_j θ_j²`.  A uniform midpoint grid per axis is
//! spectrally accurate for smooth periodic integrands, and the midpoint
//! placement keeps the lattice off the corner `θ = 0` where several
//! integrands lose smoothness at band edges.
//!
//! Reduction order is fixed: the innermost axis is summed sequentially in
//! blocks, middle axes combine per-index subtotals pairwise, and the
//! outermost axis is distributed over threads with an order-preserving
//! collect followed by the same pairwise combine.  The floating-point result
//! is therefore bitwise independent of the thread count.

use rayon::prelude::*;

use super::sum::{pairwise_sum, pairwise_sum_by, Accum};

/// Fixed-size accumulator for reductions that carry several totals at once
/// (e.g. one per exclusion radius in a divergence scan).
#[derive(Debug, Clone, Copy)]
pub struct Bins<const K: usize>(pub [f64; K]);

impl<const K: usize> std::ops::Add for Bins<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0.iter()) {
            *o += *r;
        }
        Bins(out)
    }
}

impl<const K: usize> Accum for Bins<K> {
    fn zero() -> Self {
        Bins([0.0; K])
    }
}

/// Per-axis lookup tables for the midpoint grid `θ_k = -π + (k+½)·2π/n`.
pub struct TorusGrid {
    n: usize,
    theta: Vec<f64>,
    cos: Vec<f64>,
    sq: Vec<f64>,
}

impl TorusGrid {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "torus grid needs at least two points per axis");
        let h = 2.0 * std::f64::consts::PI / n as f64;
        let mut theta = Vec::with_capacity(n);
        let mut cos = Vec::with_capacity(n);
        let mut sq = Vec::with_capacity(n);
        for k in 0..n {
            let t = -std::f64::consts::PI + (k as f64 + 0.5) * h;
            theta.push(t);
            cos.push(t.cos());
            sq.push(t * t);
        }
        TorusGrid { n, theta, cos, sq }
    }

    pub fn points_per_axis(&self) -> usize {
        self.n
    }
}

fn inner_reduce<T: Accum>(
    grid: &TorusGrid,
    axes_left: usize,
    sc: f64,
    ss: f64,
    f: &(impl Fn(f64, f64) -> T + Sync),
) -> T {
    if axes_left == 1 {
        pairwise_sum_by(grid.n, |i| f(sc + grid.cos[i], ss + grid.sq[i]))
    } else {
        let partials: Vec<T> = (0..grid.n)
            .map(|i| inner_reduce(grid, axes_left - 1, sc + grid.cos[i], ss + grid.sq[i], f))
            .collect();
        pairwise_sum(&partials)
    }
}

/// Sum of `f(Σ cos θ_j, Σ θ_j²)` over every point of the d-dimensional grid.
pub fn tensor_reduce<T>(grid: &TorusGrid, dim: usize, f: &(impl Fn(f64, f64) -> T + Sync)) -> T
where
    T: Accum + Send,
{
    assert!(dim >= 1);
    if dim == 1 {
        return inner_reduce(grid, 1, 0.0, 0.0, f);
    }
    let partials: Vec<T> = (0..grid.n)
        .into_par_iter()
        .map(|i| inner_reduce(grid, dim - 1, grid.cos[i], grid.sq[i], f))
        .collect();
    pairwise_sum(&partials)
}

/// Mean of `f(Σ cos θ_j, Σ θ_j²)` over the torus at a fixed grid resolution.
pub fn tensor_mean(grid: &TorusGrid, dim: usize, f: &(impl Fn(f64, f64) -> f64 + Sync)) -> f64 {
    tensor_reduce(grid, dim, f) / (grid.n as f64).powi(dim as i32)
}

/// Outcome of a grid-doubling pass.
#[derive(Debug, Clone, Copy)]
pub struct TensorResult {
    pub value: f64,
    pub err_estimate: f64,
    pub points_per_axis: usize,
}

/// Double the per-axis resolution until two successive means agree to
/// `rel_tol`, starting from `start_n` points per axis and capping at `max_n`.
pub fn tensor_mean_adaptive(
    dim: usize,
    start_n: usize,
    max_n: usize,
    rel_tol: f64,
    f: &(impl Fn(f64, f64) -> f64 + Sync),
) -> TensorResult {
    let mut n = start_n.max(2);
    let mut prev = tensor_mean(&TorusGrid::new(n), dim, f);
    loop {
        n *= 2;
        let next = tensor_mean(&TorusGrid::new(n), dim, f);
        let diff = (next - prev).abs();
        if diff <= rel_tol * next.abs().max(1e-300) || n >= max_n {
            return TensorResult {
                value: next,
                err_estimate: diff,
                points_per_axis: n,
            };
        }
        prev = next;
    }
}

/// Fourier coefficient of `f(Σ cos θ_j)` at the lattice site `freqs`: the
/// torus mean of `Π_j cos(m_j θ_j) · f(Σ cos θ_j)`.
///
/// Because `f` depends on the angles only through cosines, every term of
/// `Π_j e^{i m_j θ_j}` containing a sine integrates to zero, so this equals
/// the mean of `e^{i m·θ} f` — the position-space kernel of `f` applied to
/// the dispersion.
pub fn tensor_mean_phased(
    grid: &TorusGrid,
    freqs: &[i64],
    f: &(impl Fn(f64) -> f64 + Sync),
) -> f64 {
    let dim = freqs.len();
    assert!(dim >= 1);
    let luts: Vec<Vec<f64>> = freqs
        .iter()
        .map(|&m| {
            grid.theta
                .iter()
                .map(|&t| (m as f64 * t).cos())
                .collect()
        })
        .collect();

    fn rec(
        grid: &TorusGrid,
        luts: &[Vec<f64>],
        axis: usize,
        sc: f64,
        wprod: f64,
        f: &(impl Fn(f64) -> f64 + Sync),
    ) -> f64 {
        if axis == luts.len() - 1 {
            pairwise_sum_by(grid.n, |i| {
                wprod * luts[axis][i] * f(sc + grid.cos[i])
            })
        } else {
            let partials: Vec<f64> = (0..grid.n)
                .map(|i| rec(grid, luts, axis + 1, sc + grid.cos[i], wprod * luts[axis][i], f))
                .collect();
            pairwise_sum(&partials)
        }
    }

    let total = if dim == 1 {
        rec(grid, &luts, 0, 0.0, 1.0, f)
    } else {
        let partials: Vec<f64> = (0..grid.n)
            .into_par_iter()
            .map(|i| rec(grid, &luts, 1, grid.cos[i], luts[0][i], f))
            .collect();
        pairwise_sum(&partials)
    };
    total / (grid.n as f64).powi(dim as i32)
}

/// Lattice profile along the first coordinate axis: returns, for
/// `m = 0..=max_m`, the torus mean of `cos(m θ_0) · f(Σ cos θ_j)`.
///
/// The inner `(d-1)`-dimensional sums are computed once per `θ_0` node and
/// then combined with each cosine weight, so the cost is independent of the
/// number of profile sites requested.
pub fn tensor_axis0_profile(
    grid: &TorusGrid,
    dim: usize,
    max_m: usize,
    f: &(impl Fn(f64) -> f64 + Sync),
) -> Vec<f64> {
    assert!(dim >= 1);
    let inner: Vec<f64> = if dim == 1 {
        grid.cos.iter().map(|&c| f(c)).collect()
    } else {
        (0..grid.n)
            .into_par_iter()
            .map(|i| inner_reduce(grid, dim - 1, grid.cos[i], 0.0, &|sc, _| f(sc)))
            .collect()
    };
    let norm = (grid.n as f64).powi(dim as i32);
    (0..=max_m)
        .map(|m| {
            pairwise_sum_by(grid.n, |i| ((m as f64) * grid.theta[i]).cos() * inner[i]) / norm
        })
        .collect()
}
