//! Quadrature engines: deterministic summation, panel rules on intervals,
//! the tensor-product trapezoidal rule on the torus, and Richardson
//! extrapolation in the resolvent smoothing parameter.

pub mod panels;
pub mod richardson;
pub mod sum;
pub mod tensor;

pub use panels::{integrate_adaptive, integrate_panels};
pub use richardson::EpsLadder;
pub use sum::pairwise_sum;
