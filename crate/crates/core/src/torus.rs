//! Points on the torus `T^d = [-π, π]^d` and the band symbol.

use crate::error::SpectralError;

/// A point of the `d`-dimensional torus with coordinates in `[-π, π]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint {
    coords: Vec<f64>,
}

impl TorusPoint {
    /// Build a torus point, rejecting empty coordinate lists and coordinates
    /// outside the fundamental domain.
    pub fn new(coords: Vec<f64>) -> Result<Self, SpectralError> {
        if coords.is_empty() {
            return Err(SpectralError::domain("torus point needs dimension >= 1"));
        }
        for (j, &c) in coords.iter().enumerate() {
            if !c.is_finite() || c.abs() > std::f64::consts::PI {
                return Err(SpectralError::Domain(format!(
                    "coordinate {j} = {c} outside [-pi, pi]"
                )));
            }
        }
        Ok(TorusPoint { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }
}

/// Value of the band symbol at a torus point; always lies in `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolValue {
    pub value: f64,
}

/// The symbol `g(θ) = (1/d) Σ_j cos θ_j` of the free operator.
///
/// The mean of `d` cosines is confined to `[-1, 1]`; the final division may
/// overshoot by one ulp, which is clamped so downstream range checks can rely
/// on the bound exactly.
pub fn symbol(theta: &TorusPoint) -> SymbolValue {
    let d = theta.dim() as f64;
    let sum: f64 = theta.coords().iter().map(|&t| t.cos()).sum();
    SymbolValue {
        value: (sum / d).clamp(-1.0, 1.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn symbol_at_named_points() {
        let origin = TorusPoint::new(vec![0.0, 0.0, 0.0]).unwrap();
        assert_eq!(symbol(&origin).value, 1.0);
        let corner = TorusPoint::new(vec![PI, PI]).unwrap();
        assert_eq!(symbol(&corner).value, -1.0);
        let mixed = TorusPoint::new(vec![0.0, PI]).unwrap();
        assert_eq!(symbol(&mixed).value, 0.0);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(TorusPoint::new(vec![]).is_err());
        assert!(TorusPoint::new(vec![3.2]).is_err());
        assert!(TorusPoint::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn symbol_invariant_under_sign_flip_and_permutation() {
        let p = TorusPoint::new(vec![0.3, -1.2, 2.9]).unwrap();
        let flipped = TorusPoint::new(vec![-0.3, 1.2, -2.9]).unwrap();
        let permuted = TorusPoint::new(vec![2.9, 0.3, -1.2]).unwrap();
        assert_eq!(symbol(&p).value, symbol(&flipped).value);
        assert!((symbol(&p).value - symbol(&permuted).value).abs() < 1e-15);
    }
}
