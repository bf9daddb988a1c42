//! Shared dense linear algebra, sampling and distribution utilities.
//!
//! All stochastic operations take an explicit 64-bit seed and are pure
//! functions of their inputs: identical seeds give identical outputs.

mod distribution;
mod linalg;
mod sampling;
pub(crate) mod simplex;

pub use distribution::{
    lognormal_from_mean_cov, std_normal_cdf, std_normal_pdf, std_normal_quantile,
    DistributionFamily, MarginalDistribution,
};
pub use linalg::{cholesky, sym_eig, CholeskyFactor, EigenDecomposition, SymMatrix};
pub use sampling::{
    derive_seed, lhs_sample, sample_correlated_standard_normals, seeded_rng, stream_rng,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("matrix is not positive definite (pivot <= 0 after jitter up to {max_jitter:e})")]
    NotPositiveDefinite { max_jitter: f64 },
    #[error("symmetric eigendecomposition did not converge")]
    NoConvergence,
    #[error("matrix is not symmetric: |a[{i},{j}] - a[{j},{i}]| = {diff:e} exceeds tolerance")]
    NotSymmetric { i: usize, j: usize, diff: f64 },
    #[error("matrix entry at ({i},{j}) is not finite")]
    NotFinite { i: usize, j: usize },
    #[error("lognormal requires a positive mean, got {0}")]
    InvalidMean(f64),
    #[error("invalid coefficient of variation {0}")]
    InvalidCov(f64),
    #[error("invalid bounds at dimension {dim}: lower {lower} must be < upper {upper}")]
    InvalidBounds { dim: usize, lower: f64, upper: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0}")]
    InvalidArgument(String),
}

/// Axis-aligned box: per-dimension lower/upper limits with `lower < upper`.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, NumericsError> {
        if lower.len() != upper.len() {
            return Err(NumericsError::DimensionMismatch {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        for (i, (&lo, &hi)) in lower.iter().zip(upper.iter()).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(NumericsError::InvalidBounds {
                    dim: i,
                    lower: lo,
                    upper: hi,
                });
            }
        }
        Ok(Self { lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn width(&self, i: usize) -> f64 {
        self.upper[i] - self.lower[i]
    }

    pub fn center(&self) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| 0.5 * (lo + hi))
            .collect()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(&v, (&lo, &hi))| v >= lo && v <= hi)
    }

    /// Clamp `x` into the box in place; returns true if any component moved.
    pub fn clamp(&self, x: &mut [f64]) -> bool {
        let mut clamped = false;
        for i in 0..x.len().min(self.dim()) {
            let v = x[i].clamp(self.lower[i], self.upper[i]);
            if v != x[i] {
                x[i] = v;
                clamped = true;
            }
        }
        clamped
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_reject_inverted_limits() {
        assert!(Bounds::new(vec![0.0, 1.0], vec![1.0, 0.5]).is_err());
        assert!(Bounds::new(vec![0.0], vec![0.0]).is_err());
        assert!(Bounds::new(vec![0.0], vec![1.0]).is_ok());
    }

    #[test]
    fn bounds_clamp_and_contains() {
        let b = Bounds::new(vec![0.0, -1.0], vec![1.0, 1.0]).unwrap();
        assert!(b.contains(&[0.5, 0.0]));
        assert!(!b.contains(&[1.5, 0.0]));
        let mut x = [1.5, -2.0];
        assert!(b.clamp(&mut x));
        assert_eq!(x, [1.0, -1.0]);
        let mut y = [0.5, 0.5];
        assert!(!b.clamp(&mut y));
    }
}
