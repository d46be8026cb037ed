use std::f64::consts::PI;

use num_complex::Complex64;

use super::{angular_grid, BoundaryFunction};
use crate::error::{Error, Result};

/// Minimum admissible `α′` on the grid.
pub const MIN_DERIVATIVE: f64 = 1e-10;

/// An orientation-preserving diffeomorphism `α` of the circle, stored as its
/// values `α(θ_j)` on the uniform grid of order `N`.
///
/// `α(θ) − θ` is treated as a periodic function and interpolated
/// trigonometrically for the derivative check.
#[derive(Clone, Debug, PartialEq)]
pub struct CircleShift {
    order: usize,
    targets: Vec<f64>,
}

impl CircleShift {
    pub fn identity(order: usize) -> Self {
        Self {
            order,
            targets: angular_grid(order),
        }
    }

    pub fn rotation(order: usize, angle: f64) -> Self {
        Self {
            order,
            targets: angular_grid(order).into_iter().map(|t| t + angle).collect(),
        }
    }

    pub fn from_fn<F: Fn(f64) -> f64>(order: usize, alpha: F) -> Result<Self> {
        let winding = alpha(2.0 * PI) - alpha(0.0);
        if (winding - 2.0 * PI).abs() > 1e-9 {
            return Err(Error::InvalidShift(format!(
                "α(2π) − α(0) = {winding}, expected 2π"
            )));
        }
        Self::from_samples(angular_grid(order).into_iter().map(alpha).collect())
    }

    /// Validates a table of `α(θ_j)` on the odd uniform grid.
    pub fn from_samples(targets: Vec<f64>) -> Result<Self> {
        let len = targets.len();
        if len < 3 || len.is_multiple_of(2) {
            return Err(Error::InvalidShift(format!(
                "table length {len} is not an odd grid size"
            )));
        }
        if targets.iter().any(|t| !t.is_finite()) {
            return Err(Error::InvalidShift("non-finite table entry".into()));
        }
        let increasing = targets.windows(2).all(|w| w[1] > w[0]);
        if !increasing || targets[len - 1] >= targets[0] + 2.0 * PI {
            return Err(Error::InvalidShift("table is not strictly monotone".into()));
        }
        let shift = Self {
            order: len / 2,
            targets,
        };
        let min_slope = shift.min_derivative();
        if min_slope <= MIN_DERIVATIVE {
            return Err(Error::InvalidShift(format!(
                "min α′ = {min_slope:e} is not positive"
            )));
        }
        Ok(shift)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `α(θ_j)` on the grid.
    pub fn targets(&self) -> &[f64] {
        &self.targets
    }

    /// `α′(θ_j)` computed from the trigonometric interpolant of `α(θ) − θ`.
    pub fn derivative(&self) -> Vec<f64> {
        let periodic: Vec<Complex64> = self
            .targets
            .iter()
            .zip(angular_grid(self.order))
            .map(|(a, t)| Complex64::new(a - t, 0.0))
            .collect();
        let p = BoundaryFunction::analyze(&periodic).expect("odd table length");
        p.tangential_derivative()
            .synthesize()
            .iter()
            .map(|d| 1.0 + d.re)
            .collect()
    }

    pub fn min_derivative(&self) -> f64 {
        self.derivative().into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn is_identity(&self) -> bool {
        self.targets
            .iter()
            .zip(angular_grid(self.order))
            .all(|(a, t)| (a - t).abs() <= 1e-15 * (1.0 + t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_monotone_table() {
        let mut table = angular_grid(4);
        table.swap(2, 3);
        assert!(matches!(
            CircleShift::from_samples(table),
            Err(Error::InvalidShift(_))
        ));
    }

    #[test]
    fn rejects_fold_and_wrong_degree() {
        // α′ = 1 + 1.5 cos θ changes sign
        assert!(CircleShift::from_fn(16, |t| t + 1.5 * t.sin()).is_err());
        assert!(CircleShift::from_fn(8, |t| 2.0 * t).is_err());
    }

    #[test]
    fn warp_derivative_is_spectral() {
        let s = CircleShift::from_fn(16, |t| t + 0.3 * t.sin()).unwrap();
        for (d, t) in s.derivative().iter().zip(angular_grid(16)) {
            assert!((d - (1.0 + 0.3 * t.cos())).abs() < 1e-13);
        }
        assert!(CircleShift::identity(5).is_identity());
        assert!(!CircleShift::rotation(5, 0.1).is_identity());
    }
}
