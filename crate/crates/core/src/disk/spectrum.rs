use num_complex::Complex64;

use crate::bessel::dirichlet_eigenvalues;

/// Number of Bessel zeros tracked per angular order.
pub const ZEROS_PER_ORDER: usize = 20;

/// Relative distance below which `λ` is rejected.
pub const GUARD_TOLERANCE: f64 = 1e-6;

/// Distance from `λ` to the Dirichlet spectrum `{−j²_{n,k}}` of the disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumReport {
    pub lambda: Complex64,
    pub distance: f64,
    pub nearest: f64,
    pub passes: bool,
}

/// Precomputed Dirichlet eigenvalues for `|n| ≤ N`, `k ≤ K`.
#[derive(Clone, Debug)]
pub struct SpectrumGuard {
    eigenvalues: Vec<f64>,
}

impl SpectrumGuard {
    pub fn new(max_order: usize, per_order: usize) -> Self {
        Self {
            eigenvalues: dirichlet_eigenvalues(max_order, per_order),
        }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn check(&self, lambda: Complex64) -> SpectrumReport {
        let (distance, nearest) = self
            .eigenvalues
            .iter()
            .map(|&mu| ((lambda - mu).norm(), mu))
            .fold((f64::INFINITY, f64::NAN), |best, cur| {
                if cur.0 < best.0 {
                    cur
                } else {
                    best
                }
            });
        SpectrumReport {
            lambda,
            distance,
            nearest,
            passes: distance > GUARD_TOLERANCE * (1.0 + lambda.norm()),
        }
    }
}
