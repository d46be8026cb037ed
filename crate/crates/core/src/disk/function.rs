use std::f64::consts::PI;
use std::ops::{Add, Mul, Sub};

use nalgebra::DVector;
use num_complex::Complex64;

use super::RadialGrid;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Element of `H = L²(D)` in polar form: `u(r,θ) = Σ_{|n|≤N} u_n(r) e^{inθ}`,
/// each `u_n` stored as Chebyshev coefficients in `T_k(2r − 1)`, `k ≤ M_r`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiskFunction {
    order: usize,
    radial_degree: usize,
    coeffs: Vec<Vec<Complex64>>,
}

impl DiskFunction {
    pub fn zeros(order: usize, radial_degree: usize) -> Self {
        Self {
            order,
            radial_degree,
            coeffs: vec![vec![ZERO; radial_degree + 1]; 2 * order + 1],
        }
    }

    /// Builds from per-mode Chebyshev coefficients, ascending in `n`.
    pub fn from_coeffs(
        order: usize,
        radial_degree: usize,
        coeffs: Vec<Vec<Complex64>>,
    ) -> Result<Self> {
        if coeffs.len() != 2 * order + 1 {
            return Err(Error::InvalidGrid {
                expected: 2 * order + 1,
                got: coeffs.len(),
            });
        }
        if let Some(bad) = coeffs.iter().find(|c| c.len() != radial_degree + 1) {
            return Err(Error::InvalidGrid {
                expected: radial_degree + 1,
                got: bad.len(),
            });
        }
        if coeffs
            .iter()
            .flatten()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::InvalidArgument("non-finite coefficient".into()));
        }
        Ok(Self {
            order,
            radial_degree,
            coeffs,
        })
    }

    /// Interpolates `profile(n, r)` at the collocation nodes, mode by mode.
    pub fn from_profiles<F>(grid: &RadialGrid, order: usize, profile: F) -> Self
    where
        F: Fn(i64, f64) -> Complex64,
    {
        let values = (-(order as i64)..=order as i64)
            .map(|n| grid.nodes().iter().map(|&r| profile(n, r)).collect())
            .collect();
        Self::from_nodal(grid, order, values)
    }

    /// Builds from nodal values per mode.
    pub fn from_nodal(grid: &RadialGrid, order: usize, values: Vec<Vec<Complex64>>) -> Self {
        let coeffs = values
            .into_iter()
            .map(|v| nodal_to_coeffs(grid, &v))
            .collect();
        Self {
            order,
            radial_degree: grid.degree(),
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn radial_degree(&self) -> usize {
        self.radial_degree
    }

    /// Chebyshev coefficients of every mode, ascending in `n`.
    pub fn coeffs(&self) -> &[Vec<Complex64>] {
        &self.coeffs
    }

    pub fn mode_coeffs(&self, n: i64) -> &[Complex64] {
        &self.coeffs[(n + self.order as i64) as usize]
    }

    pub fn mode_is_zero(&self, n: i64) -> bool {
        self.mode_coeffs(n).iter().all(|c| *c == ZERO)
    }

    /// `u_n` at the collocation nodes.
    pub fn nodal_values(&self, grid: &RadialGrid, n: i64) -> Vec<Complex64> {
        apply_real(grid.to_values_matrix(), self.mode_coeffs(n))
    }

    /// `u_n(r)` by Clenshaw summation.
    pub fn profile(&self, n: i64, r: f64) -> Complex64 {
        clenshaw(self.mode_coeffs(n), 2.0 * r - 1.0)
    }

    pub fn eval(&self, r: f64, theta: f64) -> Complex64 {
        (-(self.order as i64)..=self.order as i64)
            .map(|n| self.profile(n, r) * Complex64::from_polar(1.0, n as f64 * theta))
            .sum()
    }

    /// `⟨u, v⟩_H = Σ_n 2π ∫₀¹ u_n conj(v_n) r dr`.
    pub fn inner(&self, other: &Self, grid: &RadialGrid) -> Result<Complex64> {
        self.check_shape(other)?;
        let (nodes, weights, eval) = grid.quadrature();
        let mut total = ZERO;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            let va = apply_real(eval, a);
            let vb = apply_real(eval, b);
            total += va
                .iter()
                .zip(&vb)
                .zip(nodes.iter().zip(weights))
                .map(|((x, y), (r, w))| x * y.conj() * (r * w))
                .sum::<Complex64>();
        }
        Ok(total * (2.0 * PI))
    }

    pub fn norm(&self, grid: &RadialGrid) -> f64 {
        self.inner(self, grid)
            .map(|v| v.re.max(0.0).sqrt())
            .unwrap_or(f64::NAN)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Largest ratio `|u_n(10⁻³)| / max_j |u_n(r_j)|` over modes `|n| ≥ 2`.
    ///
    /// Regular functions behave like `r^{min(|n|,2)}` at the origin, so this
    /// should stay below `10⁻²`.
    pub fn regularity_defect(&self, grid: &RadialGrid) -> f64 {
        (-(self.order as i64)..=self.order as i64)
            .filter(|n| n.abs() >= 2)
            .map(|n| {
                let peak = self
                    .nodal_values(grid, n)
                    .iter()
                    .map(|v| v.norm())
                    .fold(0.0, f64::max);
                if peak == 0.0 {
                    0.0
                } else {
                    self.profile(n, 1e-3).norm() / peak
                }
            })
            .fold(0.0, f64::max)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::TruncationMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if self.radial_degree != other.radial_degree {
            return Err(Error::TruncationMismatch {
                left: self.radial_degree,
                right: other.radial_degree,
            });
        }
        Ok(())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        self.map(|c| c * factor)
    }

    /// `self + factor·other`.
    pub fn axpy(&self, factor: Complex64, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + factor * y).collect())
            .collect();
        Ok(Self { coeffs, ..*self })
    }

    fn map<F: Fn(Complex64) -> Complex64>(&self, f: F) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|m| m.iter().map(|c| f(*c)).collect())
            .collect();
        Self { coeffs, ..*self }
    }
}

impl Add for &DiskFunction {
    type Output = DiskFunction;

    fn add(self, rhs: Self) -> DiskFunction {
        self.axpy(Complex64::new(1.0, 0.0), rhs)
            .expect("disk functions must share a discretization")
    }
}

impl Sub for &DiskFunction {
    type Output = DiskFunction;

    fn sub(self, rhs: Self) -> DiskFunction {
        self.axpy(Complex64::new(-1.0, 0.0), rhs)
            .expect("disk functions must share a discretization")
    }
}

impl Mul<Complex64> for &DiskFunction {
    type Output = DiskFunction;

    fn mul(self, rhs: Complex64) -> DiskFunction {
        self.scale(rhs)
    }
}

pub(crate) fn apply_real(matrix: &nalgebra::DMatrix<f64>, v: &[Complex64]) -> Vec<Complex64> {
    let re = DVector::from_iterator(v.len(), v.iter().map(|c| c.re));
    let im = DVector::from_iterator(v.len(), v.iter().map(|c| c.im));
    let re = matrix * re;
    let im = matrix * im;
    re.iter()
        .zip(im.iter())
        .map(|(a, b)| Complex64::new(*a, *b))
        .collect()
}

/// Interpolation coefficients with round-off level entries (below `2ε` of
/// the largest) set to zero.
pub(crate) fn nodal_to_coeffs(grid: &RadialGrid, values: &[Complex64]) -> Vec<Complex64> {
    let mut c = apply_real(grid.to_coeffs_matrix(), values);
    let floor = 2.0 * f64::EPSILON * c.iter().map(|v| v.norm()).fold(0.0, f64::max);
    for v in c.iter_mut() {
        if v.norm() < floor {
            *v = ZERO;
        }
    }
    c
}

fn clenshaw(coeffs: &[Complex64], y: f64) -> Complex64 {
    let mut b1 = ZERO;
    let mut b2 = ZERO;
    for c in coeffs.iter().skip(1).rev() {
        let b0 = c + b1 * (2.0 * y) - b2;
        b2 = b1;
        b1 = b0;
    }
    coeffs.first().copied().unwrap_or(ZERO) + b1 * y - b2
}
