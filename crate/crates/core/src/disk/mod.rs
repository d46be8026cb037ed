//! The disk `D = {|z| < 1}` and the concrete ingredients of the operator
//! node on it: the Dirichlet solution operator `T`, harmonic continuation `Γ`,
//! its adjoint `Γ*`, the resolvents `(I − λT)⁻¹`, and the traces `Γ₀`, `Γ₁`.
//!
//! Every operator acts mode by mode: `Δ(u_n(r)e^{inθ}) = (u_n″ + u_n′/r −
//! n²u_n/r²) e^{inθ}`. Radial problems are solved by Chebyshev collocation on
//! `[0, 1]` with a regularity condition at the origin in place of the
//! singular equation there (`u_n′(0) = 0` for `n = 0`, `u_n(0) = 0` otherwise).

mod function;
mod radial;
mod spectrum;

use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;

pub use function::DiskFunction;
pub use radial::{clenshaw_curtis_weights, differentiate_coeffs, monomial_coeffs, RadialGrid};
pub use spectrum::{SpectrumGuard, SpectrumReport, GUARD_TOLERANCE, ZEROS_PER_ORDER};

use crate::boundary::BoundaryFunction;
use crate::error::{Error, Result};
use function::apply_real;

pub const DEFAULT_ORDER: usize = 32;
pub const DEFAULT_RADIAL_DEGREE: usize = 64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Discretization of the unit disk: angular truncation `N` and a radial
/// Chebyshev grid of degree `M_r`.
#[derive(Debug)]
pub struct Disk {
    order: usize,
    grid: RadialGrid,
    guard: OnceLock<SpectrumGuard>,
}

impl Disk {
    pub fn new(order: usize, radial_degree: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument(
                "angular order must be positive".into(),
            ));
        }
        if radial_degree < 4 {
            return Err(Error::InvalidArgument(format!(
                "radial degree {radial_degree} is too small"
            )));
        }
        Ok(Self {
            order,
            grid: RadialGrid::new(radial_degree),
            guard: OnceLock::new(),
        })
    }

    pub fn with_defaults() -> Self {
        Self::new(DEFAULT_ORDER, DEFAULT_RADIAL_DEGREE).expect("defaults are valid")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn radial_degree(&self) -> usize {
        self.grid.degree()
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    pub fn zeros(&self) -> DiskFunction {
        DiskFunction::zeros(self.order, self.grid.degree())
    }

    pub fn from_profiles<F>(&self, profile: F) -> DiskFunction
    where
        F: Fn(i64, f64) -> Complex64,
    {
        DiskFunction::from_profiles(&self.grid, self.order, profile)
    }

    fn modes(&self) -> impl Iterator<Item = i64> {
        let n = self.order as i64;
        -n..=n
    }

    fn check_boundary(&self, phi: &BoundaryFunction) -> Result<()> {
        if phi.order() != self.order {
            return Err(Error::TruncationMismatch {
                left: self.order,
                right: phi.order(),
            });
        }
        Ok(())
    }

    fn check_disk(&self, u: &DiskFunction) -> Result<()> {
        if u.order() != self.order || u.radial_degree() != self.grid.degree() {
            return Err(Error::TruncationMismatch {
                left: self.order,
                right: u.order(),
            });
        }
        Ok(())
    }

    /// Distance from `λ` to the Dirichlet spectrum `{−j²_{n,k}}`.
    pub fn spectrum_guard(&self, lambda: Complex64) -> SpectrumReport {
        self.guard
            .get_or_init(|| SpectrumGuard::new(self.order, ZEROS_PER_ORDER))
            .check(lambda)
    }

    /// Fails with [`Error::SpectrumProximity`] when `(I − λT)⁻¹` does not exist.
    pub fn ensure_resolvent(&self, lambda: Complex64) -> Result<()> {
        if lambda == ZERO {
            return Ok(());
        }
        let report = self.spectrum_guard(lambda);
        if report.passes {
            Ok(())
        } else {
            Err(Error::SpectrumProximity {
                lambda,
                distance: report.distance,
            })
        }
    }

    /// Harmonic continuation `Γφ`: `u_n(r) = φ̂(n) r^{|n|}`.
    pub fn poisson_extend(&self, phi: &BoundaryFunction) -> Result<DiskFunction> {
        self.check_boundary(phi)?;
        let degree = self.grid.degree();
        let coeffs = self
            .modes()
            .map(|n| {
                let value = phi.coeff(n);
                monomial_coeffs(n.unsigned_abs() as usize, degree)
                    .into_iter()
                    .map(|c| value * c)
                    .collect()
            })
            .collect();
        DiskFunction::from_coeffs(self.order, degree, coeffs)
    }

    /// Dirichlet trace `Γ₀u = u|_{r=1}`.
    pub fn trace_dirichlet(&self, u: &DiskFunction) -> Result<BoundaryFunction> {
        self.check_disk(u)?;
        let coeffs = self
            .modes()
            .map(|n| u.mode_coeffs(n).iter().sum())
            .collect();
        BoundaryFunction::new(self.order, coeffs)
    }

    /// Normal-derivative trace `Γ₁u = ∂u/∂r|_{r=1}`, using `d/dr T_k(2r−1)|_{r=1} = 2k²`.
    pub fn trace_neumann(&self, u: &DiskFunction) -> Result<BoundaryFunction> {
        self.check_disk(u)?;
        let coeffs = self
            .modes()
            .map(|n| {
                u.mode_coeffs(n)
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * (2 * k * k) as f64)
                    .sum()
            })
            .collect();
        BoundaryFunction::new(self.order, coeffs)
    }

    /// Adjoint of harmonic continuation: `(Γ*f)ˆ(n) = ∫₀¹ f_n(r) r^{|n|+1} dr`.
    pub fn gstar(&self, f: &DiskFunction) -> Result<BoundaryFunction> {
        self.check_disk(f)?;
        let (nodes, weights, eval) = self.grid.quadrature();
        let coeffs = self
            .modes()
            .map(|n| {
                let vals = apply_real(eval, f.mode_coeffs(n));
                vals.iter()
                    .zip(nodes.iter().zip(weights))
                    .map(|(v, (r, w))| v * (w * r.powi(n.abs() as i32 + 1)))
                    .sum()
            })
            .collect();
        BoundaryFunction::new(self.order, coeffs)
    }

    /// `(Δ − λ)u`, mode by mode. At the origin node the mode-0 value is the
    /// limit `2u₀″(0) − λu₀(0)`; other modes of a smooth function vanish there.
    pub fn laplacian_apply(&self, u: &DiskFunction, lambda: Complex64) -> Result<DiskFunction> {
        self.check_disk(u)?;
        let grid = &self.grid;
        let r = grid.nodes();
        let values = self
            .modes()
            .map(|n| {
                let c0 = u.mode_coeffs(n);
                let c1 = differentiate_coeffs(c0);
                let c2 = differentiate_coeffs(&c1);
                let v = apply_real(grid.to_values_matrix(), c0);
                let d1 = apply_real(grid.to_values_matrix(), &c1);
                let d2 = apply_real(grid.to_values_matrix(), &c2);
                let n2 = (n * n) as f64;
                (0..v.len())
                    .map(|j| {
                        if j == 0 {
                            if n == 0 {
                                d2[0] * 2.0 - lambda * v[0]
                            } else {
                                -lambda * v[0]
                            }
                        } else {
                            d2[j] + d1[j] / r[j] - v[j] * (n2 / (r[j] * r[j])) - lambda * v[j]
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(DiskFunction::from_nodal(grid, self.order, values))
    }

    /// Collocation solve of `(Δ − λ)u = f`, `u|_{∂D} = φ`, mode by mode.
    ///
    /// This is the direct route; the operator-node routes compose
    /// [`Self::helmholtz_dirichlet_solve`], [`Self::resolvent_apply`] and
    /// [`Self::poisson_extend`] instead.
    pub fn solve_with_trace(
        &self,
        f: Option<&DiskFunction>,
        phi: Option<&BoundaryFunction>,
        lambda: Complex64,
    ) -> Result<DiskFunction> {
        if let Some(f) = f {
            self.check_disk(f)?;
        }
        if let Some(phi) = phi {
            self.check_boundary(phi)?;
        }
        self.ensure_resolvent(lambda)?;
        let size = self.grid.degree() + 1;
        let values = self
            .modes()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|n| {
                let boundary = phi.map_or(ZERO, |p| p.coeff(n));
                let forcing = f.filter(|f| !f.mode_is_zero(n));
                if forcing.is_none() && boundary == ZERO {
                    return Ok(vec![ZERO; size]);
                }
                let rhs = forcing.map(|f| f.nodal_values(&self.grid, n));
                self.solve_mode(n, lambda, rhs.as_deref(), boundary)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DiskFunction::from_nodal(&self.grid, self.order, values))
    }

    fn solve_mode(
        &self,
        n: i64,
        lambda: Complex64,
        forcing: Option<&[Complex64]>,
        boundary: Complex64,
    ) -> Result<Vec<Complex64>> {
        let m = self.grid.degree();
        let r = self.grid.nodes();
        let d1 = self.grid.diff1();
        let d2 = self.grid.diff2();
        let n2 = (n * n) as f64;
        let mut a = DMatrix::<Complex64>::zeros(m + 1, m + 1);
        let mut b = DVector::<Complex64>::zeros(m + 1);
        // u″ + u′/r − (n²/r² + λ)u = f at interior nodes
        for j in 1..m {
            let r2 = r[j] * r[j];
            for k in 0..=m {
                a[(j, k)] = Complex64::new(d2[(j, k)] + d1[(j, k)] / r[j], 0.0);
            }
            a[(j, j)] -= lambda + n2 / r2;
            if let Some(f) = forcing {
                b[j] = f[j];
            }
        }
        if n == 0 {
            for k in 0..=m {
                a[(0, k)] = Complex64::new(d1[(0, k)], 0.0);
            }
        } else {
            a[(0, 0)] = Complex64::new(1.0, 0.0);
        }
        a[(m, m)] = Complex64::new(1.0, 0.0);
        b[m] = boundary;

        let x = a.lu().solve(&b).ok_or_else(|| {
            Error::SolverFailure(format!("singular collocation system for mode {n}"))
        })?;
        if x.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::SolverFailure(format!(
                "non-finite collocation solution for mode {n}"
            )));
        }
        Ok(x.iter().copied().collect())
    }

    /// `T f`: solution of `Δu = f`, `u|_{∂D} = 0`.
    pub fn dirichlet_solve(&self, f: &DiskFunction) -> Result<DiskFunction> {
        self.solve_with_trace(Some(f), None, ZERO)
    }

    /// `T(I − λT)⁻¹ f`: solution of `(Δ − λ)u = f`, `u|_{∂D} = 0`.
    pub fn helmholtz_dirichlet_solve(
        &self,
        f: &DiskFunction,
        lambda: Complex64,
    ) -> Result<DiskFunction> {
        self.solve_with_trace(Some(f), None, lambda)
    }

    /// `(I − λT)⁻¹ f = f + λ T(I − λT)⁻¹ f`.
    pub fn resolvent_apply(&self, f: &DiskFunction, lambda: Complex64) -> Result<DiskFunction> {
        if lambda == ZERO {
            self.check_disk(f)?;
            return Ok(f.clone());
        }
        let tf = self.helmholtz_dirichlet_solve(f, lambda)?;
        f.axpy(lambda, &tf)
    }

    /// `(I − λT)⁻¹Γφ`, computed directly as the solution of `(Δ − λ)u = 0`,
    /// `u|_{∂D} = φ`.
    pub fn resolvent_harmonic(
        &self,
        phi: &BoundaryFunction,
        lambda: Complex64,
    ) -> Result<DiskFunction> {
        self.solve_with_trace(None, Some(phi), lambda)
    }

    /// Relative residual `‖(Δ − λ)u − f‖_H / ‖f‖_H` (absolute when `f = 0`).
    pub fn pde_residual(
        &self,
        u: &DiskFunction,
        lambda: Complex64,
        f: &DiskFunction,
    ) -> Result<f64> {
        let lu = self.laplacian_apply(u, lambda)?;
        let diff = (&lu - f).norm(&self.grid);
        let scale = f.norm(&self.grid);
        Ok(if scale > 0.0 { diff / scale } else { diff })
    }

    /// Polar-grid samples `(r, θ, u(r, θ))` with `n_r` radii in `[0, 1]` and
    /// `n_θ` angles in `[0, 2π)`.
    pub fn polar_samples(
        &self,
        u: &DiskFunction,
        n_r: usize,
        n_theta: usize,
    ) -> Vec<(f64, f64, Complex64)> {
        polar_rows(n_r, n_theta, 0.0, 1.0, |r, t| u.eval(r, t))
    }
}

/// Rows `(r, θ, value)` on `n_r` radii spanning `[r0, r1]` and `n_θ` uniform angles.
pub fn polar_rows<F: Fn(f64, f64) -> Complex64>(
    n_r: usize,
    n_theta: usize,
    r0: f64,
    r1: f64,
    value: F,
) -> Vec<(f64, f64, Complex64)> {
    let mut rows = Vec::with_capacity(n_r * n_theta);
    for i in 0..n_r {
        let r = if n_r == 1 {
            r1
        } else {
            r0 + (r1 - r0) * i as f64 / (n_r - 1) as f64
        };
        for j in 0..n_theta {
            let t = 2.0 * std::f64::consts::PI * j as f64 / n_theta as f64;
            rows.push((r, t, value(r, t)));
        }
    }
    rows
}
