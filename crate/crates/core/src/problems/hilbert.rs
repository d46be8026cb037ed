use std::sync::Arc;

use num_complex::Complex64;

use super::{require_order, require_real};
use crate::boundary::{angular_grid, BoundaryFunction};
use crate::disk::{Disk, DiskFunction};
use crate::error::Result;
use crate::node::{
    solve_mixed_bvp, BoundaryOperatorExpr, BoundaryOperatorKind, BvpSolution, DiskNode, Field,
    SolveOptions,
};

/// Find `w = u + iv` analytic in the disk with `a·u + b·v = g` on the circle.
#[derive(Clone, Debug)]
pub struct HilbertProblem {
    pub a: BoundaryFunction,
    pub b: BoundaryFunction,
    pub g: BoundaryFunction,
}

#[derive(Clone, Debug)]
pub struct HilbertSolution {
    /// Boundary values of `u`.
    pub phi: BoundaryFunction,
    /// Boundary values of `v`, `Hφ`.
    pub conjugate: BoundaryFunction,
    pub u: DiskFunction,
    pub v: DiskFunction,
    /// Taylor coefficients of `w` at the origin, normalized by `Im w(0) = 0`.
    pub taylor: Vec<Complex64>,
    /// `‖aφ + bHφ − g‖ / ‖g‖`.
    pub boundary_residual: f64,
    /// Largest `|aφ + bHφ − g|` on the angular grid.
    pub pointwise_residual: f64,
    /// Grid angles where `a² + b²` vanishes.
    pub degenerate_points: Vec<f64>,
    pub diagnostics: BvpSolution<DiskFunction>,
}

impl HilbertSolution {
    /// `w(z)` for `|z| ≤ 1` from the Taylor series.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.taylor
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }
}

/// Solves `(a + bH)φ = g` over real-valued `φ`; then `u = Γφ`, `v = ΓHφ`.
///
/// Rank deficiency and inconsistency of the real system are reported in
/// [`HilbertSolution::diagnostics`].
pub fn solve_hilbert(
    disk: &Arc<Disk>,
    p: &HilbertProblem,
    opts: &SolveOptions,
) -> Result<HilbertSolution> {
    let order = disk.order();
    for (name, f) in [("a", &p.a), ("b", &p.b), ("g", &p.g)] {
        require_order(order, name, f)?;
        require_real(name, f)?;
    }
    let node = DiskNode::new(disk.clone(), BoundaryOperatorKind::Hilbert);
    let beta0 = BoundaryOperatorExpr::mult(p.a.clone());
    let beta1 = if p.b.max_abs_coeff() == 0.0 {
        BoundaryOperatorExpr::zero()
    } else {
        BoundaryOperatorExpr::mult(p.b.clone())
    };
    let opts = SolveOptions {
        field: Field::Real,
        ..*opts
    };
    let diagnostics = solve_mixed_bvp(
        &node,
        Complex64::new(0.0, 0.0),
        &disk.zeros(),
        &p.g,
        &beta0,
        &beta1,
        &opts,
    )?;

    let phi = diagnostics.psi.real_part();
    let conjugate = phi.hilbert_transform();
    let u = disk.poisson_extend(&phi)?;
    let v = disk.poisson_extend(&conjugate)?;

    let mut taylor = Vec::with_capacity(order + 1);
    taylor.push(Complex64::new(phi.coeff(0).re, 0.0));
    taylor.extend((1..=order as i64).map(|n| 2.0 * phi.coeff(n)));

    let lhs = &p.a.multiply(&phi)? + &p.b.multiply(&conjugate)?;
    let diff = &lhs - &p.g;
    let g_norm = p.g.norm();
    let boundary_residual = if g_norm > 0.0 {
        diff.norm() / g_norm
    } else {
        diff.norm()
    };

    let grid = angular_grid(order);
    let pointwise_residual = grid
        .iter()
        .map(|&t| {
            (p.a.eval(t) * phi.eval(t) + p.b.eval(t) * conjugate.eval(t) - p.g.eval(t)).norm()
        })
        .fold(0.0, f64::max);

    let scale = grid
        .iter()
        .map(|&t| p.a.eval(t).norm_sqr() + p.b.eval(t).norm_sqr())
        .fold(0.0, f64::max);
    let degenerate_points = grid
        .iter()
        .copied()
        .filter(|&t| {
            p.a.eval(t).norm_sqr() + p.b.eval(t).norm_sqr() <= 1e-12 * scale.max(f64::MIN_POSITIVE)
        })
        .collect();

    Ok(HilbertSolution {
        phi,
        conjugate,
        u,
        v,
        taylor,
        boundary_residual,
        pointwise_residual,
        degenerate_points,
        diagnostics,
    })
}
