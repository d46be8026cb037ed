use std::sync::Arc;

use num_complex::Complex64;

use super::require_order;
use crate::boundary::{angular_grid, BoundaryFunction, CircleShift, Side};
use crate::disk::Disk;
use crate::error::{Error, Result};
use crate::node::{
    solve_mixed_bvp, BoundaryOperatorExpr, BoundaryOperatorKind, BvpSolution, DiskNode,
    SolveOptions,
};
use crate::DiskFunction;

/// Find `Φ⁺` analytic inside and `Φ⁻` analytic outside the circle with
/// `Φ⁻(∞) = 0` and `A(s)Φ⁺[α(s)] − B(s)Φ⁻(s) = g(s)`; without a shift,
/// `α` is the identity.
#[derive(Clone, Debug)]
pub struct RiemannProblem {
    pub a: BoundaryFunction,
    pub b: BoundaryFunction,
    pub g: BoundaryFunction,
    pub shift: Option<CircleShift>,
}

impl RiemannProblem {
    pub fn new(a: BoundaryFunction, b: BoundaryFunction, g: BoundaryFunction) -> Self {
        Self {
            a,
            b,
            g,
            shift: None,
        }
    }

    pub fn with_shift(mut self, shift: CircleShift) -> Self {
        self.shift = Some(shift);
        self
    }
}

#[derive(Clone, Debug)]
pub struct RiemannSolution {
    /// Density `φ` with `Φ± = ±φ + Sφ`.
    pub phi: BoundaryFunction,
    pub plus: BoundaryFunction,
    pub minus: BoundaryFunction,
    /// Largest `|AΦ⁺∘α − BΦ⁻ − g|` on the angular grid, divided by `‖g‖`.
    pub jump_residual: f64,
    /// `min |B|` on the angular grid.
    pub min_abs_b: f64,
    pub diagnostics: BvpSolution<DiskFunction>,
}

impl RiemannSolution {
    /// `Φ⁺(z)` for `|z| < 1`.
    pub fn interior(&self, z: Complex64) -> Result<Complex64> {
        self.phi.cauchy_integral_eval(z, Side::Interior)
    }

    /// `Φ⁻(z)` for `|z| > 1`.
    pub fn exterior(&self, z: Complex64) -> Result<Complex64> {
        self.phi.cauchy_integral_eval(z, Side::Exterior)
    }
}

/// Solves `(a + bS)φ = g` with `a = A + B`, `b = A − B`.
pub fn solve_riemann(
    disk: &Arc<Disk>,
    p: &RiemannProblem,
    opts: &SolveOptions,
) -> Result<RiemannSolution> {
    if p.shift.is_some() {
        return Err(Error::InvalidArgument(
            "problem has a shift; use solve_shifted_riemann".into(),
        ));
    }
    solve(disk, p, None, opts)
}

/// Solves `(Aτ + B)φ + (Aτ − B)Sφ = g` with `τφ = φ∘α`.
pub fn solve_shifted_riemann(
    disk: &Arc<Disk>,
    p: &RiemannProblem,
    opts: &SolveOptions,
) -> Result<RiemannSolution> {
    let shift = p
        .shift
        .as_ref()
        .ok_or_else(|| Error::InvalidShift("shifted Riemann problem without a shift".into()))?;
    if shift.order() != disk.order() {
        return Err(Error::InvalidShift(format!(
            "shift is sampled for order {} but the disk has {}",
            shift.order(),
            disk.order()
        )));
    }
    solve(disk, p, Some(shift), opts)
}

fn solve(
    disk: &Arc<Disk>,
    p: &RiemannProblem,
    shift: Option<&CircleShift>,
    opts: &SolveOptions,
) -> Result<RiemannSolution> {
    let order = disk.order();
    for (name, f) in [("A", &p.a), ("B", &p.b), ("g", &p.g)] {
        require_order(order, name, f)?;
    }
    let node = DiskNode::new(disk.clone(), BoundaryOperatorKind::CauchySingular);
    let (beta0, beta1) = match shift {
        None => (
            BoundaryOperatorExpr::mult(&p.a + &p.b),
            BoundaryOperatorExpr::mult(&p.a - &p.b),
        ),
        Some(alpha) => {
            let a_tau = BoundaryOperatorExpr::mult(p.a.clone())
                .then(&BoundaryOperatorExpr::shift(alpha.clone()));
            let b = BoundaryOperatorExpr::mult(p.b.clone());
            (a_tau.clone().plus(b.clone()), a_tau.minus(b))
        }
    };
    let diagnostics = solve_mixed_bvp(
        &node,
        Complex64::new(0.0, 0.0),
        &disk.zeros(),
        &p.g,
        &beta0,
        &beta1,
        opts,
    )?;
    let phi = diagnostics.psi.clone();
    let (plus, minus) = phi.plemelj_traces();

    let grid = angular_grid(order);
    let targets: Vec<f64> = match shift {
        Some(alpha) => alpha.targets().to_vec(),
        None => grid.clone(),
    };
    let max_jump = grid
        .iter()
        .zip(&targets)
        .map(|(&t, &at)| {
            (p.a.eval(t) * plus.eval(at) - p.b.eval(t) * minus.eval(t) - p.g.eval(t)).norm()
        })
        .fold(0.0, f64::max);
    let g_norm = p.g.norm();
    let jump_residual = if g_norm > 0.0 {
        max_jump / g_norm
    } else {
        max_jump
    };
    let min_abs_b = grid
        .iter()
        .map(|&t| p.b.eval(t).norm())
        .fold(f64::INFINITY, f64::min);

    Ok(RiemannSolution {
        phi,
        plus,
        minus,
        jump_residual,
        min_abs_b,
        diagnostics,
    })
}
