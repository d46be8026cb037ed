use std::sync::Arc;

use num_complex::Complex64;

use super::{require_order, require_real};
use crate::boundary::BoundaryFunction;
use crate::disk::{Disk, DiskFunction};
use crate::error::Result;
use crate::node::{solve_mixed_bvp, BoundaryOperatorExpr, BvpSolution, DiskNode, SolveOptions};

/// `(Δ − λ)u = f` in the disk with `β̃₀ ∂u/∂τ + β̃₁ ∂u/∂n + γ̃u = g` on the
/// circle. The coefficients are real-valued.
#[derive(Clone, Debug)]
pub struct PoincareProblem {
    pub beta0: BoundaryFunction,
    pub beta1: BoundaryFunction,
    pub gamma: BoundaryFunction,
    pub g: BoundaryFunction,
    pub lambda: Complex64,
    pub f: Option<DiskFunction>,
}

impl PoincareProblem {
    /// Harmonic problem with constant coefficients.
    pub fn constant(order: usize, beta0: f64, beta1: f64, gamma: f64, g: BoundaryFunction) -> Self {
        let k = |v: f64| BoundaryFunction::constant(order, Complex64::new(v, 0.0));
        Self {
            beta0: k(beta0),
            beta1: k(beta1),
            gamma: k(gamma),
            g,
            lambda: Complex64::new(0.0, 0.0),
            f: None,
        }
    }

    /// `β₀ = β̃₀ d/ds + γ̃` and `β₁ = β̃₁`.
    pub fn boundary_operators(&self) -> (BoundaryOperatorExpr, BoundaryOperatorExpr) {
        let mult = |a: &BoundaryFunction| {
            if a.max_abs_coeff() == 0.0 {
                BoundaryOperatorExpr::zero()
            } else {
                BoundaryOperatorExpr::mult(a.clone())
            }
        };
        let beta0 = mult(&self.beta0)
            .then(&BoundaryOperatorExpr::tangential_derivative())
            .plus(mult(&self.gamma));
        (beta0, mult(&self.beta1))
    }
}

pub fn solve_poincare(
    disk: &Arc<Disk>,
    p: &PoincareProblem,
    opts: &SolveOptions,
) -> Result<BvpSolution<DiskFunction>> {
    let order = disk.order();
    for (name, f) in [
        ("beta0", &p.beta0),
        ("beta1", &p.beta1),
        ("gamma", &p.gamma),
        ("g", &p.g),
    ] {
        require_order(order, name, f)?;
    }
    for (name, f) in [
        ("beta0", &p.beta0),
        ("beta1", &p.beta1),
        ("gamma", &p.gamma),
    ] {
        require_real(name, f)?;
    }
    let node = DiskNode::dirichlet_to_neumann(disk.clone());
    let (beta0, beta1) = p.boundary_operators();
    let zero = disk.zeros();
    let f = p.f.as_ref().unwrap_or(&zero);
    solve_mixed_bvp(&node, p.lambda, f, &p.g, &beta0, &beta1, opts)
}
