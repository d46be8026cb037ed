//! The abstract operator node `{T, Γ, Λ; H, E}` and everything built on it:
//! M-operator assembly, the spectral and mixed boundary value problems,
//! transfer functions of the mixed system, and the identity suite.
//!
//! The node is described by the [`OperatorNode`] trait; [`DiskNode`] is the
//! shipped realization on the unit disk with a choice of boundary operator
//! `Λ` (Dirichlet-to-Neumann map, Hilbert transform, or Cauchy singular
//! operator).

mod disk_node;
mod expr;
mod linalg;
mod moperator;
mod solve;
mod transfer;
mod verify;

#[cfg(test)]
mod tests;

use num_complex::Complex64;
use rand::RngCore;

pub use disk_node::{BoundaryOperatorKind, DiskNode};
pub use expr::{BoundaryOperatorExpr, Factor, Term};
pub use linalg::{svd_solve, SvdScalar, SvdSolution};
pub use moperator::{assemble_m_operator, MOperator};
pub use solve::{solve_mixed_bvp, solve_sbvp, BvpSolution, Degeneracy, Field, SolveOptions};
pub use transfer::{feedthrough, transfer_function, LinearRelation, Transfer};
pub use verify::{
    verify_node_identities, CorruptedGstar, IdentityCheck, IdentityReport, VerifyConfig,
};

use crate::boundary::BoundaryFunction;
use crate::disk::SpectrumReport;
use crate::error::{Error, Result};

/// A concrete realization of the operator node.
///
/// `State` is the main space `H`; the boundary space `E` is always the
/// truncated Fourier space of order [`Self::boundary_order`]. `A` is the
/// operator `Tf + Γφ ↦ f`; `Γ₀`, `Γ₁` are the two boundary maps with
/// `Γ₀T = 0`, `Γ₀Γ = I`, `Γ₁T = Γ*`, `Γ₁Γ = Λ`.
pub trait OperatorNode: Send + Sync {
    type State: Clone + Send + Sync;

    /// Short identifier used in reports.
    fn name(&self) -> String;

    fn boundary_order(&self) -> usize;

    fn apply_t(&self, f: &Self::State) -> Result<Self::State>;
    fn apply_g(&self, phi: &BoundaryFunction) -> Result<Self::State>;
    fn apply_gstar(&self, f: &Self::State) -> Result<BoundaryFunction>;
    fn apply_lambda(&self, phi: &BoundaryFunction) -> BoundaryFunction;
    fn trace0(&self, u: &Self::State) -> Result<BoundaryFunction>;
    fn trace1(&self, u: &Self::State) -> Result<BoundaryFunction>;

    /// `(A − λI)u`.
    fn apply_a(&self, u: &Self::State, lambda: Complex64) -> Result<Self::State>;

    /// `(I − λT)⁻¹ f`.
    fn resolvent(&self, f: &Self::State, lambda: Complex64) -> Result<Self::State>;

    /// `T(I − λT)⁻¹ f`.
    fn resolvent_t(&self, f: &Self::State, lambda: Complex64) -> Result<Self::State> {
        let g = self.resolvent(f, lambda)?;
        self.apply_t(&g)
    }

    fn spectrum_guard(&self, lambda: Complex64) -> SpectrumReport;

    fn ensure_resolvent(&self, lambda: Complex64) -> Result<()> {
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

    /// Solves `(A − λ)u = f`, `Γ₀u = φ` by a route independent of the
    /// resolvent composition, when the realization has one.
    fn direct_solve(
        &self,
        _f: &Self::State,
        _phi: &BoundaryFunction,
        _lambda: Complex64,
    ) -> Option<Result<Self::State>> {
        None
    }

    fn zero_state(&self) -> Self::State;
    fn state_norm(&self, u: &Self::State) -> f64;
    fn state_inner(&self, u: &Self::State, v: &Self::State) -> Result<Complex64>;
    /// `u + a·v`.
    fn state_axpy(&self, u: &Self::State, a: Complex64, v: &Self::State) -> Result<Self::State>;

    /// Pseudo-random smooth element with angular bandwidth `≤ bandwidth`.
    fn random_state(&self, rng: &mut dyn RngCore, bandwidth: usize) -> Self::State;
}

/// Pseudo-random boundary function with modes `|n| ≤ bandwidth`, coefficients
/// uniform in the unit square.
pub fn random_boundary(rng: &mut dyn RngCore, order: usize, bandwidth: usize) -> BoundaryFunction {
    use rand::Rng;
    let b = bandwidth.min(order) as i64;
    let modes: Vec<(i64, Complex64)> = (-b..=b)
        .map(|n| {
            let re = rng.random_range(-1.0..1.0);
            let im = rng.random_range(-1.0..1.0);
            (n, Complex64::new(re, im))
        })
        .collect();
    BoundaryFunction::from_modes(order, &modes).expect("modes within truncation")
}
