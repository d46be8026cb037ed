use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, RngCore};

use super::OperatorNode;
use crate::boundary::{BoundaryFunction, FourierMultiplier};
use crate::disk::{Disk, DiskFunction, SpectrumReport};
use crate::error::Result;

/// Choice of the boundary operator `Λ` of a disk node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryOperatorKind {
    /// `Λ = Ω`, the Dirichlet-to-Neumann map; `Γ₁` is the normal derivative.
    DirichletToNeumann,
    /// `Λ = H`.
    Hilbert,
    /// `Λ = S`.
    CauchySingular,
}

impl BoundaryOperatorKind {
    pub fn multiplier(self) -> FourierMultiplier {
        match self {
            Self::DirichletToNeumann => FourierMultiplier::dirichlet_to_neumann(),
            Self::Hilbert => FourierMultiplier::hilbert(),
            Self::CauchySingular => FourierMultiplier::cauchy_singular(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::DirichletToNeumann => "dtn",
            Self::Hilbert => "hilbert",
            Self::CauchySingular => "cauchy",
        }
    }
}

/// Operator node on the unit disk: `T` the Dirichlet solution operator, `Γ`
/// harmonic continuation, and `Λ` one of [`BoundaryOperatorKind`].
///
/// For `Λ ≠ Ω` the second boundary map is `Γ₁(Tf + Γφ) = Γ*f + Λφ`, evaluated
/// as `Γ*(Au) + ΛΓ₀u`.
#[derive(Clone, Debug)]
pub struct DiskNode {
    disk: Arc<Disk>,
    kind: BoundaryOperatorKind,
    lambda_op: FourierMultiplier,
}

impl DiskNode {
    pub fn new(disk: Arc<Disk>, kind: BoundaryOperatorKind) -> Self {
        Self {
            disk,
            kind,
            lambda_op: kind.multiplier(),
        }
    }

    pub fn dirichlet_to_neumann(disk: Arc<Disk>) -> Self {
        Self::new(disk, BoundaryOperatorKind::DirichletToNeumann)
    }

    pub fn disk(&self) -> &Arc<Disk> {
        &self.disk
    }

    pub fn kind(&self) -> BoundaryOperatorKind {
        self.kind
    }
}

impl OperatorNode for DiskNode {
    type State = DiskFunction;

    fn name(&self) -> String {
        format!(
            "disk[N={},M_r={},Λ={}]",
            self.disk.order(),
            self.disk.radial_degree(),
            self.kind.label()
        )
    }

    fn boundary_order(&self) -> usize {
        self.disk.order()
    }

    fn apply_t(&self, f: &DiskFunction) -> Result<DiskFunction> {
        self.disk.dirichlet_solve(f)
    }

    fn apply_g(&self, phi: &BoundaryFunction) -> Result<DiskFunction> {
        self.disk.poisson_extend(phi)
    }

    fn apply_gstar(&self, f: &DiskFunction) -> Result<BoundaryFunction> {
        self.disk.gstar(f)
    }

    fn apply_lambda(&self, phi: &BoundaryFunction) -> BoundaryFunction {
        self.lambda_op.apply(phi)
    }

    fn trace0(&self, u: &DiskFunction) -> Result<BoundaryFunction> {
        self.disk.trace_dirichlet(u)
    }

    fn trace1(&self, u: &DiskFunction) -> Result<BoundaryFunction> {
        match self.kind {
            BoundaryOperatorKind::DirichletToNeumann => self.disk.trace_neumann(u),
            _ => {
                let au = self.disk.laplacian_apply(u, Complex64::new(0.0, 0.0))?;
                let from_t = self.disk.gstar(&au)?;
                let from_g = self.lambda_op.apply(&self.disk.trace_dirichlet(u)?);
                Ok(&from_t + &from_g)
            }
        }
    }

    fn apply_a(&self, u: &DiskFunction, lambda: Complex64) -> Result<DiskFunction> {
        self.disk.laplacian_apply(u, lambda)
    }

    fn resolvent(&self, f: &DiskFunction, lambda: Complex64) -> Result<DiskFunction> {
        self.disk.resolvent_apply(f, lambda)
    }

    fn resolvent_t(&self, f: &DiskFunction, lambda: Complex64) -> Result<DiskFunction> {
        self.disk.helmholtz_dirichlet_solve(f, lambda)
    }

    fn spectrum_guard(&self, lambda: Complex64) -> SpectrumReport {
        self.disk.spectrum_guard(lambda)
    }

    fn direct_solve(
        &self,
        f: &DiskFunction,
        phi: &BoundaryFunction,
        lambda: Complex64,
    ) -> Option<Result<DiskFunction>> {
        Some(self.disk.solve_with_trace(Some(f), Some(phi), lambda))
    }

    fn zero_state(&self) -> DiskFunction {
        self.disk.zeros()
    }

    fn state_norm(&self, u: &DiskFunction) -> f64 {
        u.norm(self.disk.grid())
    }

    fn state_inner(&self, u: &DiskFunction, v: &DiskFunction) -> Result<Complex64> {
        u.inner(v, self.disk.grid())
    }

    fn state_axpy(&self, u: &DiskFunction, a: Complex64, v: &DiskFunction) -> Result<DiskFunction> {
        u.axpy(a, v)
    }

    /// Modes `|n| ≤ bandwidth` with profiles `r^{|n|}(c₀ + c₁r² + c₂r⁴ + c₃r⁶)`.
    fn random_state(&self, rng: &mut dyn RngCore, bandwidth: usize) -> DiskFunction {
        let b = bandwidth.min(self.disk.order()) as i64;
        let order = self.disk.order() as i64;
        let mut table = Vec::with_capacity((2 * order + 1) as usize);
        for n in -order..=order {
            let cs: Vec<Complex64> = if n.abs() <= b {
                (0..4)
                    .map(|_| {
                        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
                    })
                    .collect()
            } else {
                Vec::new()
            };
            table.push(cs);
        }
        self.disk.from_profiles(|n, r| {
            let cs = &table[(n + order) as usize];
            let r2 = r * r;
            cs.iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, c| acc * r2 + c)
                * r.powi(n.abs() as i32)
        })
    }
}
