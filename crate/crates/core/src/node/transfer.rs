use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::expr::BoundaryOperatorExpr;
use super::moperator::assemble_m_operator;
use super::solve::{solve_complex, BoundarySystem};
use super::OperatorNode;
use crate::boundary::BoundaryFunction;
use crate::error::{Error, Result};

/// The graph `{((β₀ + β₁M)ψ, (α₀ + α₁M)ψ) : ψ ∈ E}` when the input map is
/// not invertible.
#[derive(Clone, Debug)]
pub struct LinearRelation {
    order: usize,
    /// `α₀ + α₁M`.
    pub output: DMatrix<Complex64>,
    /// `β₀ + β₁M`.
    pub input: DMatrix<Complex64>,
    /// Kernel of the input map.
    pub kernel: Vec<BoundaryFunction>,
    /// Orthonormal basis of the range of the input map.
    pub range: Vec<BoundaryFunction>,
    pub singular_values: Vec<f64>,
}

impl LinearRelation {
    /// The element of the relation parametrized by `psi`.
    pub fn pair(&self, psi: &BoundaryFunction) -> Result<(BoundaryFunction, BoundaryFunction)> {
        Ok((
            apply(&self.input, psi, self.order)?,
            apply(&self.output, psi, self.order)?,
        ))
    }

    /// Outputs paired with the zero input: the multi-valued part.
    pub fn multivalued_part(&self) -> Result<Vec<BoundaryFunction>> {
        self.kernel
            .iter()
            .map(|k| apply(&self.output, k, self.order))
            .collect()
    }
}

fn apply(m: &DMatrix<Complex64>, psi: &BoundaryFunction, order: usize) -> Result<BoundaryFunction> {
    if psi.order() != order {
        return Err(Error::TruncationMismatch {
            left: order,
            right: psi.order(),
        });
    }
    let v = m * DVector::from_column_slice(psi.coeffs());
    BoundaryFunction::new(order, v.as_slice().to_vec())
}

/// Input–output map of the system with input `β₀Γ₀u + β₁Γ₁u` and output
/// `α₀Γ₀u + α₁Γ₁u` on solutions of `(A − λ)u = 0`.
#[derive(Clone, Debug)]
pub enum Transfer {
    /// `(α₀ + α₁M)(β₀ + β₁M)⁻¹`.
    Operator {
        matrix: DMatrix<Complex64>,
        singular_values: Vec<f64>,
    },
    Relation(LinearRelation),
}

impl Transfer {
    pub fn matrix(&self) -> Option<&DMatrix<Complex64>> {
        match self {
            Self::Operator { matrix, .. } => Some(matrix),
            Self::Relation(_) => None,
        }
    }

    pub fn relation(&self) -> Option<&LinearRelation> {
        match self {
            Self::Operator { .. } => None,
            Self::Relation(r) => Some(r),
        }
    }

    pub fn is_operator(&self) -> bool {
        matches!(self, Self::Operator { .. })
    }

    pub fn singular_values(&self) -> &[f64] {
        match self {
            Self::Operator {
                singular_values, ..
            } => singular_values,
            Self::Relation(r) => &r.singular_values,
        }
    }
}

/// The transfer function `N(λ)`; a [`LinearRelation`] when `β₀ + β₁M(λ)` is
/// singular at tolerance `rank_tol`.
pub fn transfer_function<N: OperatorNode>(
    node: &N,
    lambda: Complex64,
    alpha0: &BoundaryOperatorExpr,
    alpha1: &BoundaryOperatorExpr,
    beta0: &BoundaryOperatorExpr,
    beta1: &BoundaryOperatorExpr,
    rank_tol: f64,
) -> Result<Transfer> {
    let m = assemble_m_operator(node, lambda)?;
    build(node, m.matrix(), alpha0, alpha1, beta0, beta1, rank_tol)
}

/// The feedthrough operator `Θ : (β₀ + β₁Λ)φ ↦ (α₀ + α₁Λ)φ`.
pub fn feedthrough<N: OperatorNode>(
    node: &N,
    alpha0: &BoundaryOperatorExpr,
    alpha1: &BoundaryOperatorExpr,
    beta0: &BoundaryOperatorExpr,
    beta1: &BoundaryOperatorExpr,
    rank_tol: f64,
) -> Result<Transfer> {
    let lambda_op = |v: &BoundaryFunction| node.apply_lambda(v);
    let m = BoundaryOperatorExpr::lambda().matrix(node.boundary_order(), &lambda_op)?;
    build(node, &m, alpha0, alpha1, beta0, beta1, rank_tol)
}

fn build<N: OperatorNode>(
    node: &N,
    m: &DMatrix<Complex64>,
    alpha0: &BoundaryOperatorExpr,
    alpha1: &BoundaryOperatorExpr,
    beta0: &BoundaryOperatorExpr,
    beta1: &BoundaryOperatorExpr,
    rank_tol: f64,
) -> Result<Transfer> {
    let order = node.boundary_order();
    let lambda_op = |v: &BoundaryFunction| node.apply_lambda(v);
    let combine =
        |c0: &BoundaryOperatorExpr, c1: &BoundaryOperatorExpr| -> Result<DMatrix<Complex64>> {
            let mut k = c0.matrix(order, &lambda_op)?;
            if !c1.is_zero() {
                k += c1.matrix(order, &lambda_op)? * m;
            }
            Ok(k)
        };
    let output = combine(alpha0, alpha1)?;
    let input = combine(beta0, beta1)?;

    let probe = solve_complex(&input, &BoundaryFunction::zeros(order), rank_tol)?;
    if probe.kernel.is_empty() {
        let svd = input.clone().svd(true, true);
        let inverse = svd
            .pseudo_inverse(0.0)
            .map_err(|e| Error::SolverFailure(e.to_string()))?;
        return Ok(Transfer::Operator {
            matrix: output * inverse,
            singular_values: probe.singular_values,
        });
    }
    let BoundarySystem {
        kernel,
        range,
        singular_values,
        ..
    } = probe;
    Ok(Transfer::Relation(LinearRelation {
        order,
        output,
        input,
        kernel,
        range,
        singular_values,
    }))
}
