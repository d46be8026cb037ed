use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;

use super::OperatorNode;
use crate::boundary::BoundaryFunction;
use crate::error::{Error, Result};

/// The Weyl–Titchmarsh function `M(λ) = Λ + λΓ*(I − λT)⁻¹Γ` as a matrix on
/// the modes `−N..=N`.
#[derive(Clone, Debug)]
pub struct MOperator {
    lambda: Complex64,
    order: usize,
    matrix: DMatrix<Complex64>,
}

impl MOperator {
    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Diagonal entries indexed by mode, `−N..=N`.
    pub fn diagonal(&self) -> Vec<(i64, Complex64)> {
        (0..self.dim())
            .map(|i| (i as i64 - self.order as i64, self.matrix[(i, i)]))
            .collect()
    }

    /// Largest modulus of an off-diagonal entry.
    pub fn off_diagonal_max(&self) -> f64 {
        let mut m: f64 = 0.0;
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                if i != j {
                    m = m.max(self.matrix[(i, j)].norm());
                }
            }
        }
        m
    }

    pub fn apply(&self, phi: &BoundaryFunction) -> Result<BoundaryFunction> {
        if phi.order() != self.order {
            return Err(Error::TruncationMismatch {
                left: self.order,
                right: phi.order(),
            });
        }
        let v = &self.matrix * DVector::from_column_slice(phi.coeffs());
        BoundaryFunction::new(self.order, v.as_slice().to_vec())
    }
}

/// `M(λ)ψ` computed from the node maps, without assembling a matrix.
pub(crate) fn m_apply<N: OperatorNode>(
    node: &N,
    lambda: Complex64,
    psi: &BoundaryFunction,
) -> Result<BoundaryFunction> {
    let base = node.apply_lambda(psi);
    if lambda == Complex64::new(0.0, 0.0) {
        return Ok(base);
    }
    let g = node.apply_g(psi)?;
    let r = node.resolvent(&g, lambda)?;
    let back = node.apply_gstar(&r)?;
    base.axpy(lambda, &back)
}

/// Assembles `M(λ)` column by column.
///
/// Fails with `SpectrumProximity` when `λ` is too close to the spectrum of
/// the Dirichlet realization.
pub fn assemble_m_operator<N: OperatorNode>(node: &N, lambda: Complex64) -> Result<MOperator> {
    node.ensure_resolvent(lambda)?;
    let order = node.boundary_order();
    let dim = 2 * order + 1;
    let columns: Vec<Vec<Complex64>> = (0..dim)
        .into_par_iter()
        .map(|j| {
            let e =
                BoundaryFunction::mode(order, j as i64 - order as i64, Complex64::new(1.0, 0.0))?;
            Ok(m_apply(node, lambda, &e)?.into_coeffs())
        })
        .collect::<Result<_>>()?;
    let matrix = DMatrix::from_fn(dim, dim, |i, j| columns[j][i]);
    Ok(MOperator {
        lambda,
        order,
        matrix,
    })
}
