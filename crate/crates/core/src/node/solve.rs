use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::expr::BoundaryOperatorExpr;
use super::linalg::svd_solve;
use super::moperator::assemble_m_operator;
use super::OperatorNode;
use crate::boundary::BoundaryFunction;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Scalar field over which the boundary system is solved.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Field {
    #[default]
    Complex,
    /// Restrict the unknown to real-valued boundary functions. The data and
    /// the boundary coefficients must map real functions to real functions.
    Real,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    /// Singular values below `rank_tol·σ_max` count as zero.
    pub rank_tol: f64,
    /// Data with a left-null component above `inconsistency_tol·‖g‖` is
    /// reported as inconsistent.
    pub inconsistency_tol: f64,
    pub field: Field,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            rank_tol: 1e-10,
            inconsistency_tol: 1e-8,
            field: Field::Complex,
        }
    }
}

impl SolveOptions {
    pub fn real() -> Self {
        Self {
            field: Field::Real,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    None,
    /// The boundary operator has a kernel; the minimum-norm solution is returned.
    RankDeficient,
    /// Rank deficient and the data is not in the range; the least-squares
    /// solution is returned.
    Inconsistent,
}

/// Solution of a boundary value problem for an operator node.
#[derive(Clone, Debug)]
pub struct BvpSolution<S> {
    pub u: S,
    /// Dirichlet trace `Γ₀u` of the solution.
    pub psi: BoundaryFunction,
    /// `‖(A − λ)u − f‖ / ‖f‖` (absolute when `f = 0`).
    pub pde_residual: f64,
    /// Relative residual of the boundary condition.
    pub boundary_residual: f64,
    pub rank: usize,
    pub dim: usize,
    pub singular_values: Vec<f64>,
    /// Basis of the kernel of the boundary operator, as boundary functions.
    pub kernel: Vec<BoundaryFunction>,
    /// Component of the data outside the range, relative to its norm.
    pub left_null_residual: f64,
    pub degeneracy: Degeneracy,
}

impl<S> BvpSolution<S> {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }

    pub fn is_consistent(&self) -> bool {
        self.degeneracy != Degeneracy::Inconsistent
    }
}

fn relative(err: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        err / scale
    } else {
        err
    }
}

fn check_order<N: OperatorNode>(node: &N, phi: &BoundaryFunction) -> Result<()> {
    if phi.order() != node.boundary_order() {
        return Err(Error::TruncationMismatch {
            left: node.boundary_order(),
            right: phi.order(),
        });
    }
    Ok(())
}

/// `u = T(I − λT)⁻¹f + (I − λT)⁻¹Γφ`.
fn sbvp_state<N: OperatorNode>(
    node: &N,
    lambda: Complex64,
    f: &N::State,
    phi: &BoundaryFunction,
) -> Result<N::State> {
    let g = node.apply_g(phi)?;
    let harmonic = if lambda == ZERO {
        g
    } else {
        node.resolvent(&g, lambda)?
    };
    if node.state_norm(f) == 0.0 {
        return Ok(harmonic);
    }
    let particular = node.resolvent_t(f, lambda)?;
    node.state_axpy(&particular, Complex64::new(1.0, 0.0), &harmonic)
}

fn pde_residual<N: OperatorNode>(
    node: &N,
    lambda: Complex64,
    u: &N::State,
    f: &N::State,
) -> Result<f64> {
    let au = node.apply_a(u, lambda)?;
    let diff = node.state_axpy(&au, Complex64::new(-1.0, 0.0), f)?;
    Ok(relative(node.state_norm(&diff), node.state_norm(f)))
}

/// Solves `(A − λ)u = f`, `Γ₀u = φ` by the resolvent formula.
pub fn solve_sbvp<N: OperatorNode>(
    node: &N,
    lambda: Complex64,
    f: &N::State,
    phi: &BoundaryFunction,
) -> Result<BvpSolution<N::State>> {
    check_order(node, phi)?;
    node.ensure_resolvent(lambda)?;
    let u = sbvp_state(node, lambda, f, phi)?;
    let trace = node.trace0(&u)?;
    let boundary_residual = relative((&trace - phi).norm(), phi.norm());
    let dim = phi.len();
    Ok(BvpSolution {
        pde_residual: pde_residual(node, lambda, &u, f)?,
        u,
        psi: phi.clone(),
        boundary_residual,
        rank: dim,
        dim,
        singular_values: Vec::new(),
        kernel: Vec::new(),
        left_null_residual: 0.0,
        degeneracy: Degeneracy::None,
    })
}

/// Solves `(A − λ)u = f`, `β₀Γ₀u + β₁Γ₁u = φ`.
///
/// The boundary system `(β₀ + β₁M(λ))ψ = φ − β₁Γ*(I − λT)⁻¹f` is solved by
/// SVD; rank deficiency and inconsistency are reported in the result rather
/// than raised.
pub fn solve_mixed_bvp<N: OperatorNode>(
    node: &N,
    lambda: Complex64,
    f: &N::State,
    phi: &BoundaryFunction,
    beta0: &BoundaryOperatorExpr,
    beta1: &BoundaryOperatorExpr,
    opts: &SolveOptions,
) -> Result<BvpSolution<N::State>> {
    check_order(node, phi)?;
    node.ensure_resolvent(lambda)?;
    let order = node.boundary_order();
    let lambda_op = |v: &BoundaryFunction| node.apply_lambda(v);

    let mut k = beta0.matrix(order, &lambda_op)?;
    let mut g = phi.clone();
    if !beta1.is_zero() {
        let m = assemble_m_operator(node, lambda)?;
        let b1 = beta1.matrix(order, &lambda_op)?;
        k += &b1 * m.matrix();
        if node.state_norm(f) > 0.0 {
            let rf = if lambda == ZERO {
                f.clone()
            } else {
                node.resolvent(f, lambda)?
            };
            let back = node.apply_gstar(&rf)?;
            g = &g - &beta1.apply(&back, &lambda_op)?;
        }
    }

    let system = match opts.field {
        Field::Complex => solve_complex(&k, &g, opts.rank_tol)?,
        Field::Real => solve_real(&k, &g, opts.rank_tol)?,
    };

    let u = sbvp_state(node, lambda, f, &system.psi)?;
    let t0 = node.trace0(&u)?;
    let mut lhs = beta0.apply(&t0, &lambda_op)?;
    if !beta1.is_zero() {
        let t1 = node.trace1(&u)?;
        lhs = &lhs + &beta1.apply(&t1, &lambda_op)?;
    }
    let boundary_residual = relative((&lhs - phi).norm(), phi.norm());

    let g_norm = system.rhs_norm;
    let left_null_residual = relative(system.left_null_residual, g_norm);
    let degeneracy = if system.kernel.is_empty() {
        Degeneracy::None
    } else if system.left_null_residual > opts.inconsistency_tol * g_norm {
        Degeneracy::Inconsistent
    } else {
        Degeneracy::RankDeficient
    };

    Ok(BvpSolution {
        pde_residual: pde_residual(node, lambda, &u, f)?,
        u,
        psi: t0,
        boundary_residual,
        rank: system.rank,
        dim: g.len(),
        singular_values: system.singular_values,
        kernel: system.kernel,
        left_null_residual,
        degeneracy,
    })
}

pub(crate) struct BoundarySystem {
    pub psi: BoundaryFunction,
    pub rank: usize,
    pub singular_values: Vec<f64>,
    pub kernel: Vec<BoundaryFunction>,
    pub range: Vec<BoundaryFunction>,
    pub left_null_residual: f64,
    pub rhs_norm: f64,
}

fn to_boundary(order: usize, v: &DVector<Complex64>) -> BoundaryFunction {
    BoundaryFunction::from_coeffs_unchecked(order, v.as_slice().to_vec())
}

pub(crate) fn solve_complex(
    k: &DMatrix<Complex64>,
    g: &BoundaryFunction,
    rank_tol: f64,
) -> Result<BoundarySystem> {
    let order = g.order();
    let s = svd_solve(k, &DVector::from_column_slice(g.coeffs()), rank_tol)?;
    Ok(BoundarySystem {
        psi: to_boundary(order, &s.x),
        rank: s.rank,
        kernel: s.kernel.iter().map(|v| to_boundary(order, v)).collect(),
        range: s.range.iter().map(|v| to_boundary(order, v)).collect(),
        singular_values: s.singular_values,
        left_null_residual: s.left_null_residual,
        rhs_norm: s.rhs_norm,
    })
}

/// Unitary map from real coordinates to Fourier coefficients of real
/// functions: `1`, `(e_m + e_{−m})/√2`, `i(e_m − e_{−m})/√2`.
fn real_basis(order: usize) -> DMatrix<Complex64> {
    let dim = 2 * order + 1;
    let mut q = DMatrix::zeros(dim, dim);
    let n = order;
    q[(n, 0)] = Complex64::new(1.0, 0.0);
    for m in 1..=order {
        let (pos, neg) = (n + m, n - m);
        q[(pos, 2 * m - 1)] = Complex64::new(FRAC_1_SQRT_2, 0.0);
        q[(neg, 2 * m - 1)] = Complex64::new(FRAC_1_SQRT_2, 0.0);
        q[(pos, 2 * m)] = Complex64::new(0.0, FRAC_1_SQRT_2);
        q[(neg, 2 * m)] = Complex64::new(0.0, -FRAC_1_SQRT_2);
    }
    q
}

fn real_to_boundary(order: usize, q: &DMatrix<Complex64>, x: &DVector<f64>) -> BoundaryFunction {
    let xc = x.map(|v| Complex64::new(v, 0.0));
    to_boundary(order, &(q * xc))
}

pub(crate) fn solve_real(
    k: &DMatrix<Complex64>,
    g: &BoundaryFunction,
    rank_tol: f64,
) -> Result<BoundarySystem> {
    let order = g.order();
    if !g.is_real() {
        return Err(Error::NonRealInput(
            "boundary data must be real-valued for a real-field solve".into(),
        ));
    }
    let q = real_basis(order);
    let r = q.adjoint() * k * &q;
    let imag = r.map(|z| z.im).norm();
    let scale = r.map(|z| z.re).norm();
    if imag > 1e-10 * scale.max(1.0) {
        return Err(Error::NonRealInput(
            "boundary coefficients do not map real functions to real functions".into(),
        ));
    }
    let rr = r.map(|z| z.re);
    let rhs = (q.adjoint() * DVector::from_column_slice(g.coeffs())).map(|z| z.re);
    let s = svd_solve(&rr, &rhs, rank_tol)?;
    Ok(BoundarySystem {
        psi: real_to_boundary(order, &q, &s.x),
        rank: s.rank,
        kernel: s
            .kernel
            .iter()
            .map(|v| real_to_boundary(order, &q, v))
            .collect(),
        range: s
            .range
            .iter()
            .map(|v| real_to_boundary(order, &q, v))
            .collect(),
        singular_values: s.singular_values,
        left_null_residual: s.left_null_residual,
        rhs_norm: s.rhs_norm,
    })
}
