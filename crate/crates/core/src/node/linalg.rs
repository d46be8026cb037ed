use faer::Mat;
use nalgebra::{ComplexField, DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Minimum-norm least-squares solution of `Ax = b` with rank information.
#[derive(Clone, Debug)]
pub struct SvdSolution<T: ComplexField<RealField = f64>> {
    pub x: DVector<T>,
    /// Singular values in decreasing order.
    pub singular_values: Vec<f64>,
    pub rank: usize,
    /// Orthonormal basis of the numerical kernel of `A`.
    pub kernel: Vec<DVector<T>>,
    /// Orthonormal basis of the numerical range of `A`.
    pub range: Vec<DVector<T>>,
    /// Norm of the component of `b` orthogonal to the range.
    pub left_null_residual: f64,
    pub rhs_norm: f64,
}

impl<T: ComplexField<RealField = f64>> SvdSolution<T> {
    pub fn is_full_rank(&self) -> bool {
        self.kernel.is_empty() && self.rank == self.singular_values.len()
    }

    pub fn condition_number(&self) -> f64 {
        match (self.singular_values.first(), self.singular_values.last()) {
            (Some(&max), Some(&min)) if min > 0.0 => max / min,
            _ => f64::INFINITY,
        }
    }
}

/// Relative Frobenius bound on `A − UΣVᴴ` accepted from the decomposition.
const RECOMPOSITION_TOL: f64 = 1e-12;

/// Scalars with a dense SVD backend: returns `(U, σ, V)` with `σ` nonincreasing.
pub trait SvdScalar: ComplexField<RealField = f64> + Copy {
    fn decompose(a: &DMatrix<Self>) -> Result<(DMatrix<Self>, Vec<f64>, DMatrix<Self>)>;
}

fn svd_factors<T, F>(a: &DMatrix<T>, sigma: F) -> Result<(DMatrix<T>, Vec<f64>, DMatrix<T>)>
where
    T: SvdScalar + faer::traits::ComplexField,
    F: Fn(&T) -> f64,
{
    let m = Mat::from_fn(a.nrows(), a.ncols(), |i, j| a[(i, j)]);
    let svd = m
        .svd()
        .map_err(|e| Error::SolverFailure(format!("SVD did not converge: {e:?}")))?;
    let (u, v) = (svd.U(), svd.V());
    let s = svd.S().column_vector();
    Ok((
        DMatrix::from_fn(u.nrows(), u.ncols(), |i, j| u[(i, j)]),
        (0..s.nrows()).map(|i| sigma(&s[i])).collect(),
        DMatrix::from_fn(v.nrows(), v.ncols(), |i, j| v[(i, j)]),
    ))
}

impl SvdScalar for f64 {
    fn decompose(a: &DMatrix<Self>) -> Result<(DMatrix<Self>, Vec<f64>, DMatrix<Self>)> {
        svd_factors(a, |s| *s)
    }
}

impl SvdScalar for Complex64 {
    fn decompose(a: &DMatrix<Self>) -> Result<(DMatrix<Self>, Vec<f64>, DMatrix<Self>)> {
        svd_factors(a, |s| s.re)
    }
}

/// Solves the square system `Ax = b` through the singular value decomposition, treating
/// singular values below `rank_tol·σ_max` as zero.
pub fn svd_solve<T: SvdScalar>(
    a: &DMatrix<T>,
    b: &DVector<T>,
    rank_tol: f64,
) -> Result<SvdSolution<T>> {
    if a.nrows() != b.len() {
        return Err(Error::InvalidArgument(format!(
            "matrix has {} rows but right-hand side has {} entries",
            a.nrows(),
            b.len()
        )));
    }
    if a.nrows() != a.ncols() {
        return Err(Error::InvalidArgument(format!(
            "expected a square system, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    if !a.iter().all(|z| z.clone().is_finite()) {
        return Err(Error::SolverFailure("matrix has non-finite entries".into()));
    }
    let (u, singular_values, v) = T::decompose(a)?;
    let reconstructed =
        &u * DMatrix::from_diagonal(&DVector::from_iterator(
            singular_values.len(),
            singular_values.iter().map(|&s| T::from_real(s)),
        )) * v.adjoint();
    let a_norm = a.norm();
    if (a - reconstructed).norm() > RECOMPOSITION_TOL * a_norm.max(f64::MIN_POSITIVE) {
        return Err(Error::SolverFailure(
            "SVD failed to reproduce the matrix".into(),
        ));
    }
    let sigma_max = singular_values.first().copied().unwrap_or(0.0);
    let threshold = rank_tol * sigma_max;

    let mut x = DVector::zeros(a.ncols());
    let mut range_part = DVector::zeros(a.nrows());
    let mut rank = 0;
    let mut kernel = Vec::new();
    let mut range = Vec::new();
    for (i, &sigma) in singular_values.iter().enumerate() {
        let ui = u.column(i).into_owned();
        let vi = v.column(i).into_owned();
        if sigma > threshold && sigma > 0.0 {
            rank += 1;
            let proj = ui.dotc(b);
            x += &vi * proj.unscale(sigma);
            range_part += &ui * proj;
            range.push(ui);
        } else {
            kernel.push(vi);
        }
    }
    let rhs_norm = b.norm();
    let left_null_residual = (b - range_part).norm();
    Ok(SvdSolution {
        x,
        singular_values,
        rank,
        kernel,
        range,
        left_null_residual,
        rhs_norm,
    })
}
