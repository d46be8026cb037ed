use num_complex::Complex64;

use super::require_real;
use crate::boundary::BoundaryFunction;
use crate::error::Result;

/// A pair `((I + iH)φ, (I − iH)φ)`: boundary values of `w = u + iv` and of
/// its conjugate `w̄`, for real `φ = u|∂D`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationPair {
    pub input: BoundaryFunction,
    pub output: BoundaryFunction,
}

/// The map `θ = (I − iH)(I + iH)⁻¹` on `(I + iH)` applied to real functions,
/// given by its real parametrization.
pub fn conjugation_map(phi: &BoundaryFunction) -> Result<ConjugationPair> {
    require_real("phi", phi)?;
    let h = phi.hilbert_transform();
    let i = Complex64::new(0.0, 1.0);
    Ok(ConjugationPair {
        input: phi.axpy(i, &h)?,
        output: phi.axpy(-i, &h)?,
    })
}

/// `θw = (I − iH)Re w`; equals `w̄` when `w` is the boundary value of an
/// analytic function with real mean.
pub fn conjugate_analytic(w: &BoundaryFunction) -> Result<BoundaryFunction> {
    Ok(conjugation_map(&w.real_part())?.output)
}

/// `‖c·θw − θ(c·w)‖`. Vanishes for real `c`; for analytic `w` with zero mean
/// it is `2|Im c|·‖w‖`.
pub fn antilinearity_defect(w: &BoundaryFunction, c: Complex64) -> Result<f64> {
    let a = conjugate_analytic(w)?.scale(c);
    let b = conjugate_analytic(&w.scale(c))?;
    Ok((&a - &b).norm())
}
