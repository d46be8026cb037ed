use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::boundary::{BoundaryFunction, CircleShift};
use crate::error::{Error, Result};

/// One factor of a boundary operator product.
#[derive(Clone, Debug)]
pub enum Factor {
    Identity,
    /// Pointwise multiplication by a boundary function.
    Mult(BoundaryFunction),
    /// `d/ds`.
    TangentialDeriv,
    /// The node's own boundary operator `Λ`.
    LambdaRef,
    /// Composition with a circle diffeomorphism, `φ ↦ φ∘α`.
    Shift(CircleShift),
}

/// A coefficient times an operator product. Factors are written in product
/// order, so the last factor acts first.
#[derive(Clone, Debug)]
pub struct Term {
    pub coeff: Complex64,
    pub factors: Vec<Factor>,
}

/// Finite sum of operator products acting on the boundary space.
///
/// Used for the coefficients `β₀, β₁` of mixed boundary conditions and
/// `α₀, α₁` of output maps. `LambdaRef` factors are resolved against the
/// node the expression is applied with.
#[derive(Clone, Debug, Default)]
pub struct BoundaryOperatorExpr {
    terms: Vec<Term>,
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

impl BoundaryOperatorExpr {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::scalar(one())
    }

    pub fn scalar(c: Complex64) -> Self {
        Self::single(c, Factor::Identity)
    }

    pub fn mult(a: BoundaryFunction) -> Self {
        Self::single(one(), Factor::Mult(a))
    }

    pub fn tangential_derivative() -> Self {
        Self::single(one(), Factor::TangentialDeriv)
    }

    pub fn lambda() -> Self {
        Self::single(one(), Factor::LambdaRef)
    }

    pub fn shift(alpha: CircleShift) -> Self {
        Self::single(one(), Factor::Shift(alpha))
    }

    pub fn single(coeff: Complex64, factor: Factor) -> Self {
        Self {
            terms: vec![Term {
                coeff,
                factors: vec![factor],
            }],
        }
    }

    pub fn from_terms(terms: Vec<Term>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// True when the expression has no terms or only zero coefficients.
    pub fn is_zero(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.coeff == Complex64::new(0.0, 0.0))
    }

    pub fn plus(mut self, other: Self) -> Self {
        self.terms.extend(other.terms);
        self
    }

    pub fn minus(self, other: Self) -> Self {
        self.plus(other.scaled(-one()))
    }

    pub fn scaled(mut self, c: Complex64) -> Self {
        for t in &mut self.terms {
            t.coeff *= c;
        }
        self
    }

    /// Operator product `self ∘ other`.
    pub fn then(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut factors = a.factors.clone();
                factors.extend(b.factors.iter().cloned());
                terms.push(Term {
                    coeff: a.coeff * b.coeff,
                    factors,
                });
            }
        }
        Self { terms }
    }

    pub fn uses_lambda(&self) -> bool {
        self.terms
            .iter()
            .any(|t| t.factors.iter().any(|f| matches!(f, Factor::LambdaRef)))
    }

    /// Applies the expression to `phi`, resolving `Λ` through `lambda_op`.
    pub fn apply<L>(&self, phi: &BoundaryFunction, lambda_op: &L) -> Result<BoundaryFunction>
    where
        L: Fn(&BoundaryFunction) -> BoundaryFunction + ?Sized,
    {
        let mut acc = BoundaryFunction::zeros(phi.order());
        for term in &self.terms {
            let mut v = phi.clone();
            for factor in term.factors.iter().rev() {
                v = match factor {
                    Factor::Identity => v,
                    Factor::Mult(a) => {
                        if a.order() != v.order() {
                            return Err(Error::TruncationMismatch {
                                left: a.order(),
                                right: v.order(),
                            });
                        }
                        a.multiply(&v)?
                    }
                    Factor::TangentialDeriv => v.tangential_derivative(),
                    Factor::LambdaRef => lambda_op(&v),
                    Factor::Shift(alpha) => v.compose_shift(alpha)?,
                };
            }
            acc = acc.axpy(term.coeff, &v)?;
        }
        Ok(acc)
    }

    /// Matrix of the expression on the modes `−N..=N`, column `j` holding the
    /// image of `e^{i(j−N)θ}`.
    pub fn matrix<L>(&self, order: usize, lambda_op: &L) -> Result<DMatrix<Complex64>>
    where
        L: Fn(&BoundaryFunction) -> BoundaryFunction + Sync + ?Sized,
    {
        use rayon::prelude::*;
        let dim = 2 * order + 1;
        let columns: Vec<Vec<Complex64>> = (0..dim)
            .into_par_iter()
            .map(|j| {
                let e = BoundaryFunction::mode(order, j as i64 - order as i64, one())?;
                Ok(self.apply(&e, lambda_op)?.into_coeffs())
            })
            .collect::<Result<_>>()?;
        Ok(DMatrix::from_fn(dim, dim, |i, j| columns[j][i]))
    }
}

impl From<Complex64> for BoundaryOperatorExpr {
    fn from(c: Complex64) -> Self {
        Self::scalar(c)
    }
}

impl From<f64> for BoundaryOperatorExpr {
    fn from(c: f64) -> Self {
        Self::scalar(Complex64::new(c, 0.0))
    }
}
