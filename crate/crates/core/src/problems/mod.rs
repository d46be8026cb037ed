//! The classical boundary value problems of function theory, each reduced to
//! a mixed problem for a disk node:
//!
//! * Poincaré's oblique-derivative problem, `Λ = Ω`;
//! * the Hilbert problem `au + bv = g` for `w = u + iv` analytic, `Λ = H`;
//! * the Riemann jump problem `AΦ⁺ − BΦ⁻ = g` and its shifted variant,
//!   `Λ = S`.

mod conjugation;
mod hilbert;
mod poincare;
mod riemann;


pub use conjugation::{antilinearity_defect, conjugate_analytic, conjugation_map, ConjugationPair};
pub use hilbert::{solve_hilbert, HilbertProblem, HilbertSolution};
pub use poincare::{solve_poincare, PoincareProblem};
pub use riemann::{solve_riemann, solve_shifted_riemann, RiemannProblem, RiemannSolution};

use crate::boundary::BoundaryFunction;
use crate::error::{Error, Result};

fn require_real(name: &str, f: &BoundaryFunction) -> Result<()> {
    if f.is_real() {
        Ok(())
    } else {
        Err(Error::NonRealInput(format!(
            "{name} must be real-valued (conjugate-symmetry defect {:.3e})",
            f.conjugate_symmetry_defect()
        )))
    }
}

fn require_order(order: usize, name: &str, f: &BoundaryFunction) -> Result<()> {
    if f.order() == order {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{name} has truncation order {} but the disk has {order}",
            f.order()
        )))
    }
}
