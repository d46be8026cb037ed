//! Oblique-derivative (Poincaré) problems `β₀∂u/∂τ + β₁∂u/∂n + γu = g` for
//! harmonic `u`, including the two degenerate cases the SVD reports.

use std::sync::Arc;

use bvpnode::node::SolveOptions;
use bvpnode::problems::{solve_poincare, PoincareProblem};
use bvpnode::{BoundaryFunction, Complex64, Disk};

fn main() -> bvpnode::Result<()> {
    let order = 24;
    let disk = Arc::new(Disk::new(order, 48)?);
    let opts = SolveOptions::default();
    let cos = |k: i64| {
        BoundaryFunction::from_modes(
            order,
            &[
                (k, Complex64::new(0.5, 0.0)),
                (-k, Complex64::new(0.5, 0.0)),
            ],
        )
    };

    // Robin: ∂u/∂n + u = cos θ has u = r cos θ / 2
    let robin = PoincareProblem::constant(order, 0.0, 1.0, 1.0, cos(1)?);
    let s = solve_poincare(&disk, &robin, &opts)?;
    println!(
        "Robin: u(0.6, 0) = {:.15} (exact 0.3), residual {:.1e}",
        s.u.eval(0.6, 0.0).re,
        s.boundary_residual
    );

    // variable oblique coefficient β₀ = 0.3 sin θ
    let mut oblique = PoincareProblem::constant(order, 0.0, 1.0, 2.0, cos(2)?);
    oblique.beta0 = BoundaryFunction::from_real_fn(order, |t| 0.3 * t.sin());
    let s = solve_poincare(&disk, &oblique, &opts)?;
    println!(
        "oblique: rank {}/{}, σ_min {:.3e}, residual {:.1e}",
        s.rank,
        s.dim,
        s.singular_values.last().copied().unwrap_or(0.0),
        s.boundary_residual
    );

    // Neumann with g = 1 violates ∮g = 0
    let neumann = PoincareProblem::constant(
        order,
        0.0,
        1.0,
        0.0,
        BoundaryFunction::constant(order, Complex64::new(1.0, 0.0)),
    );
    let s = solve_poincare(&disk, &neumann, &opts)?;
    println!(
        "Neumann g = 1: {:?}, kernel dim {}, left-null residual {:.3}",
        s.degeneracy,
        s.kernel.len(),
        s.left_null_residual
    );

    // ∂u/∂τ = cos θ determines u up to a constant
    let tangential = PoincareProblem::constant(order, 1.0, 0.0, 0.0, cos(1)?);
    let s = solve_poincare(&disk, &tangential, &opts)?;
    println!(
        "d/ds u = cos θ: {:?}, kernel dim {}, kernel mode 0 = {:.3}",
        s.degeneracy,
        s.kernel.len(),
        s.kernel[0].coeff(0).norm()
    );
    Ok(())
}
