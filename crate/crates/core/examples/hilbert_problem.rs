//! Classical Hilbert problem `a·u + b·v = g` for an analytic `w = u + iv`,
//! solved over the real field.

use std::sync::Arc;

use bvpnode::node::SolveOptions;
use bvpnode::problems::{solve_hilbert, HilbertProblem};
use bvpnode::{BoundaryFunction, Complex64, Disk};

fn main() -> bvpnode::Result<()> {
    let order = 32;
    let disk = Arc::new(Disk::with_defaults());

    // u = cos θ on the circle: w(z) = z
    let p = HilbertProblem {
        a: BoundaryFunction::constant(order, Complex64::new(1.0, 0.0)),
        b: BoundaryFunction::zeros(order),
        g: BoundaryFunction::from_modes(
            order,
            &[
                (1, Complex64::new(0.5, 0.0)),
                (-1, Complex64::new(0.5, 0.0)),
            ],
        )?,
    };
    let s = solve_hilbert(&disk, &p, &SolveOptions::real())?;
    println!("a = 1, b = 0, g = cos θ");
    for (k, t) in s.taylor.iter().take(4).enumerate() {
        println!("  w_{k} = {:+.3e} {:+.3e}i", t.re, t.im);
    }
    let z = Complex64::new(0.3, 0.4);
    println!("  w({z}) = {}", s.eval(z));

    // variable coefficients a = 2 + cos θ, b = sin θ
    let p = HilbertProblem {
        a: BoundaryFunction::from_real_fn(order, |t| 2.0 + t.cos()),
        b: BoundaryFunction::from_real_fn(order, f64::sin),
        g: BoundaryFunction::from_real_fn(order, |t| (2.0 * t).cos() + 0.5),
    };
    let s = solve_hilbert(&disk, &p, &SolveOptions::real())?;
    println!("\na = 2 + cos θ, b = sin θ, g = cos 2θ + 1/2");
    println!(
        "  rank {}/{}, boundary residual {:.1e}, pointwise {:.1e}, degenerate points {}",
        s.diagnostics.rank,
        s.diagnostics.dim,
        s.boundary_residual,
        s.pointwise_residual,
        s.degenerate_points.len()
    );
    println!("  w(0) = {}", s.eval(Complex64::new(0.0, 0.0)));
    Ok(())
}
