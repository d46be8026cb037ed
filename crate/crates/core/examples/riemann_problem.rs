//! Riemann problem `Φ⁺ − BΦ⁻ = g` with a variable coefficient, solved as a
//! singular integral equation for the Cauchy density `φ`.

use std::f64::consts::PI;
use std::sync::Arc;

use bvpnode::node::SolveOptions;
use bvpnode::problems::{solve_riemann, RiemannProblem};
use bvpnode::{BoundaryFunction, Complex64, Disk};

fn main() -> bvpnode::Result<()> {
    let order = 32;
    let disk = Arc::new(Disk::with_defaults());
    let p = RiemannProblem::new(
        BoundaryFunction::constant(order, Complex64::new(1.0, 0.0)),
        BoundaryFunction::from_real_fn(order, |t| 2.0 + t.cos()),
        BoundaryFunction::from_fn(order, |t| {
            Complex64::from_polar(1.0, 2.0 * t) + Complex64::from_polar(0.5, -t)
        }),
    );
    let s = solve_riemann(&disk, &p, &SolveOptions::default())?;
    println!(
        "B = 2 + cos θ: jump residual {:.1e} (relative to ‖g‖), min |B| {:.4}",
        s.jump_residual, s.min_abs_b
    );

    println!(
        "{:>6}  {:>28}  {:>28}",
        "θ", "Φ⁺(0.999e^iθ) − Φ⁺(e^iθ)", "Φ⁻(1.001e^iθ) − Φ⁻(e^iθ)"
    );
    for k in 0..6 {
        let t = 2.0 * PI * k as f64 / 6.0;
        let e = Complex64::from_polar(1.0, t);
        let di = s.interior(e * 0.999)? - s.plus.eval(t);
        let de = s.exterior(e * 1.001)? - s.minus.eval(t);
        println!("{t:>6.3}  {:>28.3e}  {:>28.3e}", di.norm(), de.norm());
    }
    println!(
        "Φ⁻ decays at infinity: |Φ⁻(1e8)| = {:.1e}",
        s.exterior(Complex64::new(1e8, 0.0))?.norm()
    );
    Ok(())
}
