//! Circle operators as Fourier multipliers: Hilbert transform, Cauchy singular
//! operator, Dirichlet-to-Neumann map, `d/ds`, and Sokhotski–Plemelj traces.

use bvpnode::{BoundaryFunction, Complex64, Side};

fn main() -> bvpnode::Result<()> {
    let order = 16;
    let phi = BoundaryFunction::from_real_fn(order, |t| (t.cos() + 0.5 * (3.0 * t).sin()).exp());

    let h = phi.hilbert_transform();
    let s = phi.cauchy_singular();
    println!(
        "‖φ‖ = {:.6}, ‖Hφ‖ = {:.6} (mean {:.6} removed)",
        phi.norm(),
        h.norm(),
        phi.coeff(0).re
    );
    println!(
        "Hφ real: {}, S²φ = φ: {:.1e}",
        h.is_real(),
        (&s.cauchy_singular() - &phi).max_abs_coeff()
    );
    println!("DtN(cos 3θ) = 3 cos 3θ: {:.1e}", {
        let c3 = BoundaryFunction::from_modes(
            order,
            &[
                (3, Complex64::new(0.5, 0.0)),
                (-3, Complex64::new(0.5, 0.0)),
            ],
        )?;
        (&c3.dtn_circle() - &c3.scale(Complex64::new(3.0, 0.0))).max_abs_coeff()
    });
    println!(
        "d/ds e^(iθ) = i e^(iθ): {}",
        BoundaryFunction::mode(order, 1, Complex64::new(1.0, 0.0))?
            .tangential_derivative()
            .coeff(1)
    );

    let (plus, minus) = phi.plemelj_traces();
    println!(
        "\nΦ⁺ − Φ⁻ = 2φ: {:.1e}",
        (&(&plus - &minus) - &phi.scale(Complex64::new(2.0, 0.0))).max_abs_coeff()
    );
    for r in [0.9, 0.99, 0.999] {
        let inside = phi.cauchy_integral_eval(Complex64::new(r, 0.0), Side::Interior)?;
        let outside = phi.cauchy_integral_eval(Complex64::new(1.0 / r, 0.0), Side::Exterior)?;
        println!(
            "  r = {r:<6} |Φ(r) − Φ⁺(1)| = {:.2e}   |Φ(1/r) − Φ⁻(1)| = {:.2e}",
            (inside - plus.eval(0.0)).norm(),
            (outside - minus.eval(0.0)).norm()
        );
    }
    Ok(())
}
