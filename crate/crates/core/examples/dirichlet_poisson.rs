//! Poisson and Helmholtz Dirichlet problems on the disk through the node's
//! solution formula `u = T(I − λT)⁻¹f + (I − λT)⁻¹Γφ`.

use std::sync::Arc;

use bvpnode::node::{solve_sbvp, DiskNode};
use bvpnode::{BoundaryFunction, Complex64, Disk};

fn main() -> bvpnode::Result<()> {
    let disk = Arc::new(Disk::with_defaults());
    let node = DiskNode::dirichlet_to_neumann(disk.clone());

    // Δu = 1, u = 0 on the circle: u = (r² − 1)/4
    let one = disk.from_profiles(|n, _| {
        if n == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let s = solve_sbvp(
        &node,
        Complex64::new(0.0, 0.0),
        &one,
        &BoundaryFunction::zeros(disk.order()),
    )?;
    println!("Δu = 1, u|∂D = 0");
    for r in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let got = s.u.eval(r, 0.3).re;
        let want = (r * r - 1.0) / 4.0;
        println!(
            "  r = {r:.2}  u = {got:+.15}  exact {want:+.15}  diff {:.1e}",
            (got - want).abs()
        );
    }
    println!("  PDE residual {:.1e}", s.pde_residual);

    // (Δ + 3)u = 0, u = cos θ on the circle
    let lambda = Complex64::new(-3.0, 0.0);
    let phi = BoundaryFunction::from_modes(
        disk.order(),
        &[
            (1, Complex64::new(0.5, 0.0)),
            (-1, Complex64::new(0.5, 0.0)),
        ],
    )?;
    let s = solve_sbvp(&node, lambda, &disk.zeros(), &phi)?;
    let ratio =
        bvpnode::bessel::bessel_j(1, 3f64.sqrt() * 0.5) / bvpnode::bessel::bessel_j(1, 3f64.sqrt());
    println!("\n(Δ + 3)u = 0, u|∂D = cos θ");
    println!("  u(0.5, 0) = {:+.15}", s.u.eval(0.5, 0.0).re);
    println!("  J₁(√3/2)/J₁(√3) = {ratio:+.15}");
    println!(
        "  trace residual {:.1e}, PDE residual {:.1e}",
        s.boundary_residual, s.pde_residual
    );
    Ok(())
}
