//! Assembles `M(λ) = Λ + λΓ*(I − λT)⁻¹Γ` for the disk Laplacian and compares
//! its diagonal with the Helmholtz Dirichlet-to-Neumann symbol from Bessel series.

use std::sync::Arc;

use bvpnode::bessel::helmholtz_dtn;
use bvpnode::node::{assemble_m_operator, DiskNode};
use bvpnode::{Complex64, Disk};

fn main() -> bvpnode::Result<()> {
    let node = DiskNode::dirichlet_to_neumann(Arc::new(Disk::with_defaults()));
    for lambda in [0.0, -3.0, 1.0] {
        let lambda = Complex64::new(lambda, 0.0);
        let m = assemble_m_operator(&node, lambda)?;
        println!(
            "λ = {}  (off-diagonal max {:.1e})",
            lambda.re,
            m.off_diagonal_max()
        );
        println!(
            "  {:>3}  {:>22}  {:>22}  {:>8}",
            "n", "M(λ)_nn", "Bessel", "diff"
        );
        for (n, v) in m
            .diagonal()
            .into_iter()
            .filter(|(n, _)| (0..=8).contains(n) || *n == 16)
        {
            let want = helmholtz_dtn(n, lambda);
            println!(
                "  {n:>3}  {:>22.15}  {:>22.15}  {:>8.1e}",
                v.re,
                want.re,
                (v - want).norm()
            );
        }
    }
    Ok(())
}
