//! Transfer functions of open systems built from a node: an ordinary
//! operator for the Robin mix, and a linear relation for `β = I + iH`.

use std::sync::Arc;

use bvpnode::node::{
    feedthrough, transfer_function, BoundaryOperatorExpr, BoundaryOperatorKind, DiskNode,
};
use bvpnode::{BoundaryFunction, Complex64, Disk};

fn main() -> bvpnode::Result<()> {
    let order = 8;
    let disk = Arc::new(Disk::new(order, 24)?);
    let id = BoundaryOperatorExpr::identity();
    let zero = BoundaryOperatorExpr::zero();

    // Dirichlet in, Neumann out: N(λ) = M(λ)
    let dtn = DiskNode::dirichlet_to_neumann(disk.clone());
    let t = transfer_function(
        &dtn,
        Complex64::new(-3.0, 0.0),
        &zero,
        &id,
        &id,
        &zero,
        1e-10,
    )?;
    let m = t.matrix().expect("invertible input map");
    println!(
        "Dirichlet→Neumann at λ = −3: N_00 = {:.12}, N_11 = {:.12}",
        m[(order, order)].re,
        m[(order + 1, order + 1)].re
    );

    // Λ = H with β₀ = I, β₁ = iΛ, α₀ = I, α₁ = −iΛ
    let hil = DiskNode::new(disk, BoundaryOperatorKind::Hilbert);
    let i = BoundaryOperatorExpr::scalar(Complex64::new(0.0, 1.0));
    let mi = BoundaryOperatorExpr::scalar(Complex64::new(0.0, -1.0));
    let theta = feedthrough(&hil, &id, &mi, &id, &i, 1e-10)?;
    let rel = theta.relation().expect("I + iH is singular");
    let cos = BoundaryFunction::from_modes(
        order,
        &[
            (1, Complex64::new(0.5, 0.0)),
            (-1, Complex64::new(0.5, 0.0)),
        ],
    )?;
    let (input, output) = rel.pair(&cos)?;
    println!("\nfeedthrough on cos θ:");
    println!("  input  (I + iH)cos θ: {:?}", nonzero(&input));
    println!("  output (I − iH)cos θ: {:?}", nonzero(&output));

    let kernel_modes: Vec<i64> = rel
        .kernel
        .iter()
        .map(|k| {
            k.modes()
                .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
                .unwrap()
                .0
        })
        .collect();
    println!(
        "  Ker(I + iH) has dimension {}, spanned by modes {:?}",
        rel.kernel.len(),
        kernel_modes
    );
    println!(
        "  multivalued part has {} elements",
        rel.multivalued_part()?.len()
    );
    Ok(())
}

fn nonzero(f: &BoundaryFunction) -> Vec<(i64, f64)> {
    f.modes()
        .filter(|(_, v)| v.norm() > 1e-14)
        .map(|(n, v)| (n, v.re))
        .collect()
}
