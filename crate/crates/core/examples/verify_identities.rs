//! Runs the operator-node identity suite on the disk realization, then on a
//! copy with a deliberately corrupted `Γ*`.

use std::sync::Arc;

use bvpnode::disk::Disk;
use bvpnode::node::{verify_node_identities, CorruptedGstar, DiskNode, VerifyConfig};

fn main() -> bvpnode::Result<()> {
    let node = DiskNode::dirichlet_to_neumann(Arc::new(Disk::with_defaults()));
    let config = VerifyConfig::default();

    let report = verify_node_identities(&node, &config)?;
    println!("{} (seed {})", report.node, report.seed);
    for c in &report.checks {
        println!(
            "  {:<40} {:>10.3e}  tol {:>7.0e}  {}",
            c.identity,
            c.max_error,
            c.tolerance,
            if c.pass { "ok" } else { "FAIL" }
        );
    }

    let corrupted = CorruptedGstar::new(node, 1.01);
    let report = verify_node_identities(&corrupted, &config)?;
    println!("\n{}", report.node);
    for c in report.failures() {
        println!("  {:<40} {:>10.3e}  FAIL", c.identity, c.max_error);
    }
    Ok(())
}
