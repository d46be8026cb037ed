use std::sync::Arc;

use num_complex::Complex64;

use super::*;
use crate::bessel::helmholtz_dtn;
use crate::boundary::BoundaryFunction;
use crate::disk::Disk;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn disk(order: usize, degree: usize) -> Arc<Disk> {
    Arc::new(Disk::new(order, degree).unwrap())
}

#[test]
fn m_operator_at_zero_is_dtn() {
    let node = DiskNode::dirichlet_to_neumann(disk(8, 24));
    let m = assemble_m_operator(&node, c(0.0, 0.0)).unwrap();
    for (n, d) in m.diagonal() {
        assert!((d - c(n.abs() as f64, 0.0)).norm() < 1e-14);
    }
    assert_eq!(m.off_diagonal_max(), 0.0);
}

#[test]
fn m_operator_matches_bessel_dtn() {
    let node = DiskNode::dirichlet_to_neumann(disk(8, 40));
    for (lambda, first) in [(1.0, 0.4463899658965345), (-3.0, -2.644898368901498)] {
        let m = assemble_m_operator(&node, c(lambda, 0.0)).unwrap();
        assert!((m.matrix()[(8, 8)] - c(first, 0.0)).norm() < 1e-10);
        for (n, d) in m.diagonal() {
            let want = helmholtz_dtn(n, c(lambda, 0.0));
            assert!((d - want).norm() < 1e-10, "n={n} λ={lambda}: {d} vs {want}");
        }
        assert!(m.off_diagonal_max() < 1e-12);
    }
}

#[test]
fn m_operator_rejects_eigenvalue() {
    let node = DiskNode::dirichlet_to_neumann(disk(4, 24));
    let j = 2.404825557695773_f64;
    let err = assemble_m_operator(&node, c(-j * j, 0.0)).unwrap_err();
    assert!(matches!(err, crate::Error::SpectrumProximity { .. }));
}

#[test]
fn sbvp_closed_forms() {
    let d = disk(6, 24);
    let node = DiskNode::dirichlet_to_neumann(d.clone());
    let one = d.from_profiles(|n, _| if n == 0 { c(1.0, 0.0) } else { c(0.0, 0.0) });
    let s = solve_sbvp(&node, c(0.0, 0.0), &one, &BoundaryFunction::zeros(6)).unwrap();
    for r in [0.0, 0.3, 0.8] {
        assert!((s.u.eval(r, 0.7) - c((r * r - 1.0) / 4.0, 0.0)).norm() < 1e-13);
    }
    assert!(s.is_unique());

    let e1 = BoundaryFunction::mode(6, 1, c(1.0, 0.0)).unwrap();
    let s = solve_sbvp(&node, c(0.0, 0.0), &d.zeros(), &e1).unwrap();
    let z = Complex64::from_polar(0.6, 1.1);
    assert!((s.u.eval(0.6, 1.1) - z).norm() < 1e-14);
}

#[test]
fn dirichlet_mixed_reduces_to_sbvp() {
    let d = disk(6, 24);
    let node = DiskNode::dirichlet_to_neumann(d.clone());
    let f = d.from_profiles(|n, r| c(r * r, 0.5) * r.powi(n.abs() as i32) / (1.0 + n.abs() as f64));
    let phi = BoundaryFunction::from_fn(6, |t| c(t.cos(), (2.0 * t).sin()));
    let lambda = c(-3.0, 0.0);
    let a = solve_sbvp(&node, lambda, &f, &phi).unwrap();
    let b = solve_mixed_bvp(
        &node,
        lambda,
        &f,
        &phi,
        &BoundaryOperatorExpr::identity(),
        &BoundaryOperatorExpr::zero(),
        &SolveOptions::default(),
    )
    .unwrap();
    assert!((&a.u - &b.u).max_abs_coeff() < 1e-12);
    assert!(b.pde_residual < 1e-8 && b.boundary_residual < 1e-10);
}

#[test]
fn robin_mode_one() {
    let d = disk(6, 24);
    let node = DiskNode::dirichlet_to_neumann(d.clone());
    let phi = BoundaryFunction::mode(6, 1, c(1.0, 0.0)).unwrap();
    let s = solve_mixed_bvp(
        &node,
        c(0.0, 0.0),
        &d.zeros(),
        &phi,
        &BoundaryOperatorExpr::mult(BoundaryFunction::constant(6, c(1.0, 0.0))),
        &BoundaryOperatorExpr::identity(),
        &SolveOptions::default(),
    )
    .unwrap();
    assert!((&s.psi - &phi.scale(c(0.5, 0.0))).max_abs_coeff() < 1e-13);
    assert!((s.u.eval(0.5, 0.3) - Complex64::from_polar(0.25, 0.3)).norm() < 1e-13);
    assert_eq!(s.degeneracy, Degeneracy::None);
    assert!(s.boundary_residual < 1e-12);
}

#[test]
fn neumann_constant_data_is_inconsistent() {
    let d = disk(6, 24);
    let node = DiskNode::dirichlet_to_neumann(d.clone());
    let phi = BoundaryFunction::constant(6, c(1.0, 0.0));
    let s = solve_mixed_bvp(
        &node,
        c(0.0, 0.0),
        &d.zeros(),
        &phi,
        &BoundaryOperatorExpr::zero(),
        &BoundaryOperatorExpr::identity(),
        &SolveOptions::default(),
    )
    .unwrap();
    assert_eq!(s.rank, s.dim - 1);
    assert_eq!(s.kernel.len(), 1);
    let k = &s.kernel[0];
    assert!((k.coeff(0).norm() - 1.0).abs() < 1e-12);
    assert_eq!(s.degeneracy, Degeneracy::Inconsistent);
    assert!(!s.is_unique());
}

#[test]
fn transfer_examples() {
    let d = disk(5, 24);
    let dtn = DiskNode::dirichlet_to_neumann(d.clone());
    let id = BoundaryOperatorExpr::identity();
    let zero = BoundaryOperatorExpr::zero();
    let t = transfer_function(&dtn, c(0.0, 0.0), &id, &zero, &id, &zero, 1e-10).unwrap();
    let m = t.matrix().unwrap();
    assert!((m - nalgebra::DMatrix::<Complex64>::identity(11, 11)).norm() < 1e-14);

    let t = transfer_function(&dtn, c(0.0, 0.0), &zero, &id, &id, &zero, 1e-10).unwrap();
    let m = t.matrix().unwrap();
    for i in 0..11 {
        assert!((m[(i, i)] - c((i as f64 - 5.0).abs(), 0.0)).norm() < 1e-14);
    }

    let hil = DiskNode::new(d, BoundaryOperatorKind::Hilbert);
    let i = BoundaryOperatorExpr::scalar(c(0.0, 1.0));
    let mi = BoundaryOperatorExpr::scalar(c(0.0, -1.0));
    let t = transfer_function(&hil, c(0.0, 0.0), &id, &mi, &id, &i, 1e-10).unwrap();
    let rel = t.relation().expect("singular input map");
    assert_eq!(rel.kernel.len(), 5);
    for k in &rel.kernel {
        for (n, v) in k.modes() {
            if n >= 0 {
                assert!(v.norm() < 1e-14);
            }
        }
    }
}

#[test]
fn feedthrough_realizes_conjugation() {
    let hil = DiskNode::new(disk(5, 16), BoundaryOperatorKind::Hilbert);
    let id = BoundaryOperatorExpr::identity();
    let t = feedthrough(
        &hil,
        &id,
        &BoundaryOperatorExpr::scalar(c(0.0, -1.0)),
        &id,
        &BoundaryOperatorExpr::scalar(c(0.0, 1.0)),
        1e-10,
    )
    .unwrap();
    let rel = t.relation().unwrap();
    let cos = BoundaryFunction::from_real_fn(5, f64::cos);
    let (input, output) = rel.pair(&cos).unwrap();
    let e1 = BoundaryFunction::mode(5, 1, c(1.0, 0.0)).unwrap();
    let em1 = BoundaryFunction::mode(5, -1, c(1.0, 0.0)).unwrap();
    assert!((&input - &e1).max_abs_coeff() < 1e-15);
    assert!((&output - &em1).max_abs_coeff() < 1e-15);

    let dtn = DiskNode::dirichlet_to_neumann(disk(5, 16));
    let t = feedthrough(
        &dtn,
        &BoundaryOperatorExpr::zero(),
        &id,
        &id,
        &BoundaryOperatorExpr::zero(),
        1e-10,
    )
    .unwrap();
    assert_eq!(t.matrix().unwrap()[(0, 0)], c(5.0, 0.0));
}

#[test]
fn identity_suite_passes_and_detects_fault() {
    let node = DiskNode::dirichlet_to_neumann(disk(16, 48));
    let config = VerifyConfig {
        samples: 6,
        lambda_samples: 3,
        ..VerifyConfig::default()
    };
    let report = verify_node_identities(&node, &config).unwrap();
    for check in &report.checks {
        assert!(check.pass, "{check:?}");
    }
    let bad = CorruptedGstar::new(node, 1.01);
    let report = verify_node_identities(&bad, &config).unwrap();
    let g1t = report.get("Gamma1T=Gstar").unwrap();
    assert!(!g1t.pass);
    assert!(
        (g1t.max_error - 0.01 / 1.01).abs() < 1e-3,
        "{}",
        g1t.max_error
    );
}

#[test]
fn homogeneous_problem_has_zero_solution() {
    let d = disk(8, 32);
    let node = DiskNode::dirichlet_to_neumann(d.clone());
    let s = solve_sbvp(&node, c(-3.0, 0.0), &d.zeros(), &BoundaryFunction::zeros(8)).unwrap();
    assert!(node.state_norm(&s.u) <= 1e-10);
}
