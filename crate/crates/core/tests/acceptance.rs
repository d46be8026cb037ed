//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; the process fails if any criterion does.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use bvpnode::bessel::{bessel_j_zeros, helmholtz_dtn};
use bvpnode::node::{
    assemble_m_operator, feedthrough, solve_sbvp, transfer_function, verify_node_identities,
    BoundaryOperatorExpr, BoundaryOperatorKind, Degeneracy, DiskNode, IdentityReport, OperatorNode,
    SolveOptions, VerifyConfig,
};
use bvpnode::problems::{
    solve_hilbert, solve_poincare, solve_riemann, solve_shifted_riemann, HilbertProblem,
    PoincareProblem, RiemannProblem,
};
use bvpnode::{BoundaryFunction, CircleShift, Complex64, Disk};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Frozen reference value of the first zero of `J₀`.
const J01: f64 = 2.404_825_557_695_773;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn default_disk() -> Arc<Disk> {
    Arc::new(Disk::with_defaults())
}

fn random_data(order: usize, bandwidth: i64, seed: u64) -> BoundaryFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modes: Vec<_> = (-bandwidth..=bandwidth)
        .map(|n| {
            (
                n,
                c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            )
        })
        .collect();
    BoundaryFunction::from_modes(order, &modes).unwrap()
}

fn random_real(order: usize, bandwidth: i64, seed: u64) -> BoundaryFunction {
    random_data(order, bandwidth, seed).real_part()
}

fn fine_grid(points: usize) -> Vec<f64> {
    (0..points)
        .map(|j| 2.0 * PI * (j as f64 + 0.5) / points as f64)
        .collect()
}

fn worst(report: &IdentityReport, prefix: &str) -> (f64, bool, usize) {
    let checks: Vec<_> = report
        .checks
        .iter()
        .filter(|c| c.identity.starts_with(prefix))
        .collect();
    let max = checks.iter().map(|c| c.max_error).fold(0.0, f64::max);
    (max, checks.iter().all(|c| c.pass), checks.len())
}

fn identity_report() -> IdentityReport {
    let node = DiskNode::dirichlet_to_neumann(default_disk());
    let config = VerifyConfig {
        lambdas: vec![c(-3.0, 0.0), c(1.0, 0.0), c(2.0, 0.5)],
        ..VerifyConfig::default()
    };
    verify_node_identities(&node, &config).unwrap()
}

fn criterion_1(report: &IdentityReport) -> Outcome {
    let names = [
        "A0T=I",
        "Gamma0Gamma=I",
        "Gamma1T=Gstar",
        "Gamma1Gamma=Lambda",
        "adjoint<Gamma phi,f>=<phi,Gstar f>",
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for name in names {
        let check = report.get(name).expect("identity present");
        pass &= check.pass;
        parts.push(format!(
            "{name} {:.1e}/{:.0e}",
            check.max_error, check.tolerance
        ));
    }
    outcome(pass, format!("20 samples: {}", parts.join(", ")))
}

fn criterion_2(report: &IdentityReport) -> Outcome {
    let (max, pass, count) = worst(report, "kernel_lemma[");
    outcome(
        pass && count == 3,
        format!("3 lambdas x 10 samples, max {max:.1e} <= 1e-8"),
    )
}

fn criterion_3(report: &IdentityReport) -> Outcome {
    let (pde, pde_ok, n1) = worst(report, "solution_formula_pde[");
    let (trace, trace_ok, n2) = worst(report, "solution_formula_trace[");
    let (direct, direct_ok, n3) = worst(report, "solution_formula_direct[");
    outcome(
        pde_ok && trace_ok && direct_ok && n1 == 3 && n2 == 3 && n3 == 3,
        format!("pde {pde:.1e} <= 1e-8, trace {trace:.1e} <= 1e-10, vs collocation {direct:.1e} <= 1e-8"),
    )
}

fn criterion_4() -> Outcome {
    let node = DiskNode::dirichlet_to_neumann(default_disk());
    let order = node.boundary_order() as i64;
    let idx = |n: i64| (n + order) as usize;
    let mut worst_bessel: f64 = 0.0;
    for lambda in [c(1.0, 0.0), c(-3.0, 0.0)] {
        let m = assemble_m_operator(&node, lambda).unwrap();
        for n in -16..=16i64 {
            for k in -16..=16i64 {
                let want = if n == k {
                    helmholtz_dtn(n, lambda)
                } else {
                    c(0.0, 0.0)
                };
                worst_bessel = worst_bessel.max((m.matrix()[(idx(n), idx(k))] - want).norm());
            }
        }
    }
    let m0 = assemble_m_operator(&node, c(0.0, 0.0)).unwrap();
    let dim = m0.dim();
    let oracle = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            c((i as i64 - order).abs() as f64, 0.0)
        } else {
            c(0.0, 0.0)
        }
    });
    let worst_zero = (m0.matrix() - oracle)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    outcome(
        worst_bessel <= 1e-8 && worst_zero <= 1e-12,
        format!("Bessel oracle |n|<=16 at lambda=1,-3: {worst_bessel:.1e} <= 1e-8; M(0) vs diag|n|: {worst_zero:.1e} <= 1e-12"),
    )
}

fn criterion_5() -> Outcome {
    let lambda = c(-3.0, 0.0);
    let norms: Vec<f64> = [16usize, 32, 64]
        .iter()
        .map(|&order| {
            let disk = Arc::new(Disk::new(order, (2 * order).max(64)).unwrap());
            let node = DiskNode::dirichlet_to_neumann(disk);
            let diff = assemble_m_operator(&node, lambda).unwrap().into_matrix()
                - assemble_m_operator(&node, c(0.0, 0.0))
                    .unwrap()
                    .into_matrix();
            diff.singular_values().max()
        })
        .collect();
    let changes: Vec<f64> = norms
        .windows(2)
        .map(|w| (w[1] - w[0]).abs() / w[0])
        .collect();
    let pass = changes.iter().all(|&r| r < 0.1);
    outcome(
        pass,
        format!(
            "||M(-3)-M(0)||_2 = {:.6} / {:.6} / {:.6}, relative changes {:.1e}, {:.1e} < 0.1",
            norms[0], norms[1], norms[2], changes[0], changes[1]
        ),
    )
}

fn criterion_6() -> Outcome {
    let order = 32;
    let disk = default_disk();
    let opts = SolveOptions::default();
    let mut notes = Vec::new();
    let mut pass = true;

    // oblique Robin: (iβ₀n + β₁|n| + γ) ψ̂(n) = ĝ(n)
    let (b0, b1, gamma) = (0.5, 1.0, 2.0);
    let g = random_real(order, 8, 11);
    let s = solve_poincare(
        &disk,
        &PoincareProblem::constant(order, b0, b1, gamma, g.clone()),
        &opts,
    )
    .unwrap();
    let err = g
        .modes()
        .map(|(n, gn)| (s.psi.coeff(n) - gn / c(b1 * n.abs() as f64 + gamma, b0 * n as f64)).norm())
        .fold(0.0, f64::max);
    pass &= err <= 1e-10 && s.degeneracy == Degeneracy::None;
    notes.push(format!("Robin {err:.1e}"));

    // Hilbert: a φ + b Hφ = g, symbol a − ib sgn(n)
    let (a, b) = (1.5, -0.7);
    let g = random_real(order, 8, 12);
    let hp = HilbertProblem {
        a: BoundaryFunction::constant(order, c(a, 0.0)),
        b: BoundaryFunction::constant(order, c(b, 0.0)),
        g: g.clone(),
    };
    let s = solve_hilbert(&disk, &hp, &SolveOptions::real()).unwrap();
    let err = g
        .modes()
        .map(|(n, gn)| (s.phi.coeff(n) - gn / c(a, -b * n.signum() as f64)).norm())
        .fold(0.0, f64::max);
    pass &= err <= 1e-10;
    notes.push(format!("Hilbert {err:.1e}"));

    // Riemann, A = 1, B = 2: φ̂(n) = ĝ(n)/(a ± b) with a = 3, b = −1
    let g = random_data(order, 8, 13);
    let rp = RiemannProblem::new(
        BoundaryFunction::constant(order, c(1.0, 0.0)),
        BoundaryFunction::constant(order, c(2.0, 0.0)),
        g.clone(),
    );
    let s = solve_riemann(&disk, &rp, &opts).unwrap();
    let err = g
        .modes()
        .map(|(n, gn)| (s.phi.coeff(n) - gn / if n >= 0 { 2.0 } else { 4.0 }).norm())
        .fold(0.0, f64::max);
    pass &= err <= 1e-10;
    notes.push(format!("Riemann {err:.1e}"));

    let one = BoundaryFunction::constant(order, c(1.0, 0.0));
    let s = solve_poincare(
        &disk,
        &PoincareProblem::constant(order, 0.0, 1.0, 0.0, one),
        &opts,
    )
    .unwrap();
    let ok = s.degeneracy == Degeneracy::Inconsistent && s.kernel.len() == 1;
    pass &= ok;
    notes.push(format!(
        "Neumann g=1: {:?}, kernel {}",
        s.degeneracy,
        s.kernel.len()
    ));

    let cos = BoundaryFunction::from_modes(order, &[(1, c(0.5, 0.0)), (-1, c(0.5, 0.0))]).unwrap();
    let s = solve_poincare(
        &disk,
        &PoincareProblem::constant(order, 1.0, 0.0, 0.0, cos),
        &opts,
    )
    .unwrap();
    let ok = s.degeneracy == Degeneracy::RankDeficient && s.kernel.len() == 1;
    pass &= ok;
    notes.push(format!(
        "d/ds: {:?}, kernel {}",
        s.degeneracy,
        s.kernel.len()
    ));

    outcome(pass, notes.join("; "))
}

fn variable_riemann(order: usize) -> RiemannProblem {
    let b = BoundaryFunction::from_modes(
        order,
        &[(0, c(2.0, 0.0)), (1, c(0.5, 0.0)), (-1, c(0.5, 0.0))],
    )
    .unwrap();
    RiemannProblem::new(
        BoundaryFunction::constant(order, c(1.0, 0.0)),
        b,
        random_data(order, 4, 7),
    )
}

fn criterion_7() -> Outcome {
    let order = 32;
    let disk = default_disk();
    let p = variable_riemann(order);
    let s = solve_riemann(&disk, &p, &SolveOptions::default()).unwrap();

    let jump = fine_grid(1024)
        .into_iter()
        .map(|t| (s.plus.eval(t) - p.b.eval(t) * s.minus.eval(t) - p.g.eval(t)).norm())
        .fold(0.0, f64::max);
    let jump_ok = jump <= 1e-8 * p.g.norm();
    let plus_ok = s.plus.modes().all(|(n, v)| n >= 0 || v == c(0.0, 0.0));
    let minus_ok = s.minus.modes().all(|(n, v)| n < 0 || v == c(0.0, 0.0));

    let mut eval_err: f64 = 0.0;
    for t in fine_grid(256) {
        let e = Complex64::from_polar(1.0, t);
        eval_err = eval_err.max((s.interior(e * 0.999).unwrap() - s.plus.eval(t)).norm());
        eval_err = eval_err.max((s.exterior(e * 1.001).unwrap() - s.minus.eval(t)).norm());
    }
    outcome(
        jump_ok && plus_ok && minus_ok && eval_err <= 1e-2,
        format!(
            "jump {jump:.1e} <= 1e-8*||g|| = {:.1e}; Phi+ n<0 zero: {plus_ok}; Phi- n>=0 zero: {minus_ok}; evaluators at r=0.999/1.001 {eval_err:.1e} <= 1e-2",
            1e-8 * p.g.norm()
        ),
    )
}

fn criterion_8() -> Outcome {
    let order = 32;
    let disk = default_disk();
    let opts = SolveOptions::default();
    let p = variable_riemann(order);
    let plain = solve_riemann(&disk, &p, &opts).unwrap();
    let same = solve_shifted_riemann(
        &disk,
        &p.clone().with_shift(CircleShift::identity(order)),
        &opts,
    )
    .unwrap();
    let identity_err = (&plain.phi - &same.phi).max_abs_coeff();

    let alpha = |t: f64| t + 0.3 * t.sin();
    let p = RiemannProblem::new(
        BoundaryFunction::constant(order, c(1.0, 0.0)),
        BoundaryFunction::constant(order, c(2.0, 0.0)),
        random_data(order, 4, 8),
    )
    .with_shift(CircleShift::from_fn(order, alpha).unwrap());
    let s = solve_shifted_riemann(&disk, &p, &opts).unwrap();
    let residual = bvpnode::boundary::angular_grid(order)
        .into_iter()
        .map(|t| {
            (p.a.eval(t) * s.plus.eval(alpha(t)) - p.b.eval(t) * s.minus.eval(t) - p.g.eval(t))
                .norm()
        })
        .fold(0.0, f64::max);
    outcome(
        identity_err <= 1e-12 && residual <= 1e-8,
        format!("identity shift vs unshifted {identity_err:.1e} <= 1e-12; theta+0.3 sin theta residual {residual:.1e} <= 1e-8"),
    )
}

fn criterion_9() -> Outcome {
    let order = 32;
    let disk = default_disk();
    let cos = BoundaryFunction::from_modes(order, &[(1, c(0.5, 0.0)), (-1, c(0.5, 0.0))]).unwrap();
    let hp = HilbertProblem {
        a: BoundaryFunction::constant(order, c(1.0, 0.0)),
        b: BoundaryFunction::zeros(order),
        g: cos.clone(),
    };
    let s = solve_hilbert(&disk, &hp, &SolveOptions::real()).unwrap();
    let taylor_err = s
        .taylor
        .iter()
        .enumerate()
        .map(|(k, t)| (t - c(if k == 1 { 1.0 } else { 0.0 }, 0.0)).norm())
        .fold(0.0, f64::max);

    let hil = DiskNode::new(disk.clone(), BoundaryOperatorKind::Hilbert);
    let id = BoundaryOperatorExpr::identity();
    let i = BoundaryOperatorExpr::scalar(c(0.0, 1.0));
    let mi = BoundaryOperatorExpr::scalar(c(0.0, -1.0));
    let theta = feedthrough(&hil, &id, &mi, &id, &i, 1e-10).unwrap();
    let (input, output) = theta.relation().unwrap().pair(&cos).unwrap();
    let e1 = BoundaryFunction::mode(order, 1, c(1.0, 0.0)).unwrap();
    let em1 = BoundaryFunction::mode(order, -1, c(1.0, 0.0)).unwrap();
    let feed_ok = input == e1 && output == em1;

    let t = transfer_function(&hil, c(0.0, 0.0), &id, &mi, &id, &i, 1e-10).unwrap();
    let kernel = &t.relation().unwrap().kernel;
    let leak = kernel
        .iter()
        .flat_map(|k| k.modes().filter(|&(n, _)| n >= 0).map(|(_, v)| v.norm()))
        .fold(0.0, f64::max);
    let kernel_ok = kernel.len() == order && leak <= 1e-14;

    outcome(
        taylor_err <= 1e-12 && feed_ok && kernel_ok,
        format!(
            "w(z)=z Taylor error {taylor_err:.1e} <= 1e-12; feedthrough e^(i theta) -> e^(-i theta) exact: {feed_ok}; Ker(I+iH) dim {} (want {order}), n>=0 leakage {leak:.1e}",
            kernel.len()
        ),
    )
}

fn criterion_10() -> Outcome {
    let j01 = bessel_j_zeros(0, 1)[0];
    let root_ok = (j01 - J01).abs() <= 1e-12;
    let node = DiskNode::dirichlet_to_neumann(default_disk());
    let eigen = c(-j01 * j01, 0.0);
    let rejected = !node.spectrum_guard(eigen).passes
        && assemble_m_operator(&node, eigen).is_err()
        && solve_sbvp(
            &node,
            eigen,
            &node.zero_state(),
            &BoundaryFunction::zeros(32),
        )
        .is_err();
    let accepted = [c(0.0, 0.0), c(1.0, 0.0)]
        .into_iter()
        .all(|l| node.spectrum_guard(l).passes && assemble_m_operator(&node, l).is_ok());
    outcome(
        root_ok && rejected && accepted,
        format!(
            "j01 = {j01:.15} (ref {J01}); -j01^2 rejected: {rejected}; 0, 1 accepted: {accepted}"
        ),
    )
}

fn run_cli(args: &[&str], cwd: &Path) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_bvpnode"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("bvpnode runs")
}

fn criterion_11() -> Outcome {
    let tmp = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for run in ["a", "b"] {
        let out = tmp.path().join(run);
        let o = run_cli(&["verify", "--out", out.to_str().unwrap()], tmp.path());
        reports.push(
            o.status
                .success()
                .then(|| std::fs::read(out.join("verify.json")).unwrap()),
        );
    }
    let verify_ok = reports[0].is_some() && reports[0] == reports[1];

    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut mismatched = Vec::new();
    for case in ["poincare_robin", "hilbert", "riemann"] {
        let dir = golden.join(case);
        let out = tmp.path().join(case);
        let o = run_cli(
            &[
                "solve",
                "--config",
                dir.join("config.json").to_str().unwrap(),
                "--out",
                out.to_str().unwrap(),
            ],
            tmp.path(),
        );
        if !o.status.success() {
            mismatched.push(format!("{case} (exit {:?})", o.status.code()));
            continue;
        }
        for entry in std::fs::read_dir(dir.join("expected")).unwrap() {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap();
            if std::fs::read(&path).ok() != std::fs::read(out.join(name)).ok() {
                mismatched.push(format!("{case}/{}", name.to_string_lossy()));
            }
        }
    }
    outcome(
        verify_ok && mismatched.is_empty(),
        format!(
            "verify reports byte-identical: {verify_ok}; golden mismatches: {}",
            if mismatched.is_empty() {
                "none".to_string()
            } else {
                mismatched.join(", ")
            }
        ),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let report = identity_report();
    let criteria: Vec<Criterion> = vec![
        ("identity suite", Box::new(|| criterion_1(&report))),
        ("kernel lemma", Box::new(|| criterion_2(&report))),
        ("solution formula", Box::new(|| criterion_3(&report))),
        ("M-operator vs Bessel oracle", Box::new(criterion_4)),
        ("M(lambda)-M(0) truncation stability", Box::new(criterion_5)),
        ("mixed-BC reduction", Box::new(criterion_6)),
        ("Riemann end-to-end", Box::new(criterion_7)),
        ("shifted Riemann", Box::new(criterion_8)),
        ("Hilbert problem", Box::new(criterion_9)),
        ("spectrum guard", Box::new(criterion_10)),
        ("CLI determinism and goldens", Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += usize::from(!o.pass);
        println!(
            "criterion {:>2} {}: {} ({})",
            k + 1,
            if o.pass { "PASS" } else { "FAIL" },
            name,
            o.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
