use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use super::config::{Format, ProblemConfig, ProblemKind};
use super::json::{
    boundary_triples, complex_pair, csv_rows, fmt_f64, to_json_string, DiskFunctionJson,
};
use super::{write_atomic, CliError, EXIT_OK, EXIT_SOLVER};
use crate::bessel::helmholtz_dtn;
use crate::boundary::{BoundaryFunction, Side};
use crate::disk::{polar_rows, Disk, DiskFunction};
use crate::node::{
    assemble_m_operator, solve_mixed_bvp, solve_sbvp, verify_node_identities, BoundaryOperatorKind,
    BvpSolution, CorruptedGstar, Degeneracy, DiskNode, IdentityCheck, IdentityReport,
};
use crate::problems::{
    solve_hilbert, solve_poincare, solve_riemann, solve_shifted_riemann, HilbertProblem,
    PoincareProblem, RiemannProblem,
};

/// Tolerance of the M-operator diagonal against the Bessel-series DtN map.
const ORACLE_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEntry {
    pub name: String,
    pub residuals: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degeneracy: Option<String>,
    pub pass: bool,
}

/// Outcome of a command. Run timing is printed by the binary, not stored,
/// so that artifacts stay byte-identical across runs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub kind: String,
    pub seed: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub entries: Vec<ReportEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<IdentityCheck>>,
    pub config: ProblemConfig,
    /// Files written, relative to the output directory.
    #[serde(skip)]
    pub artifacts: Vec<PathBuf>,
}

impl RunReport {
    fn new(command: &str, config: &ProblemConfig) -> Self {
        Self {
            command: command.into(),
            kind: config.kind.label().into(),
            seed: config.seed,
            pass: true,
            entries: Vec::new(),
            identities: None,
            config: config.clone(),
            artifacts: Vec::new(),
        }
    }

    fn push(&mut self, entry: ReportEntry) {
        self.pass &= entry.pass;
        self.entries.push(entry);
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            EXIT_OK
        } else {
            EXIT_SOLVER
        }
    }
}

fn degeneracy_label(d: Degeneracy) -> &'static str {
    match d {
        Degeneracy::None => "none",
        Degeneracy::RankDeficient => "rank_deficient",
        Degeneracy::Inconsistent => "inconsistent",
    }
}

fn bvp_entry<S>(name: &str, s: &BvpSolution<S>, fail_on_degenerate: bool) -> ReportEntry {
    let mut residuals = BTreeMap::new();
    residuals.insert("pde_residual".into(), s.pde_residual);
    residuals.insert("boundary_residual".into(), s.boundary_residual);
    residuals.insert("left_null_residual".into(), s.left_null_residual);
    ReportEntry {
        name: name.into(),
        residuals,
        rank: Some(s.rank),
        kernel_dim: Some(s.kernel.len()),
        degeneracy: Some(degeneracy_label(s.degeneracy).into()),
        pass: !(fail_on_degenerate && s.degeneracy != Degeneracy::None),
    }
}

#[derive(Serialize)]
struct Header<'a> {
    schema: u32,
    kind: &'a str,
    #[serde(rename = "N")]
    order: usize,
    #[serde(rename = "M_r")]
    radial_degree: usize,
    lambda: [f64; 2],
}

type Triples = Vec<(i64, f64, f64)>;

#[derive(Serialize)]
#[serde(untagged)]
enum Densities {
    Bvp {
        psi: Triples,
        u: DiskFunctionJson,
        kernel: Vec<Triples>,
        singular_values: Vec<f64>,
    },
    Hilbert {
        phi: Triples,
        conjugate: Triples,
        taylor: Vec<[f64; 2]>,
        u: DiskFunctionJson,
        v: DiskFunctionJson,
        kernel: Vec<Triples>,
        degenerate_points: Vec<f64>,
    },
    Riemann {
        phi: Triples,
        plus: Triples,
        minus: Triples,
        kernel: Vec<Triples>,
        min_abs_b: f64,
    },
}

#[derive(Serialize)]
struct SolutionArtifact<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    solution: Densities,
    report: &'a RunReport,
}

fn triples_list(fs: &[BoundaryFunction]) -> Vec<Triples> {
    fs.iter().map(boundary_triples).collect()
}

fn field_csv(rows: Vec<(f64, f64, Complex64)>) -> String {
    csv_rows(
        "r,theta,re,im",
        rows.into_iter()
            .map(|(r, t, z)| [r, t, z.re, z.im].into_iter().map(fmt_f64).collect()),
    )
}

fn bvp_densities(s: &BvpSolution<DiskFunction>) -> Densities {
    Densities::Bvp {
        psi: boundary_triples(&s.psi),
        u: DiskFunctionJson::from_disk_function(&s.u),
        kernel: triples_list(&s.kernel),
        singular_values: s.singular_values.clone(),
    }
}

/// Runs a `solve` config and writes `solution.json`, `field.csv` and, for
/// Riemann problems, `exterior.csv` into `out`.
pub fn run_solve(config: &ProblemConfig, out: &Path) -> Result<RunReport, CliError> {
    config.validate()?;
    if !config.kind.is_solve() {
        return Err(CliError::Config(format!(
            "kind {} is not a solve problem",
            config.kind.label()
        )));
    }
    let d = config.discretization;
    let disk = Arc::new(Disk::new(d.order, d.radial_degree)?);
    let lambda = config.lambda();
    let opts = config.solve_options();
    let fail = config.fail_on_degenerate;
    let (n_r, n_t) = config.output.polar_grid;
    let mut report = RunReport::new("solve", config);

    let (densities, field, exterior) = match config.kind {
        ProblemKind::Dirichlet | ProblemKind::Sbvp => {
            let node = DiskNode::dirichlet_to_neumann(disk.clone());
            let f = config.source(&disk)?;
            let s = solve_sbvp(&node, lambda, &f, &config.boundary_function("phi")?)?;
            report.push(bvp_entry(config.kind.label(), &s, fail));
            (bvp_densities(&s), disk.polar_samples(&s.u, n_r, n_t), None)
        }
        ProblemKind::Mixed => {
            let node = DiskNode::new(disk.clone(), config.boundary_operator.kind());
            let f = config.source(&disk)?;
            let (beta0, beta1) = config.operators()?;
            let phi = config.boundary_function("phi")?;
            let s = solve_mixed_bvp(&node, lambda, &f, &phi, &beta0, &beta1, &opts)?;
            report.push(bvp_entry("mixed", &s, fail));
            (bvp_densities(&s), disk.polar_samples(&s.u, n_r, n_t), None)
        }
        ProblemKind::Poincare => {
            let p = PoincareProblem {
                beta0: config.boundary_function("beta0")?,
                beta1: config.boundary_function("beta1")?,
                gamma: config.boundary_function("gamma")?,
                g: config.boundary_function("g")?,
                lambda,
                f: config
                    .source
                    .as_ref()
                    .map(|_| config.source(&disk))
                    .transpose()?,
            };
            let s = solve_poincare(&disk, &p, &opts)?;
            report.push(bvp_entry("poincare", &s, fail));
            (bvp_densities(&s), disk.polar_samples(&s.u, n_r, n_t), None)
        }
        ProblemKind::Hilbert => {
            let p = HilbertProblem {
                a: config.boundary_function("a")?,
                b: config.boundary_function("b")?,
                g: config.boundary_function("g")?,
            };
            let s = solve_hilbert(&disk, &p, &opts)?;
            let mut entry = bvp_entry("hilbert", &s.diagnostics, fail);
            entry
                .residuals
                .insert("boundary_residual".into(), s.boundary_residual);
            entry
                .residuals
                .insert("pointwise_residual".into(), s.pointwise_residual);
            report.push(entry);
            let field = polar_rows(n_r, n_t, 0.0, 1.0, |r, t| {
                s.eval(Complex64::from_polar(r, t))
            });
            let densities = Densities::Hilbert {
                phi: boundary_triples(&s.phi),
                conjugate: boundary_triples(&s.conjugate),
                taylor: s.taylor.iter().map(|&z| complex_pair(z)).collect(),
                u: DiskFunctionJson::from_disk_function(&s.u),
                v: DiskFunctionJson::from_disk_function(&s.v),
                kernel: triples_list(&s.diagnostics.kernel),
                degenerate_points: s.degenerate_points.clone(),
            };
            (densities, field, None)
        }
        ProblemKind::Riemann | ProblemKind::RiemannShifted => {
            let mut p = RiemannProblem::new(
                config.boundary_function("A")?,
                config.boundary_function("B")?,
                config.boundary_function("g")?,
            );
            let s = if config.kind == ProblemKind::RiemannShifted {
                p = p.with_shift(config.circle_shift()?);
                solve_shifted_riemann(&disk, &p, &opts)?
            } else {
                solve_riemann(&disk, &p, &opts)?
            };
            let mut entry = bvp_entry(config.kind.label(), &s.diagnostics, fail);
            entry
                .residuals
                .insert("jump_residual".into(), s.jump_residual);
            report.push(entry);
            let field = polar_rows(n_r, n_t, 0.0, 1.0, |r, t| {
                if r < 1.0 {
                    s.phi
                        .cauchy_integral_eval(Complex64::from_polar(r, t), Side::Interior)
                        .expect("interior point")
                } else {
                    s.plus.eval(t)
                }
            });
            let step = 1.0 / n_r as f64;
            let exterior = polar_rows(n_r, n_t, 1.0 + step, 2.0, |r, t| {
                s.phi
                    .cauchy_integral_eval(Complex64::from_polar(r, t), Side::Exterior)
                    .expect("exterior point")
            });
            let densities = Densities::Riemann {
                phi: boundary_triples(&s.phi),
                plus: boundary_triples(&s.plus),
                minus: boundary_triples(&s.minus),
                kernel: triples_list(&s.diagnostics.kernel),
                min_abs_b: s.min_abs_b,
            };
            (densities, field, Some(exterior))
        }
        ProblemKind::Moperator | ProblemKind::Verify => unreachable!("rejected above"),
    };

    if config.output.wants(Format::Json) {
        let artifact = SolutionArtifact {
            header: Header {
                schema: config.schema,
                kind: config.kind.label(),
                order: d.order,
                radial_degree: d.radial_degree,
                lambda: config.lambda,
            },
            solution: densities,
            report: &report,
        };
        let text = to_json_string(&artifact);
        report
            .artifacts
            .push(write_atomic(out, "solution.json", &text)?);
    }
    if config.output.wants(Format::Csv) {
        report
            .artifacts
            .push(write_atomic(out, "field.csv", &field_csv(field))?);
        if let Some(rows) = exterior {
            report
                .artifacts
                .push(write_atomic(out, "exterior.csv", &field_csv(rows))?);
        }
    }
    Ok(report)
}

fn run_identities(config: &ProblemConfig) -> Result<IdentityReport, CliError> {
    let d = config.discretization;
    let disk = Arc::new(Disk::new(d.order, d.radial_degree)?);
    let node = DiskNode::new(disk, config.boundary_operator.kind());
    let vc = config.verify_config();
    let report = if config.verify.corrupt_gstar {
        verify_node_identities(&CorruptedGstar::new(node, 1.01), &vc)?
    } else {
        verify_node_identities(&node, &vc)?
    };
    Ok(report)
}

/// Runs the identity suite and writes `verify.json` into `out`.
pub fn run_verify(config: &ProblemConfig, out: &Path) -> Result<RunReport, CliError> {
    config.validate()?;
    if config.kind != ProblemKind::Verify {
        return Err(CliError::Config(format!(
            "verify needs kind verify, got {}",
            config.kind.label()
        )));
    }
    let identities = run_identities(config)?;
    let mut report = RunReport::new("verify", config);
    report.pass = identities.all_pass();
    report.identities = Some(identities.checks);
    let text = to_json_string(&report);
    report
        .artifacts
        .push(write_atomic(out, "verify.json", &text)?);
    Ok(report)
}

#[derive(Serialize)]
struct MOperatorArtifact {
    lambda: [f64; 2],
    n: usize,
    matrix: Vec<Vec<[f64; 2]>>,
}

/// Assembles `M(λ)` and writes `moperator.json`; for the Dirichlet-to-Neumann
/// node also `moperator_diagonal.csv` with the Bessel-series diagonal.
pub fn run_moperator(config: &ProblemConfig, out: &Path) -> Result<RunReport, CliError> {
    config.validate()?;
    if config.kind != ProblemKind::Moperator {
        return Err(CliError::Config(format!(
            "moperator needs kind moperator, got {}",
            config.kind.label()
        )));
    }
    let d = config.discretization;
    let disk = Arc::new(Disk::new(d.order, d.radial_degree)?);
    let node = DiskNode::new(disk, config.boundary_operator.kind());
    let lambda = config.lambda();
    let m = assemble_m_operator(&node, lambda)?;
    let mat = m.matrix();
    let artifact = MOperatorArtifact {
        lambda: config.lambda,
        n: m.dim(),
        matrix: (0..m.dim())
            .map(|i| (0..m.dim()).map(|j| complex_pair(mat[(i, j)])).collect())
            .collect(),
    };
    let mut report = RunReport::new("moperator", config);
    let mut residuals = BTreeMap::new();
    residuals.insert("off_diagonal_max".into(), m.off_diagonal_max());

    let mut artifacts = vec![write_atomic(
        out,
        "moperator.json",
        &to_json_string(&artifact),
    )?];
    let mut pass = true;
    if config.boundary_operator.kind() == BoundaryOperatorKind::DirichletToNeumann {
        let diagonal: Vec<(i64, Complex64, Complex64)> = m
            .diagonal()
            .into_iter()
            .map(|(n, v)| (n, v, helmholtz_dtn(n, lambda)))
            .collect();
        let max_diff = diagonal
            .iter()
            .map(|(_, v, o)| (v - o).norm())
            .fold(0.0, f64::max);
        let rows = diagonal.iter().map(|&(n, v, o)| {
            let mut row = vec![n.to_string()];
            row.extend(
                [v.re, v.im, o.re, o.im, (v - o).norm()]
                    .into_iter()
                    .map(fmt_f64),
            );
            row
        });
        residuals.insert("bessel_oracle_max_diff".into(), max_diff);
        pass = max_diff <= ORACLE_TOLERANCE;
        let text = csv_rows("n,re,im,oracle_re,oracle_im,abs_diff", rows);
        artifacts.push(write_atomic(out, "moperator_diagonal.csv", &text)?);
    }
    report.push(ReportEntry {
        name: "moperator".into(),
        residuals,
        rank: None,
        kernel_dim: None,
        degeneracy: None,
        pass,
    });
    report.artifacts = artifacts;
    Ok(report)
}
