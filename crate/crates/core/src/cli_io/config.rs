use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::json::{boundary_from_triples, DiskFunctionJson};
use super::CliError;
use crate::boundary::{BoundaryFunction, CircleShift};
use crate::disk::{monomial_coeffs, Disk, DiskFunction};
use crate::node::{
    BoundaryOperatorExpr, BoundaryOperatorKind, Factor, SolveOptions, Term, VerifyConfig,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemKind {
    Dirichlet,
    Sbvp,
    Mixed,
    Poincare,
    Hilbert,
    Riemann,
    RiemannShifted,
    Moperator,
    Verify,
}

impl ProblemKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::Dirichlet => "dirichlet",
            Self::Sbvp => "sbvp",
            Self::Mixed => "mixed",
            Self::Poincare => "poincare",
            Self::Hilbert => "hilbert",
            Self::Riemann => "riemann",
            Self::RiemannShifted => "riemann_shifted",
            Self::Moperator => "moperator",
            Self::Verify => "verify",
        }
    }

    pub fn is_solve(self) -> bool {
        !matches!(self, Self::Moperator | Self::Verify)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Discretization {
    #[serde(rename = "N")]
    pub order: usize,
    #[serde(rename = "M_r")]
    pub radial_degree: usize,
}

impl Default for Discretization {
    fn default() -> Self {
        Self {
            order: crate::disk::DEFAULT_ORDER,
            radial_degree: crate::disk::DEFAULT_RADIAL_DEGREE,
        }
    }
}

/// Sample values: real numbers or `[re, im]` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SampleValues {
    Real(Vec<f64>),
    Complex(Vec<[f64; 2]>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Samples {
    pub samples: SampleValues,
}

/// A boundary function: sparse `[n, re, im]` triples, or uniform samples on
/// an odd number of angles `θ_j = 2πj/L`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FunctionSpec {
    Modes(Vec<(i64, f64, f64)>),
    Samples(Samples),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Monomials {
    /// `[n, k, re, im]`: the term `(re + i·im)·r^k·e^{inθ}`, `k ≥ |n|`.
    pub terms: Vec<(i64, usize, f64, f64)>,
}

/// A function on the disk: monomial terms, or an exported disk function.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SourceSpec {
    Monomials(Monomials),
    Exported(DiskFunctionJson),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShiftSamples {
    /// `α(θ_j)` on `θ_j = 2πj/(2N+1)`.
    pub samples: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShiftRotation {
    pub rotation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ShiftSpec {
    Samples(ShiftSamples),
    Rotation(ShiftRotation),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorSpec {
    Identity,
    #[serde(rename = "d_ds")]
    TangentialDerivative,
    Lambda,
    Shift,
    /// Multiplication by the named entry of `functions`.
    Mult(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    #[serde(default = "one_pair")]
    pub coeff: [f64; 2],
    pub factors: Vec<FactorSpec>,
}

fn one_pair() -> [f64; 2] {
    [1.0, 0.0]
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorsSpec {
    #[serde(default)]
    pub beta0: Vec<TermSpec>,
    #[serde(default)]
    pub beta1: Vec<TermSpec>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeSpec {
    #[default]
    Dtn,
    Hilbert,
    Cauchy,
}

impl NodeSpec {
    pub fn kind(self) -> BoundaryOperatorKind {
        match self {
            Self::Dtn => BoundaryOperatorKind::DirichletToNeumann,
            Self::Hilbert => BoundaryOperatorKind::Hilbert,
            Self::Cauchy => BoundaryOperatorKind::CauchySingular,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputOptions {
    /// `(n_r, n_θ)` for `field.csv` and `exterior.csv`.
    pub polar_grid: (usize, usize),
    pub formats: Vec<Format>,
}

impl Default for OutputOptions {
    fn default() -> Self {
        Self {
            polar_grid: (33, 65),
            formats: vec![Format::Json, Format::Csv],
        }
    }
}

impl OutputOptions {
    pub fn wants(&self, f: Format) -> bool {
        self.formats.contains(&f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SolverOptions {
    pub rank_tol: f64,
    pub inconsistency_tol: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        let d = SolveOptions::default();
        Self {
            rank_tol: d.rank_tol,
            inconsistency_tol: d.inconsistency_tol,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct VerifyOptions {
    pub lambdas: Vec<[f64; 2]>,
    pub samples: usize,
    pub lambda_samples: usize,
    pub bandwidth: usize,
    /// Scale `Γ*` by 1.01 to exercise the failure path.
    pub corrupt_gstar: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        let d = VerifyConfig::default();
        Self {
            lambdas: d.lambdas.iter().map(|z| [z.re, z.im]).collect(),
            samples: d.samples,
            lambda_samples: d.lambda_samples,
            bandwidth: d.bandwidth,
            corrupt_gstar: false,
        }
    }
}

/// A problem description as read from JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    pub schema: u32,
    pub kind: ProblemKind,
    #[serde(default)]
    pub discretization: Discretization,
    #[serde(default)]
    pub lambda: [f64; 2],
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub boundary_operator: NodeSpec,
    #[serde(default)]
    pub functions: BTreeMap<String, FunctionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SourceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operators: Option<OperatorsSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<ShiftSpec>,
    #[serde(default)]
    pub output: OutputOptions,
    #[serde(default)]
    pub fail_on_degenerate: bool,
    #[serde(default)]
    pub solver: SolverOptions,
    #[serde(default)]
    pub verify: VerifyOptions,
}

fn default_seed() -> u64 {
    42
}

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

impl ProblemConfig {
    /// Default configuration of a command that needs no problem data.
    pub fn defaults(kind: ProblemKind) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            kind,
            discretization: Discretization::default(),
            lambda: [0.0, 0.0],
            seed: default_seed(),
            boundary_operator: NodeSpec::default(),
            functions: BTreeMap::new(),
            source: None,
            operators: None,
            shift: None,
            output: OutputOptions::default(),
            fail_on_degenerate: false,
            solver: SolverOptions::default(),
            verify: VerifyOptions::default(),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, CliError> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| config_err(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.to_path_buf(),
            source: e,
        })?;
        Self::from_json_str(&text)
    }

    pub fn order(&self) -> usize {
        self.discretization.order
    }

    pub fn lambda(&self) -> Complex64 {
        Complex64::new(self.lambda[0], self.lambda[1])
    }

    pub fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            rank_tol: self.solver.rank_tol,
            inconsistency_tol: self.solver.inconsistency_tol,
            ..SolveOptions::default()
        }
    }

    pub fn verify_config(&self) -> VerifyConfig {
        VerifyConfig {
            seed: self.seed,
            samples: self.verify.samples,
            lambda_samples: self.verify.lambda_samples,
            bandwidth: self.verify.bandwidth,
            lambdas: self
                .verify
                .lambdas
                .iter()
                .map(|p| Complex64::new(p[0], p[1]))
                .collect(),
        }
    }

    /// Checks everything that can be checked without solving: schema,
    /// discretization bounds, function names per kind, and that every
    /// function and the shift parse.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.schema != SCHEMA_VERSION {
            return Err(config_err(format!(
                "unsupported schema {}, expected {SCHEMA_VERSION}",
                self.schema
            )));
        }
        let d = self.discretization;
        if d.order < 4 {
            return Err(config_err(format!("N must be at least 4, got {}", d.order)));
        }
        if d.radial_degree < 8 {
            return Err(config_err(format!(
                "M_r must be at least 8, got {}",
                d.radial_degree
            )));
        }
        if !self.lambda.iter().all(|v| v.is_finite()) {
            return Err(config_err("lambda must be finite"));
        }
        if !(self.solver.rank_tol > 0.0 && self.solver.inconsistency_tol > 0.0) {
            return Err(config_err("solver tolerances must be positive"));
        }
        let (n_r, n_t) = self.output.polar_grid;
        if n_r < 2 || n_t < 1 {
            return Err(config_err("polar_grid needs at least 2 radii and 1 angle"));
        }
        if self.kind == ProblemKind::Dirichlet && self.lambda() != Complex64::new(0.0, 0.0) {
            return Err(config_err(
                "dirichlet problems have lambda = 0; use kind sbvp",
            ));
        }
        if matches!(
            self.kind,
            ProblemKind::Hilbert | ProblemKind::Riemann | ProblemKind::RiemannShifted
        ) && self.lambda() != Complex64::new(0.0, 0.0)
        {
            return Err(config_err(format!(
                "{} problems are posed at lambda = 0",
                self.kind.label()
            )));
        }

        if self.boundary_operator != NodeSpec::Dtn
            && !matches!(
                self.kind,
                ProblemKind::Mixed | ProblemKind::Moperator | ProblemKind::Verify
            )
        {
            return Err(config_err(format!(
                "kind {} fixes its boundary operator",
                self.kind.label()
            )));
        }

        let (required, optional) = self.function_names()?;
        for name in self.functions.keys() {
            if !required.contains(name.as_str()) && !optional.contains(name.as_str()) {
                return Err(config_err(format!(
                    "function '{name}' is not used by kind {}",
                    self.kind.label()
                )));
            }
        }
        for name in &required {
            if !self.functions.contains_key(*name) {
                return Err(config_err(format!(
                    "kind {} requires function '{name}'",
                    self.kind.label()
                )));
            }
        }
        for name in self.functions.keys() {
            self.boundary_function(name)?;
        }

        let needs_shift = self.kind == ProblemKind::RiemannShifted
            || self.operators.as_ref().is_some_and(|o| {
                o.beta0
                    .iter()
                    .chain(&o.beta1)
                    .any(|t| t.factors.contains(&FactorSpec::Shift))
            });
        match (&self.shift, needs_shift) {
            (Some(_), false) => {
                return Err(config_err(format!(
                    "kind {} takes no shift",
                    self.kind.label()
                )))
            }
            (None, true) => return Err(config_err("a shift is required")),
            _ => {}
        }
        if self.shift.is_some() {
            self.circle_shift()?;
        }
        let takes_source = matches!(
            self.kind,
            ProblemKind::Dirichlet | ProblemKind::Sbvp | ProblemKind::Mixed | ProblemKind::Poincare
        );
        if self.source.is_some() && !takes_source {
            return Err(config_err(format!(
                "kind {} takes no source",
                self.kind.label()
            )));
        }
        if self.operators.is_some() != (self.kind == ProblemKind::Mixed) {
            return Err(config_err("operators are given exactly for kind mixed"));
        }
        Ok(())
    }

    fn function_names(&self) -> Result<(BTreeSet<&str>, BTreeSet<&str>), CliError> {
        let set = |v: &[&'static str]| v.iter().copied().collect::<BTreeSet<&str>>();
        Ok(match self.kind {
            ProblemKind::Dirichlet | ProblemKind::Sbvp => (set(&[]), set(&["phi"])),
            ProblemKind::Mixed => {
                let mut names = set(&[]);
                if let Some(ops) = &self.operators {
                    for t in ops.beta0.iter().chain(&ops.beta1) {
                        for f in &t.factors {
                            if let FactorSpec::Mult(name) = f {
                                names.insert(name.as_str());
                            }
                        }
                    }
                }
                names.insert("phi");
                (names, set(&[]))
            }
            ProblemKind::Poincare => (set(&["g"]), set(&["beta0", "beta1", "gamma"])),
            ProblemKind::Hilbert => (set(&["a", "b", "g"]), set(&[])),
            ProblemKind::Riemann | ProblemKind::RiemannShifted => (set(&["A", "B", "g"]), set(&[])),
            ProblemKind::Moperator | ProblemKind::Verify => (set(&[]), set(&[])),
        })
    }

    /// The named boundary function at the configured truncation; absent
    /// optional functions are zero.
    pub fn boundary_function(&self, name: &str) -> Result<BoundaryFunction, CliError> {
        let order = self.order();
        match self.functions.get(name) {
            None => Ok(BoundaryFunction::zeros(order)),
            Some(FunctionSpec::Modes(triples)) => boundary_from_triples(order, triples)
                .map_err(|e| config_err(format!("function '{name}': {e}"))),
            Some(FunctionSpec::Samples(s)) => {
                let values: Vec<Complex64> = match &s.samples {
                    SampleValues::Real(v) => v.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
                    SampleValues::Complex(v) => {
                        v.iter().map(|p| Complex64::new(p[0], p[1])).collect()
                    }
                };
                if !values.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
                    return Err(config_err(format!("function '{name}': non-finite sample")));
                }
                BoundaryFunction::analyze(&values)
                    .map(|f| f.with_order(order))
                    .map_err(|e| config_err(format!("function '{name}': {e}")))
            }
        }
    }

    pub fn circle_shift(&self) -> Result<CircleShift, CliError> {
        match &self.shift {
            None => Err(config_err("no shift configured")),
            Some(ShiftSpec::Rotation(r)) => {
                if r.rotation.is_finite() {
                    Ok(CircleShift::rotation(self.order(), r.rotation))
                } else {
                    Err(config_err("rotation must be finite"))
                }
            }
            Some(ShiftSpec::Samples(s)) => {
                if s.samples.len() != 2 * self.order() + 1 {
                    return Err(config_err(format!(
                        "shift needs {} samples, got {}",
                        2 * self.order() + 1,
                        s.samples.len()
                    )));
                }
                CircleShift::from_samples(s.samples.clone()).map_err(|e| config_err(e.to_string()))
            }
        }
    }

    /// The source term `f`, zero when absent.
    pub fn source(&self, disk: &Disk) -> Result<DiskFunction, CliError> {
        match &self.source {
            None => Ok(disk.zeros()),
            Some(SourceSpec::Exported(j)) => {
                let f = j
                    .to_disk_function()
                    .map_err(|e| config_err(format!("source: {e}")))?;
                if f.order() != disk.order() || f.radial_degree() != disk.radial_degree() {
                    return Err(config_err(
                        "source discretization differs from the configured one",
                    ));
                }
                Ok(f)
            }
            Some(SourceSpec::Monomials(m)) => {
                let order = disk.order();
                let degree = disk.radial_degree();
                let mut coeffs = vec![vec![Complex64::new(0.0, 0.0); degree + 1]; 2 * order + 1];
                for &(n, k, re, im) in &m.terms {
                    if n.unsigned_abs() as usize > order {
                        return Err(config_err(format!("source mode {n} exceeds N = {order}")));
                    }
                    if k < n.unsigned_abs() as usize || k > degree {
                        return Err(config_err(format!(
                            "source term r^{k} e^(i{n}θ) needs |n| ≤ k ≤ M_r"
                        )));
                    }
                    if !(re.is_finite() && im.is_finite()) {
                        return Err(config_err("source coefficient must be finite"));
                    }
                    let c = Complex64::new(re, im);
                    let row = &mut coeffs[(n + order as i64) as usize];
                    for (slot, m) in row.iter_mut().zip(monomial_coeffs(k, degree)) {
                        *slot += c * m;
                    }
                }
                DiskFunction::from_coeffs(order, degree, coeffs)
                    .map_err(|e| config_err(format!("source: {e}")))
            }
        }
    }

    /// `β₀` and `β₁` of a mixed problem.
    pub fn operators(&self) -> Result<(BoundaryOperatorExpr, BoundaryOperatorExpr), CliError> {
        let ops = self
            .operators
            .as_ref()
            .ok_or_else(|| config_err("kind mixed requires operators"))?;
        Ok((self.expr(&ops.beta0)?, self.expr(&ops.beta1)?))
    }

    fn expr(&self, terms: &[TermSpec]) -> Result<BoundaryOperatorExpr, CliError> {
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let mut factors = Vec::with_capacity(t.factors.len());
            for f in &t.factors {
                factors.push(match f {
                    FactorSpec::Identity => Factor::Identity,
                    FactorSpec::TangentialDerivative => Factor::TangentialDeriv,
                    FactorSpec::Lambda => Factor::LambdaRef,
                    FactorSpec::Shift => Factor::Shift(self.circle_shift()?),
                    FactorSpec::Mult(name) => Factor::Mult(self.boundary_function(name)?),
                });
            }
            out.push(Term {
                coeff: Complex64::new(t.coeff[0], t.coeff[1]),
                factors,
            });
        }
        Ok(BoundaryOperatorExpr::from_terms(out))
    }
}
