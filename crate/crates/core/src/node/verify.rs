use num_complex::Complex64;
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::moperator::m_apply;
use super::{random_boundary, OperatorNode};
use crate::boundary::BoundaryFunction;
use crate::disk::SpectrumReport;
use crate::error::Result;

/// Parameters of the identity suite.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Samples for the λ-independent identities.
    pub samples: usize,
    /// Samples per λ for the λ-dependent identities.
    pub lambda_samples: usize,
    pub bandwidth: usize,
    pub lambdas: Vec<Complex64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            samples: 20,
            lambda_samples: 10,
            bandwidth: 16,
            lambdas: vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(-3.0, 0.0),
                Complex64::new(1.0, 0.0),
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub node: String,
    pub seed: u64,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, identity: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.identity == identity)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn ratio(err: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        err / scale
    } else {
        err
    }
}

fn lambda_label(lambda: Complex64) -> String {
    if lambda.im == 0.0 {
        format!("{}", lambda.re)
    } else {
        format!("{}{:+}i", lambda.re, lambda.im)
    }
}

struct Suite {
    checks: Vec<IdentityCheck>,
}

impl Suite {
    fn record(&mut self, identity: String, tolerance: f64, errors: impl IntoIterator<Item = f64>) {
        let max_error = errors.into_iter().fold(0.0_f64, |m, e| {
            if m.is_nan() || e.is_nan() {
                f64::NAN
            } else {
                m.max(e)
            }
        });
        self.checks.push(IdentityCheck {
            identity,
            max_error,
            tolerance,
            pass: max_error <= tolerance,
        });
    }
}

/// Runs the node identities on seeded pseudo-random inputs and reports the
/// largest relative error of each.
///
/// Identities and tolerances:
/// `A T = I` (1e−9), `Γ₀Γ = I` (1e−12), `Γ₁T = Γ*` (1e−8), `Γ₁Γ = Λ` (1e−9),
/// `⟨Γφ, f⟩ = ⟨φ, Γ*f⟩` (1e−10), `Γ₀T = 0` (1e−12); per λ: the kernel lemma
/// `(A − λ)(I − λT)⁻¹Γφ = 0` (1e−8), the solution formula (PDE 1e−8, trace
/// 1e−10, agreement with a direct solve 1e−8) and `Γ₁(I − λT)⁻¹Γ = M(λ)`
/// (1e−8).
pub fn verify_node_identities<N: OperatorNode>(
    node: &N,
    config: &VerifyConfig,
) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let order = node.boundary_order();
    let zero = Complex64::new(0.0, 0.0);
    let minus_one = Complex64::new(-1.0, 0.0);
    let mut suite = Suite { checks: Vec::new() };

    let mut at = Vec::new();
    let mut g0g = Vec::new();
    let mut g1t = Vec::new();
    let mut g1g = Vec::new();
    let mut adj = Vec::new();
    let mut g0t = Vec::new();
    for _ in 0..config.samples {
        let f = node.random_state(&mut rng, config.bandwidth);
        let phi = random_boundary(&mut rng, order, config.bandwidth);
        let tf = node.apply_t(&f)?;
        let gphi = node.apply_g(&phi)?;
        let gsf = node.apply_gstar(&f)?;

        let atf = node.apply_a(&tf, zero)?;
        at.push(ratio(
            node.state_norm(&node.state_axpy(&atf, minus_one, &f)?),
            node.state_norm(&f),
        ));

        g0g.push(ratio((&node.trace0(&gphi)? - &phi).norm(), phi.norm()));
        g0t.push(ratio(node.trace0(&tf)?.norm(), node.state_norm(&f)));

        g1t.push(ratio((&node.trace1(&tf)? - &gsf).norm(), gsf.norm()));

        let lphi = node.apply_lambda(&phi);
        g1g.push(ratio(
            (&node.trace1(&gphi)? - &lphi).norm(),
            lphi.norm().max(phi.norm()),
        ));

        let lhs = node.state_inner(&gphi, &f)?;
        let rhs = phi.inner(&gsf)?;
        adj.push(ratio(
            (lhs - rhs).norm(),
            node.state_norm(&gphi) * node.state_norm(&f),
        ));
    }
    suite.record("A0T=I".into(), 1e-9, at);
    suite.record("Gamma0Gamma=I".into(), 1e-12, g0g);
    suite.record("Gamma0T=0".into(), 1e-12, g0t);
    suite.record("Gamma1T=Gstar".into(), 1e-8, g1t);
    suite.record("Gamma1Gamma=Lambda".into(), 1e-9, g1g);
    suite.record("adjoint<Gamma phi,f>=<phi,Gstar f>".into(), 1e-10, adj);

    for &lambda in &config.lambdas {
        let label = lambda_label(lambda);
        if !node.spectrum_guard(lambda).passes {
            suite.record(format!("spectrum_guard[{label}]"), 0.0, [f64::INFINITY]);
            continue;
        }
        let mut kernel = Vec::new();
        let mut pde = Vec::new();
        let mut trace = Vec::new();
        let mut direct = Vec::new();
        let mut mcons = Vec::new();
        for _ in 0..config.lambda_samples {
            let phi = random_boundary(&mut rng, order, config.bandwidth);
            let f = node.random_state(&mut rng, config.bandwidth);

            let gphi = node.apply_g(&phi)?;
            let h = node.resolvent(&gphi, lambda)?;
            kernel.push(ratio(
                node.state_norm(&node.apply_a(&h, lambda)?),
                node.state_norm(&gphi),
            ));

            let u =
                node.state_axpy(&node.resolvent_t(&f, lambda)?, Complex64::new(1.0, 0.0), &h)?;
            let res = node.state_axpy(&node.apply_a(&u, lambda)?, minus_one, &f)?;
            pde.push(ratio(node.state_norm(&res), node.state_norm(&f)));
            trace.push(ratio((&node.trace0(&u)? - &phi).norm(), phi.norm()));
            if let Some(v) = node.direct_solve(&f, &phi, lambda) {
                let v = v?;
                direct.push(ratio(
                    node.state_norm(&node.state_axpy(&u, minus_one, &v)?),
                    node.state_norm(&v),
                ));
            }

            let from_trace = node.trace1(&h)?;
            let from_formula = m_apply(node, lambda, &phi)?;
            mcons.push(ratio(
                (&from_trace - &from_formula).norm(),
                from_formula.norm().max(phi.norm()),
            ));
        }
        suite.record(format!("kernel_lemma[{label}]"), 1e-8, kernel);
        suite.record(format!("solution_formula_pde[{label}]"), 1e-8, pde);
        suite.record(format!("solution_formula_trace[{label}]"), 1e-10, trace);
        if !direct.is_empty() {
            suite.record(format!("solution_formula_direct[{label}]"), 1e-8, direct);
        }
        suite.record(format!("m_operator_consistency[{label}]"), 1e-8, mcons);
    }

    Ok(IdentityReport {
        node: node.name(),
        seed: config.seed,
        checks: suite.checks,
    })
}

/// Wraps a node and scales its `Γ*` by a constant factor, for checking that
/// the identity suite detects faults.
#[derive(Clone, Debug)]
pub struct CorruptedGstar<N> {
    inner: N,
    factor: f64,
}

impl<N> CorruptedGstar<N> {
    pub fn new(inner: N, factor: f64) -> Self {
        Self { inner, factor }
    }
}

impl<N: OperatorNode> OperatorNode for CorruptedGstar<N> {
    type State = N::State;

    fn name(&self) -> String {
        format!("{}+gstar×{}", self.inner.name(), self.factor)
    }
    fn boundary_order(&self) -> usize {
        self.inner.boundary_order()
    }
    fn apply_t(&self, f: &Self::State) -> Result<Self::State> {
        self.inner.apply_t(f)
    }
    fn apply_g(&self, phi: &BoundaryFunction) -> Result<Self::State> {
        self.inner.apply_g(phi)
    }
    fn apply_gstar(&self, f: &Self::State) -> Result<BoundaryFunction> {
        Ok(self
            .inner
            .apply_gstar(f)?
            .scale(Complex64::new(self.factor, 0.0)))
    }
    fn apply_lambda(&self, phi: &BoundaryFunction) -> BoundaryFunction {
        self.inner.apply_lambda(phi)
    }
    fn trace0(&self, u: &Self::State) -> Result<BoundaryFunction> {
        self.inner.trace0(u)
    }
    fn trace1(&self, u: &Self::State) -> Result<BoundaryFunction> {
        self.inner.trace1(u)
    }
    fn apply_a(&self, u: &Self::State, lambda: Complex64) -> Result<Self::State> {
        self.inner.apply_a(u, lambda)
    }
    fn resolvent(&self, f: &Self::State, lambda: Complex64) -> Result<Self::State> {
        self.inner.resolvent(f, lambda)
    }
    fn resolvent_t(&self, f: &Self::State, lambda: Complex64) -> Result<Self::State> {
        self.inner.resolvent_t(f, lambda)
    }
    fn spectrum_guard(&self, lambda: Complex64) -> SpectrumReport {
        self.inner.spectrum_guard(lambda)
    }
    fn direct_solve(
        &self,
        f: &Self::State,
        phi: &BoundaryFunction,
        lambda: Complex64,
    ) -> Option<Result<Self::State>> {
        self.inner.direct_solve(f, phi, lambda)
    }
    fn zero_state(&self) -> Self::State {
        self.inner.zero_state()
    }
    fn state_norm(&self, u: &Self::State) -> f64 {
        self.inner.state_norm(u)
    }
    fn state_inner(&self, u: &Self::State, v: &Self::State) -> Result<Complex64> {
        self.inner.state_inner(u, v)
    }
    fn state_axpy(&self, u: &Self::State, a: Complex64, v: &Self::State) -> Result<Self::State> {
        self.inner.state_axpy(u, a, v)
    }
    fn random_state(&self, rng: &mut dyn RngCore, bandwidth: usize) -> Self::State {
        self.inner.random_state(rng, bandwidth)
    }
}
