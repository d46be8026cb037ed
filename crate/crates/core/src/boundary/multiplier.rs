use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::BoundaryFunction;

/// A diagonal operator on the Fourier basis: `(Mφ)ˆ(n) = symbol(n)·φ̂(n)`.
#[derive(Clone)]
pub struct FourierMultiplier {
    name: &'static str,
    symbol: Arc<dyn Fn(i64) -> Complex64 + Send + Sync>,
}

impl fmt::Debug for FourierMultiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FourierMultiplier")
            .field("name", &self.name)
            .finish()
    }
}

impl FourierMultiplier {
    pub fn from_fn<F>(name: &'static str, symbol: F) -> Self
    where
        F: Fn(i64) -> Complex64 + Send + Sync + 'static,
    {
        Self {
            name,
            symbol: Arc::new(symbol),
        }
    }

    /// Hilbert transform, symbol `−i·sgn(n)` with `sgn(0) = 0`.
    ///
    /// For real `φ`, `φ + iHφ` is the boundary value of a function analytic
    /// in the disk.
    pub fn hilbert() -> Self {
        Self::from_fn("hilbert", |n| match n.signum() {
            0 => Complex64::new(0.0, 0.0),
            s => Complex64::new(0.0, -(s as f64)),
        })
    }

    /// Cauchy singular operator on the counterclockwise unit circle:
    /// `+1` for `n ≥ 0`, `−1` for `n < 0`.
    pub fn cauchy_singular() -> Self {
        Self::from_fn("cauchy_singular", |n| {
            Complex64::new(if n >= 0 { 1.0 } else { -1.0 }, 0.0)
        })
    }

    /// Dirichlet-to-Neumann map of the unit disk, symbol `|n|`.
    pub fn dirichlet_to_neumann() -> Self {
        Self::from_fn("dirichlet_to_neumann", |n| {
            Complex64::new(n.unsigned_abs() as f64, 0.0)
        })
    }

    /// Arc-length derivative `d/ds = d/dθ`, symbol `i·n`.
    pub fn tangential_derivative() -> Self {
        Self::from_fn("tangential_derivative", |n| Complex64::new(0.0, n as f64))
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn symbol(&self, n: i64) -> Complex64 {
        (self.symbol)(n)
    }

    pub fn apply(&self, phi: &BoundaryFunction) -> BoundaryFunction {
        let order = phi.order() as i64;
        let coeffs = phi
            .coeffs()
            .iter()
            .zip(-order..=order)
            .map(|(c, n)| self.symbol(n) * c)
            .collect();
        BoundaryFunction::from_coeffs_unchecked(phi.order(), coeffs)
    }
}
