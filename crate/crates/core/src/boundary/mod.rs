//! The boundary space `L²(T)` on the unit circle.
//!
//! A [`BoundaryFunction`] is a truncated two-sided Fourier series
//! `φ(θ) = Σ_{|n|≤N} φ̂(n) e^{inθ}` sampled on the odd grid
//! `θ_j = 2πj/(2N+1)`. The inner product is `⟨φ,ψ⟩ = ∫₀^{2π} φ ψ̄ dθ`, so
//! `‖φ‖² = 2π Σ|φ̂(n)|²`. All boundary-side operators of the operator node
//! (Hilbert transform, Cauchy singular operator, Dirichlet-to-Neumann map,
//! `d/ds`) are diagonal in this basis and are exposed as
//! [`FourierMultiplier`]s.

mod function;
mod multiplier;
mod shift;

pub use function::{BoundaryFunction, Side};
pub use multiplier::FourierMultiplier;
pub use shift::CircleShift;

/// Uniform angular grid of `2N+1` points on `[0, 2π)`.
pub fn angular_grid(order: usize) -> Vec<f64> {
    let len = 2 * order + 1;
    (0..len)
        .map(|j| 2.0 * std::f64::consts::PI * j as f64 / len as f64)
        .collect()
}
