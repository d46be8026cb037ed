//! Spectral realization of the operator node `{T, Γ, Λ; H, E}` on the unit
//! disk and circle, and solvers for the Poincaré, Hilbert and Riemann
//! boundary value problems through the reduction `(β₀ + β₁M(λ))ψ = g`.
//!
//! * [`boundary`]: `E = L²(T)` as truncated Fourier series, with the
//!   Hilbert transform, the Cauchy singular operator, the circle
//!   Dirichlet-to-Neumann map, `d/ds`, products and shifts.
//! * [`disk`]: `H = L²(D)` in polar Fourier–Chebyshev form, the Dirichlet
//!   solution operator `T`, harmonic continuation `Γ`, `Γ*`, resolvents and
//!   traces.
//! * [`node`]: the abstract node, M-operator assembly, spectral and mixed
//!   boundary value problems, transfer functions and the identity suite.
//! * [`problems`]: the classical problems built on the node.
//! * [`cli_io`]: JSON configs and reports, CSV field export, and the
//!   `bvpnode` command driver.

pub mod bessel;
pub mod boundary;
pub mod cli_io;
pub mod disk;
pub mod error;
pub mod node;
pub mod problems;

pub use boundary::{BoundaryFunction, CircleShift, FourierMultiplier, Side};
pub use disk::{Disk, DiskFunction, RadialGrid};
pub use error::{Error, Result};
pub use num_complex::Complex64;
