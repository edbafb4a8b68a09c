//! Independent floating-point checks of the analytic pipeline.
//!
//! Nothing here reads the closed forms: eigenvalues come from a
//! finite-difference Hamiltonian, integrals from adaptive Simpson.

pub mod asymptotic;
pub mod fd;
pub mod inner;
pub mod laplace;
pub mod quadrature;

pub use asymptotic::{asymptotic_large_s, asymptotic_large_xi, asymptotic_small_s, AsymptoticReport, AsymptoticSample};
pub use fd::{fd_hamiltonian, lowest_eigenvalues, Grid, TridiagonalOperator};
pub use inner::inner_product;
pub use laplace::{laplace_roundtrip, numeric_laplace, RoundTrip};
pub use quadrature::{quadrature, Quadrature};

/// Default tolerances and probe points, in one place.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleConfig {
    pub grid_half_width: f64,
    pub grid_points: usize,
    /// Bisection bracket width for eigenvalues.
    pub eigen_tol: f64,
    /// Allowed `|E_h − (N + 1/2)ħω|` on the reference grid.
    pub fd_tol: f64,
    /// Accepted range for the error ratio when `h` is halved.
    pub convergence_ratio: (f64, f64),
    /// Absolute tolerance for inner products of normalized states.
    pub inner_tol: f64,
    /// Relative tolerance used when computing norms.
    pub norm_rel_tol: f64,
    pub laplace_rel_tol: f64,
    pub laplace_s: [f64; 4],
    pub asymptotic_tol: f64,
    pub small_s: f64,
    pub large_s: f64,
    pub large_xi: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            grid_half_width: 10.0,
            grid_points: 2001,
            eigen_tol: 1e-11,
            fd_tol: 2e-4,
            convergence_ratio: (3.5, 4.5),
            inner_tol: 1e-12,
            norm_rel_tol: 1e-13,
            laplace_rel_tol: 1e-8,
            laplace_s: [0.5, 1.0, 1.5, 3.0],
            asymptotic_tol: 1e-6,
            small_s: 1e-6,
            large_s: 1e8,
            large_xi: 1e10,
        }
    }
}
