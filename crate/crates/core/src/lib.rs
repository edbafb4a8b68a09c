//! Exact Laplace-transform solution of the one-dimensional quantum harmonic
//! oscillator.
//!
//! The pipeline runs entirely in exact arithmetic:
//!
//! 1. [`series`] quantizes the leading exponent of the transform-side series,
//!    builds the terminating coefficients (closed form and recurrence) and
//!    checks them against the first-order transform ODE.
//! 2. [`inversion`] inverts the series term by term into `φ(ξ)`, attaches the
//!    Gaussian factor and checks the Schrödinger equation symbolically.
//! 3. [`hermite`] identifies the result with `H_N`.
//!
//! [`oracle`] holds the independent floating-point machinery (finite
//! differences, adaptive quadrature, numeric Laplace transform) used to
//! cross-check the analytic results.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

mod error;
pub mod exact;
pub mod hermite;
pub mod inversion;
pub mod oracle;
pub mod poly;
pub mod series;
pub mod units;

pub use error::{Error, Result};
pub use exact::{gamma_of_half_integer, gamma_ratio_half, BigRational, ExactScalar};
pub use hermite::{hermite_explicit, hermite_recurrence, match_to_hermite, HermiteMatch, HermitePolynomial};
pub use inversion::{
    assemble_wavefunction, boundary_exponent, eval_wavefunction, invert_transform, normalize, schrodinger_residual,
    Eigenfunction, XiPolynomial,
};
pub use poly::{ExactPolynomial, FloatPolynomial};
pub use series::{
    build_transform, coefficients_closed_form, eval_transform, quantize, recurrence_step, spectral_condition,
    verify_ode_identity, ConfluentForm, Level, Parity, QuantumNumbers, TransformSeries,
};
pub use units::Units;
