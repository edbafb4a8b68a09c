use crate::exact::rational_to_f64;
use crate::inversion::{invert_transform, XiPolynomial};
use crate::series::{eval_transform, TransformSeries};
use crate::{Error, Result};

use super::quadrature::Quadrature;

/// `∫₀^∞ e^{−sξ} φ(ξ) dξ` by quadrature, to absolute tolerance `tol`.
///
/// `φ` is a polynomial in `√ξ`, so it is of exponential order for every
/// `s > 0`. The substitution `ξ = u²` removes the `√ξ` cusp of odd states.
/// The cutoff `T` is the first doubling whose incomplete-gamma tail bound
/// `Σ |a_q| Γ(q/2+1, sT) / s^{q/2+1}` is below `tol/10`.
pub fn numeric_laplace(phi: &XiPolynomial, s: f64, tol: f64) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::NonPositiveArgument(s));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let terms: alloc::vec::Vec<(f64, f64)> =
        phi.terms().iter().map(|(q, c)| (f64::from(*q) / 2.0, c.to_f64().abs())).collect();
    let tail = |cutoff: f64| -> f64 {
        let x = s * cutoff;
        terms
            .iter()
            .map(|&(a, c)| {
                // Γ(a+1, x) ≤ x^a e^{−x} / (1 − a/x) for x > a
                if x <= a {
                    return f64::INFINITY;
                }
                c * libm::exp(a * libm::log(x) - x) / (1.0 - a / x) / libm::pow(s, a + 1.0)
            })
            .sum()
    };
    let mut cutoff = 1.0;
    while !(tail(cutoff) < 0.1 * tol) {
        cutoff *= 2.0;
        if cutoff > 1e12 {
            return Err(Error::QuadratureNonConvergence { a: 0.0, b: cutoff });
        }
    }
    let p = phi.sqrt_float();
    let integrand = |u: f64| 2.0 * u * p.eval(u) * libm::exp(-s * u * u);
    Quadrature::absolute(0.9 * tol).integrate(integrand, 0.0, libm::sqrt(cutoff))
}

/// One analytic-vs-numeric comparison of `Φ(s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundTrip {
    pub s: f64,
    pub analytic: f64,
    pub numeric: f64,
    /// `|numeric − analytic| / |analytic|`, or relative to `Σ_j |c0 c_j s^{j−ν}|`
    /// where `Φ(s)` is exactly zero.
    pub rel_err: f64,
}

/// Compares `eval_transform` with the numeric transform of the inverted series.
pub fn laplace_roundtrip(ts: &TransformSeries, s: f64, rel_tol: f64) -> Result<RoundTrip> {
    let analytic = eval_transform(ts, s)?;
    let denominator = if ts.vanishes_at(s) {
        let c0 = ts.c0().to_f64().abs();
        ts.terms().map(|(e, c)| c0 * rational_to_f64(c).abs() * libm::pow(s, rational_to_f64(&e))).sum()
    } else {
        analytic.abs()
    };
    let phi = invert_transform(ts)?;
    let numeric = numeric_laplace(&phi, s, 1e-3 * rel_tol * denominator)?;
    Ok(RoundTrip { s, analytic, numeric, rel_err: (numeric - analytic).abs() / denominator })
}
