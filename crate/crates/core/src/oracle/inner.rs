use crate::inversion::Eigenfunction;
use crate::{Error, Result};

use super::quadrature::Quadrature;

/// `⟨ψ₁|ψ₂⟩ = ∫ψ₁ψ₂ dx` to absolute tolerance `tol`.
pub fn inner_product(ef1: &Eigenfunction, ef2: &Eigenfunction, tol: f64) -> Result<f64> {
    inner_product_with(ef1, ef2, &Quadrature::absolute(tol))
}

/// Integrates in `y = √β x`, where both states are polynomial × `e^{−y²/2}`,
/// over `[−Y, Y]` with `Y` large enough that the two tails together stay
/// below a tenth of the quadrature target.
pub fn inner_product_with(ef1: &Eigenfunction, ef2: &Eigenfunction, quad: &Quadrature) -> Result<f64> {
    if ef1.units() != ef2.units() {
        return Err(Error::InvalidArgument("inner product needs matching units".into()));
    }
    let beta = ef1.units().beta();
    let scale = ef1.normalization() * ef2.normalization() / libm::sqrt(beta);
    let (p1, p2) = (ef1.sqrt_polynomial(), ef2.sqrt_polynomial());
    let integrand = |y: f64| scale * p1.eval(y) * p2.eval(y) * libm::exp(-y * y);
    let degree = (p1.degree() + p2.degree()) as f64;
    let mut cutoff = libm::sqrt(0.5 * degree) + 1.0;
    // rough size of the integral, for a relative target
    let peak = (0..=(8.0 * cutoff) as usize).map(|i| integrand(0.25 * i as f64).abs()).fold(0.0, f64::max);
    let target = quad.abs_tol.max(quad.rel_tol * peak);
    loop {
        // y^d e^{−y²} decays at least like exp(−(2Y − d/Y)(y − Y)) past Y
        let envelope = scale.abs() * p1.eval_abs(cutoff) * p2.eval_abs(cutoff) * libm::exp(-cutoff * cutoff);
        let tail = 2.0 * envelope / (2.0 * cutoff - degree / cutoff);
        if tail < 0.1 * target || envelope == 0.0 {
            break;
        }
        cutoff += 0.25;
        if cutoff > 1e3 {
            return Err(Error::QuadratureNonConvergence { a: -cutoff, b: cutoff });
        }
    }
    quad.integrate(integrand, -cutoff, cutoff)
}
