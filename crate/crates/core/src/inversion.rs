//! Term-by-term inversion of the transform series and assembly of `ψ_n(x)`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exact::{gamma_of_half_integer, int, rational_to_f64, BigRational, ExactScalar};
use crate::oracle::quadrature::Quadrature;
use crate::poly::{ExactPolynomial, FloatPolynomial};
use crate::series::{Parity, QuantumNumbers, TransformSeries};
use crate::units::Units;
use crate::{Error, Result};

/// `φ(ξ) = Σ coeff · ξ^{q/2}`.
///
/// Equivalently a polynomial in `y = √ξ`; all `q` share the parity of the
/// state (even `q` for even states, odd `q` for odd ones).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiPolynomial {
    terms: Vec<(u32, ExactScalar)>,
}

impl XiPolynomial {
    pub fn new(terms: Vec<(u32, ExactScalar)>) -> Result<Self> {
        if terms.iter().any(|(_, c)| c.is_zero()) {
            return Err(Error::InvalidArgument("zero coefficient in ξ-polynomial".into()));
        }
        if terms.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidArgument("half-powers must be strictly increasing".into()));
        }
        if let Some((q0, _)) = terms.first() {
            if terms.iter().any(|(q, _)| q % 2 != q0 % 2) {
                return Err(Error::ParityMismatch);
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[(u32, ExactScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn parity(&self) -> Option<Parity> {
        self.terms.first().map(|(q, _)| Parity::of_total_index(*q))
    }

    /// Highest half-power `q`; the degree in `ξ` is `q/2`.
    pub fn top_half_power(&self) -> Option<u32> {
        self.terms.last().map(|(q, _)| *q)
    }

    pub fn coefficient(&self, half_power: u32) -> ExactScalar {
        self.terms.iter().find(|(q, _)| *q == half_power).map(|(_, c)| c.clone()).unwrap_or_else(ExactScalar::zero)
    }

    /// `φ(0)`: the `ξ^0` coefficient.
    pub fn constant_term(&self) -> ExactScalar {
        self.coefficient(0)
    }

    /// The same coefficients read as a polynomial in `y = √ξ`.
    pub fn as_sqrt_polynomial(&self) -> ExactPolynomial {
        ExactPolynomial::from_terms(self.terms.iter().cloned()).expect("validated terms")
    }

    /// Dense float coefficients in `y = √ξ`.
    pub fn sqrt_coefficients_f64(&self) -> Vec<f64> {
        self.as_sqrt_polynomial().to_dense_f64()
    }

    /// Compensated float image in `y = √ξ`, for repeated evaluation.
    pub fn sqrt_float(&self) -> FloatPolynomial {
        FloatPolynomial::from_exact(&self.as_sqrt_polynomial())
    }

    pub fn eval(&self, xi: f64) -> f64 {
        self.sqrt_float().eval(libm::sqrt(xi))
    }
}

/// Inverts `c_j s^{−(ν−j)}` into `c_j ξ^{ν−j−1} / Γ(ν−j)` for every term.
pub fn invert_transform(ts: &TransformSeries) -> Result<XiPolynomial> {
    let two_nu = ts.nu() * int(2);
    debug_assert!(two_nu.is_integer());
    let two_nu = i64::try_from(&two_nu.to_integer()).map_err(|_| Error::NotInvertible { index: 0 })?;
    let mut terms = Vec::with_capacity(ts.coefficients().len());
    for (j, c) in ts.coefficients().iter().enumerate().rev() {
        // exponent a = ν − j; the image ξ^{a−1} needs a ≥ 1 to stay a polynomial
        let two_a = two_nu - 2 * j as i64;
        if two_a < 2 {
            return Err(Error::NotInvertible { index: j });
        }
        if c.is_zero() {
            continue;
        }
        let gamma = gamma_of_half_integer(two_a)?;
        let coeff = ts.c0().scale(c).checked_div(&gamma)?;
        terms.push(((two_a - 2) as u32, coeff));
    }
    XiPolynomial::new(terms)
}

/// `ψ(x) = A · √radical · P(x) · exp(−rate·x²)`.
///
/// `P` holds the exact coefficients after `ξ^{1/2} → √β x`, `β = mω/ħ`. For
/// odd states the common irrational `√β` is pulled out into `radical = β`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenfunction {
    qn: QuantumNumbers,
    phi: XiPolynomial,
    poly_x: ExactPolynomial,
    radical: BigRational,
    gaussian_rate: f64,
    rate_exact: BigRational,
    units: Units,
    normalization: f64,
    sqrt_poly: FloatPolynomial,
}

impl Eigenfunction {
    pub fn qn(&self) -> &QuantumNumbers {
        &self.qn
    }

    pub fn phi(&self) -> &XiPolynomial {
        &self.phi
    }

    pub fn poly_x(&self) -> &ExactPolynomial {
        &self.poly_x
    }

    pub fn radical(&self) -> &BigRational {
        &self.radical
    }

    /// `mω / 2ħ`.
    pub fn gaussian_rate(&self) -> f64 {
        self.gaussian_rate
    }

    pub fn gaussian_rate_exact(&self) -> &BigRational {
        &self.rate_exact
    }

    pub fn units(&self) -> &Units {
        &self.units
    }

    /// `A_n`; 1 until [`normalize`] has run.
    pub fn normalization(&self) -> f64 {
        self.normalization
    }

    /// `ψ` in the dimensionless coordinate `y = √β x`, without `A_n`, is
    /// `p(y) · exp(−y²/2)`; this is `p`.
    pub fn sqrt_polynomial(&self) -> &FloatPolynomial {
        &self.sqrt_poly
    }

    pub fn with_normalization(&self, normalization: f64) -> Self {
        Self { normalization, ..self.clone() }
    }

    /// Count of real zeros of `ψ`, from the exact polynomial factor.
    pub fn node_count(&self) -> usize {
        self.poly_x.real_root_count()
    }
}

pub fn assemble_wavefunction(phi: &XiPolynomial, qn: &QuantumNumbers, units: &Units) -> Result<Eigenfunction> {
    if phi.parity() != Some(qn.parity()) {
        return Err(Error::ParityMismatch);
    }
    let exact = units.exact();
    let beta = exact.beta();
    let mut beta_powers = alloc::vec![BigRational::one()];
    let poly_x = ExactPolynomial::from_terms(phi.terms().iter().map(|(q, c)| {
        let half = (*q / 2) as usize;
        while beta_powers.len() <= half {
            let next = beta_powers.last().unwrap() * &beta;
            beta_powers.push(next);
        }
        (*q, c.scale(&beta_powers[half]))
    }))?;
    let radical = match qn.parity() {
        Parity::Even => BigRational::one(),
        Parity::Odd => beta.clone(),
    };
    let rate_exact = &beta / int(2);
    Ok(Eigenfunction {
        qn: qn.clone(),
        phi: phi.clone(),
        poly_x,
        radical,
        gaussian_rate: rational_to_f64(&rate_exact),
        rate_exact,
        units: *units,
        normalization: 1.0,
        sqrt_poly: phi.sqrt_float(),
    })
}

pub fn eval_wavefunction(ef: &Eigenfunction, x: f64) -> f64 {
    let y = libm::sqrt(ef.units.beta()) * x;
    ef.normalization * ef.sqrt_poly.eval(y) * libm::exp(-0.5 * y * y)
}

/// `δ` in `ψ ~ x^δ` near the origin: the lowest power present in `P(x)`.
pub fn boundary_exponent(ef: &Eigenfunction) -> u32 {
    ef.poly_x.lowest_power().unwrap_or(0)
}

/// Exact residual polynomial `R(x)` of the Schrödinger equation, using the
/// quantized energy. `Hψ − Eψ = √radical · R(x) · exp(−αx²)`.
pub fn schrodinger_residual(ef: &Eigenfunction) -> Result<ExactPolynomial> {
    schrodinger_residual_at(ef, &ef.qn.reduced_energy())
}

/// Same as [`schrodinger_residual`] with `E = reduced_energy · ħω` supplied.
pub fn schrodinger_residual_at(ef: &Eigenfunction, reduced_energy: &BigRational) -> Result<ExactPolynomial> {
    let u = ef.units.exact();
    let alpha = &ef.rate_exact;
    let p = &ef.poly_x;
    let dp = p.derivative();
    let d2p = dp.derivative();
    // (P e^{−αx²})'' = (P'' − 4αxP' + (4α²x² − 2α)P) e^{−αx²}
    let second = d2p
        .checked_add(&dp.mul_monomial(&(alpha * int(-4)), 1))?
        .checked_add(&p.mul_monomial(&(alpha * alpha * int(4)), 2))?
        .checked_add(&p.mul_monomial(&(alpha * int(-2)), 0))?;
    let kinetic = -(&u.hbar * &u.hbar) / (&u.mass * int(2));
    let spring = &u.mass * &u.omega * &u.omega / int(2);
    let energy = reduced_energy * u.hbar_omega();
    second.mul_monomial(&kinetic, 0).checked_add(&p.mul_monomial(&spring, 2))?.checked_add(&p.mul_monomial(&-energy, 0))
}

/// Fixes `A_n` so that `∫ψ² dx = 1` and the coefficient of `x^N` is positive.
pub fn normalize(ef: &Eigenfunction, quad: &Quadrature) -> Result<Eigenfunction> {
    let raw = ef.with_normalization(1.0);
    let norm_sq = crate::oracle::inner::inner_product_with(&raw, &raw, quad)?;
    let leading = ef.sqrt_poly.leading();
    let sign = if leading < 0.0 { -1.0 } else { 1.0 };
    Ok(ef.with_normalization(sign / libm::sqrt(norm_sq)))
}

/// Known closed form `(β/π)^{1/4} / √(2^N N!)` of `A_N` for a state whose
/// polynomial is `H_N(y)` with unit scale; cross-check only.
pub fn hermite_normalization(total_index: u32, units: &Units) -> f64 {
    let beta = units.beta();
    let mut fact = 1.0;
    for i in 1..=total_index {
        fact *= 2.0 * f64::from(i);
    }
    libm::pow(beta / core::f64::consts::PI, 0.25) / libm::sqrt(fact)
}
