//! Physicists' Hermite polynomials and the identification `φ_n ∝ H_N(√ξ)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::exact::{factorial, gamma_of_half_integer, BigRational, ExactScalar};
use crate::inversion::XiPolynomial;
use crate::poly::horner;
use crate::series::{Parity, QuantumNumbers};
use crate::{Error, Result};

/// `H_N(y) = Σ coeffs[i] y^i`, exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitePolynomial {
    degree: u32,
    coeffs: Vec<BigInt>,
}

impl HermitePolynomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Ascending coefficients `y^0 … y^N`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, y: f64) -> f64 {
        let dense: Vec<f64> = self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
        horner(&dense, y)
    }
}

/// Explicit sum `N! Σ_{j ≤ ⌊N/2⌋} (−1)^j (2y)^{N−2j} / (j! (N−2j)!)`.
pub fn hermite_explicit(degree: u32) -> HermitePolynomial {
    let n_fact = factorial(degree);
    let mut coeffs = alloc::vec![BigInt::zero(); degree as usize + 1];
    for j in 0..=degree / 2 {
        let power = degree - 2 * j;
        let term = &n_fact * (BigInt::from(1) << power) / (factorial(j) * factorial(power));
        coeffs[power as usize] = if j % 2 == 0 { term } else { -term };
    }
    HermitePolynomial { degree, coeffs }
}

/// Three-term recurrence `H_{k+1} = 2y H_k − 2k H_{k−1}`.
pub fn hermite_recurrence(degree: u32) -> HermitePolynomial {
    let mut prev: Vec<BigInt> = alloc::vec![BigInt::from(1)];
    if degree == 0 {
        return HermitePolynomial { degree, coeffs: prev };
    }
    let mut cur: Vec<BigInt> = alloc::vec![BigInt::zero(), BigInt::from(2)];
    for k in 1..degree {
        let mut next = alloc::vec![BigInt::zero(); k as usize + 2];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * 2;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c * BigInt::from(2 * k);
        }
        prev = core::mem::replace(&mut cur, next);
    }
    HermitePolynomial { degree, coeffs: cur }
}

/// `H_N(−y) = (−1)^N H_N(y)`, structurally and at the sample points.
pub fn parity_identity_check(degree: u32, samples: &[f64]) -> bool {
    let h = hermite_explicit(degree);
    let structural = h.coeffs.iter().enumerate().all(|(i, c)| (i as u32 + degree).is_multiple_of(2) || c.is_zero());
    let sign = if degree.is_multiple_of(2) { 1.0 } else { -1.0 };
    let sampled = samples.iter().all(|&y| {
        let (plus, minus) = (h.eval(y), h.eval(-y));
        (minus - sign * plus).abs() <= 1e-12 * plus.abs().max(1.0)
    });
    structural && sampled
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteMatch {
    /// `λ` in `φ(ξ) = λ H_N(√ξ)`.
    pub constant: ExactScalar,
    pub total_index: u32,
}

/// Finds the exact `λ` with `φ(ξ) = λ · H_N(√ξ)`, comparing every coefficient.
pub fn match_to_hermite(phi: &XiPolynomial, qn: &QuantumNumbers) -> Result<HermiteMatch> {
    let degree = qn.total_index();
    let h = hermite_explicit(degree);
    let mismatch = |half_power| Error::NoHermiteMatch { degree, half_power };
    if let Some(top) = phi.top_half_power() {
        if top > degree {
            return Err(mismatch(top));
        }
    }
    let leading = phi.coefficient(degree);
    if leading.is_zero() {
        return Err(mismatch(degree));
    }
    let constant = leading.scale(&BigRational::new(1.into(), h.coeffs[degree as usize].clone()));
    for (q, hq) in h.coeffs.iter().enumerate() {
        let expected = constant.scale(&BigRational::from_integer(hq.clone()));
        if phi.coefficient(q as u32) != expected {
            return Err(mismatch(q as u32));
        }
    }
    Ok(HermiteMatch { constant, total_index: degree })
}

/// Prefactor of `H_N` predicted by the duplication-formula route:
/// `c0/√π · Γ(n+1/2)/(2n)!` (even) or `c0/√π · n!/(2n+1)!` (odd).
pub fn expected_hermite_constant(parity: Parity, n: u32, c0: &ExactScalar) -> ExactScalar {
    let inv_sqrt_pi = ExactScalar::new(BigRational::from_integer(1.into()), -1);
    let factor = match parity {
        Parity::Even => {
            let g = gamma_of_half_integer(2 * i64::from(n) + 1).expect("positive argument");
            g.scale(&BigRational::new(1.into(), factorial(2 * n)))
        }
        Parity::Odd => ExactScalar::from_rational(BigRational::new(factorial(n), factorial(2 * n + 1))),
    };
    &(c0 * &inv_sqrt_pi) * &factor
}

/// `φ_n(ξ)` with `1/(Γ(m+1)Γ(m+1/2))` replaced by `2^{2m}/(√π (2m)!)`,
/// i.e. the sum in powers of `2√ξ` before it is recognized as `H_N`.
pub fn phi_via_duplication(parity: Parity, n: u32, c0: &ExactScalar) -> XiPolynomial {
    let inv_sqrt_pi = ExactScalar::new(BigRational::from_integer(1.into()), -1);
    let outer = match parity {
        Parity::Even => gamma_of_half_integer(2 * i64::from(n) + 1).expect("positive argument"),
        Parity::Odd => ExactScalar::from_rational(BigRational::from_integer(factorial(n))),
    };
    let prefactor = &(c0 * &inv_sqrt_pi) * &outer;
    let delta = u32::from(parity.delta());
    let mut terms: Vec<(u32, ExactScalar)> = (0..=n)
        .map(|j| {
            let power = 2 * (n - j) + delta;
            let magnitude = BigRational::new(BigInt::from(1) << power, factorial(j) * factorial(power));
            let signed = if j % 2 == 0 { magnitude } else { -magnitude };
            (power, prefactor.scale(&signed))
        })
        .collect();
    terms.reverse();
    XiPolynomial::new(terms).expect("distinct same-parity powers")
}
