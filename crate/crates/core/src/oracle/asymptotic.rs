//! Numeric checks of the transform asymptotics: the leading term of `Φ` near
//! its singular point `s = 0`, the matching growth of `φ` at large `ξ`, and the
//! large-`s` decay fixed by the behaviour of `φ` at the origin.

use alloc::vec::Vec;

use crate::exact::{gamma_of_half_integer, int, BigRational};
use crate::inversion::invert_transform;
use crate::poly::horner;
use crate::series::{eval_transform_scaled, TransformSeries};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticSample {
    pub at: f64,
    pub value: f64,
    pub expected: f64,
    /// `|value − expected| / |expected|`.
    pub drift: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    pub samples: Vec<AsymptoticSample>,
    /// Exact side conditions (exponent and Γ prefactor) where applicable.
    pub exact_consistent: bool,
    pub passed: bool,
}

impl AsymptoticReport {
    /// Drift at the last probe point, the one the verdict is based on.
    pub fn final_drift(&self) -> f64 {
        self.samples.last().map_or(f64::NAN, |s| s.drift)
    }

    fn finish(samples: Vec<AsymptoticSample>, exact_consistent: bool, tol: f64) -> Self {
        let passed = exact_consistent && samples.last().is_some_and(|s| s.drift < tol);
        Self { samples, exact_consistent, passed }
    }
}

fn sample(at: f64, value: f64, expected: f64) -> AsymptoticSample {
    AsymptoticSample { at, value, expected, drift: (value - expected).abs() / expected.abs() }
}

fn check_list(points: &[f64], increasing: bool) -> Result<()> {
    if points.is_empty() || points.iter().any(|s| !(*s > 0.0) || !s.is_finite()) {
        return Err(Error::InvalidArgument("probe points must be positive and finite".into()));
    }
    if points.windows(2).any(|w| (w[1] > w[0]) != increasing) {
        return Err(Error::InvalidArgument("probe points are not monotone in the required direction".into()));
    }
    Ok(())
}

/// `s^ν Φ(s) → c0` as `s → 0`; `s_list` must decrease.
pub fn asymptotic_small_s(ts: &TransformSeries, s_list: &[f64], tol: f64) -> Result<AsymptoticReport> {
    check_list(s_list, false)?;
    let expected = ts.c0().to_f64();
    let samples = s_list
        .iter()
        .map(|&s| Ok(sample(s, eval_transform_scaled(ts, s, ts.nu())?, expected)))
        .collect::<Result<Vec<_>>>()?;
    Ok(AsymptoticReport::finish(samples, true, tol))
}

/// `Γ(ν) φ(ξ) / ξ^{ν−1} → c0` as `ξ → ∞`; `xi_list` must increase.
pub fn asymptotic_large_xi(ts: &TransformSeries, xi_list: &[f64], tol: f64) -> Result<AsymptoticReport> {
    check_list(xi_list, true)?;
    let phi = invert_transform(ts)?;
    let two_nu = i64::try_from(&(ts.nu() * int(2)).to_integer()).map_err(|_| Error::NotInvertible { index: 0 })?;
    let gamma_nu = gamma_of_half_integer(two_nu)?.to_f64();
    let top = phi.top_half_power().unwrap_or(0);
    // exponent of the growth must be ν − 1
    let exact_consistent = i64::from(top) == two_nu - 2;
    let coeffs = phi.sqrt_coefficients_f64();
    let expected = ts.c0().to_f64();
    let samples = xi_list
        .iter()
        .map(|&xi| {
            // Σ a_q ξ^{(q−top)/2} = horner in 1/√ξ over the reversed coefficients
            let reversed: Vec<f64> = coeffs.iter().rev().copied().collect();
            let value = gamma_nu * horner(&reversed, 1.0 / libm::sqrt(xi));
            sample(xi, value, expected)
        })
        .collect();
    Ok(AsymptoticReport::finish(samples, exact_consistent, tol))
}

/// `s^{ν−n} Φ(s) → c0·c_n` as `s → ∞`; `s_list` must increase.
///
/// Also checks exactly that `ν − n = 1 + δ/2`, i.e. `φ ~ ξ^{δ/2}` at the
/// origin, and that the lowest term `a ξ^α` of `φ` satisfies
/// `Γ(α+1)·a = c0·c_n`.
pub fn asymptotic_large_s(ts: &TransformSeries, s_list: &[f64], tol: f64) -> Result<AsymptoticReport> {
    check_list(s_list, true)?;
    let shift = ts.nu() - int(i64::from(ts.qn().n()));
    let alpha = &shift - int(1);
    let delta_half = BigRational::new(i64::from(ts.qn().delta()).into(), 2.into());
    let phi = invert_transform(ts)?;
    let limit = ts.c0().scale(ts.last_coefficient());
    let gamma_matches = phi
        .terms()
        .first()
        .is_some_and(|(q, a)| gamma_of_half_integer(i64::from(*q) + 2).is_ok_and(|g| &g * a == limit));
    let exact_consistent = alpha == delta_half && gamma_matches;
    let expected = limit.to_f64();
    let samples = s_list
        .iter()
        .map(|&s| Ok(sample(s, eval_transform_scaled(ts, s, &shift)?, expected)))
        .collect::<Result<Vec<_>>>()?;
    Ok(AsymptoticReport::finish(samples, exact_consistent, tol))
}
