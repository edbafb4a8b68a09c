//! Sparse polynomials in one variable with [`ExactScalar`] coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::exact::{rational_from_f64, rational_to_f64, BigRational, ExactScalar};
use crate::Result;

/// `Σ coeff · x^power`, powers strictly increasing, no zero coefficients.
///
/// All coefficients of a nonzero polynomial share one π exponent; mixing is an
/// [`Error::Incommensurable`](crate::Error::Incommensurable).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExactPolynomial {
    terms: Vec<(u32, ExactScalar)>,
}

impl ExactPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Collects terms, summing repeated powers and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, ExactScalar)>,
    {
        let mut acc: BTreeMap<u32, ExactScalar> = BTreeMap::new();
        for (p, c) in terms {
            let entry = acc.entry(p).or_insert_with(ExactScalar::zero);
            *entry = entry.checked_add(&c)?;
        }
        Ok(Self { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn terms(&self) -> &[(u32, ExactScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(p, _)| *p)
    }

    pub fn lowest_power(&self) -> Option<u32> {
        self.terms.first().map(|(p, _)| *p)
    }

    pub fn coefficient(&self, power: u32) -> ExactScalar {
        self.terms.iter().find(|(p, _)| *p == power).map(|(_, c)| c.clone()).unwrap_or_else(ExactScalar::zero)
    }

    pub fn derivative(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| *p > 0)
                .map(|(p, c)| (p - 1, c.scale(&BigRational::from_integer((*p).into()))))
                .collect(),
        }
    }

    /// Multiplies by `factor · x^shift`.
    pub fn mul_monomial(&self, factor: &BigRational, shift: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(p, c)| (p + shift, c.scale(factor))).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Self::from_terms(self.terms.iter().chain(other.terms.iter()).cloned())
    }

    /// Dense `f64` coefficients, index = power.
    pub fn to_dense_f64(&self) -> Vec<f64> {
        let mut dense = alloc::vec![0.0; self.degree().map_or(0, |d| d as usize + 1)];
        for (p, c) in &self.terms {
            dense[*p as usize] = c.to_f64();
        }
        dense
    }

    /// Number of strict sign changes of a real polynomial on the real line,
    /// i.e. its count of distinct real roots (Sturm's theorem, exact).
    ///
    /// The common π factor does not affect signs and is ignored.
    pub fn real_root_count(&self) -> usize {
        let Some(deg) = self.degree() else { return 0 };
        let mut dense = alloc::vec![BigRational::from_integer(0.into()); deg as usize + 1];
        for (p, c) in &self.terms {
            dense[*p as usize] = c.rational().clone();
        }
        crate::poly::sturm::distinct_real_roots(&dense)
    }
}

/// Horner evaluation of a dense coefficient slice.
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Float image of an [`ExactPolynomial`] for evaluation at many points.
///
/// Each coefficient is kept as an unevaluated sum `hi + lo` (about 106
/// significant bits) times one common `π^{e/2}` scale, and evaluation runs
/// Horner's scheme in double-double arithmetic. High-degree polynomials with
/// alternating coefficients lose many digits to cancellation under plain
/// Horner; here the result is correct to a few ulps unless the condition
/// number exceeds roughly `1e16`.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatPolynomial {
    coeffs: Vec<(f64, f64)>,
    scale: f64,
}

impl FloatPolynomial {
    pub fn from_exact(p: &ExactPolynomial) -> Self {
        let exp = p.terms.first().map_or(0, |(_, c)| c.pi_half_exp());
        let scale = ExactScalar::new(BigRational::one(), exp).to_f64();
        let mut coeffs = alloc::vec![(0.0, 0.0); p.degree().map_or(0, |d| d as usize + 1)];
        for (power, c) in &p.terms {
            let hi = rational_to_f64(c.rational());
            let lo = rational_to_f64(&(c.rational() - rational_from_f64(hi).expect("finite")));
            // never happens for the series built here; kept exact-ish anyway
            let adjust = ExactScalar::new(BigRational::one(), c.pi_half_exp() - exp).to_f64();
            coeffs[*power as usize] = (hi * adjust, lo * adjust);
        }
        Self { coeffs, scale }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Rounded coefficients, index = power.
    pub fn coefficients(&self) -> Vec<f64> {
        self.coeffs.iter().map(|(hi, _)| hi * self.scale).collect()
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().map_or(0.0, |(hi, _)| hi * self.scale)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let (mut hi, mut lo) = (0.0f64, 0.0f64);
        for &(c_hi, c_lo) in self.coeffs.iter().rev() {
            // (hi + lo)·x + (c_hi + c_lo)
            let p = hi * x;
            let p_err = libm::fma(hi, x, -p) + lo * x;
            let (s, s_err) = two_sum(p, c_hi);
            (hi, lo) = fast_two_sum(s, s_err + p_err + c_lo);
        }
        (hi + lo) * self.scale
    }

    /// `Σ |a_q| x^q` for `x ≥ 0`, a bound on `|p(±x)|`.
    pub fn eval_abs(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, (hi, _)| acc * x + hi.abs()) * self.scale.abs()
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn fast_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

pub(crate) mod sturm {
    use alloc::vec::Vec;

    use num_traits::{Signed, Zero};

    use crate::exact::BigRational;

    fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    fn derivative(p: &[BigRational]) -> Vec<BigRational> {
        p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer((i as i64).into())).collect()
    }

    fn remainder(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
        let mut r = num.to_vec();
        let dl = den.len();
        let lead = &den[dl - 1];
        while r.len() >= dl {
            let q = r[r.len() - 1].clone() / lead;
            let shift = r.len() - dl;
            for (i, d) in den.iter().enumerate() {
                r[shift + i] -= &q * d;
            }
            r.pop();
            r = trim(r);
        }
        r
    }

    fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for s in signs.filter(|s| *s != 0) {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    fn sign(c: &BigRational) -> i8 {
        if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn distinct_real_roots(p: &[BigRational]) -> usize {
        let p = trim(p.to_vec());
        if p.len() <= 1 {
            return 0;
        }
        let mut chain = alloc::vec![p.clone(), trim(derivative(&p))];
        loop {
            let n = chain.len();
            if chain[n - 1].is_empty() {
                chain.pop();
                break;
            }
            let r = remainder(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(r.into_iter().map(|c| -c).collect());
        }
        // signs at -∞ and +∞ come from the leading coefficients
        let at_pos = chain.iter().map(|q| sign(q.last().unwrap()));
        let at_neg = chain.iter().map(|q| {
            let s = sign(q.last().unwrap());
            if (q.len() - 1) % 2 == 1 {
                -s
            } else {
                s
            }
        });
        sign_changes(at_neg) - sign_changes(at_pos)
    }
}
