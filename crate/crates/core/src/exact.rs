//! Rationals extended by integer powers of `√π`.
//!
//! Every closed-form coefficient in the oscillator pipeline has the shape
//! `r · π^(p/2)` with `r` rational, so that is the only scalar type the
//! symbolic layers use. Addition across different `p` is refused rather than
//! rounded.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub use num_rational::BigRational;

/// `rational · π^(pi_half_exp / 2)`. Zero is always stored with exponent 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    rational: BigRational,
    pi_half_exp: i32,
}

impl ExactScalar {
    pub fn new(rational: BigRational, pi_half_exp: i32) -> Self {
        let pi_half_exp = if rational.is_zero() { 0 } else { pi_half_exp };
        Self { rational, pi_half_exp }
    }

    pub fn from_rational(rational: BigRational) -> Self {
        Self::new(rational, 0)
    }

    pub fn from_integer(value: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    /// `π^(1/2)`.
    pub fn sqrt_pi() -> Self {
        Self::new(BigRational::one(), 1)
    }

    pub fn rational(&self) -> &BigRational {
        &self.rational
    }

    pub fn pi_half_exp(&self) -> i32 {
        self.pi_half_exp
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.rational.is_positive()
    }

    fn common_exponent(&self, other: &Self) -> Result<i32> {
        match (self.is_zero(), other.is_zero()) {
            (true, _) => Ok(other.pi_half_exp),
            (_, true) => Ok(self.pi_half_exp),
            _ if self.pi_half_exp == other.pi_half_exp => Ok(self.pi_half_exp),
            _ => Err(Error::Incommensurable { left: self.pi_half_exp, right: other.pi_half_exp }),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let p = self.common_exponent(other)?;
        Ok(Self::new(&self.rational + &other.rational, p))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let p = self.common_exponent(other)?;
        Ok(Self::new(&self.rational - &other.rational, p))
    }

    pub fn checked_cmp(&self, other: &Self) -> Result<Ordering> {
        self.common_exponent(other)?;
        Ok(self.rational.cmp(&other.rational))
    }

    /// Multiplies by a plain rational, leaving the π exponent alone.
    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(&self.rational * factor, self.pi_half_exp)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(self.rational.recip(), -self.pi_half_exp))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    /// The only exact-to-approximate boundary in the crate.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.rational) * pi_half_power(self.pi_half_exp)
    }
}

fn pi_half_power(p: i32) -> f64 {
    match p {
        0 => 1.0,
        _ => libm::pow(core::f64::consts::PI, f64::from(p) / 2.0),
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.rational * &rhs.rational, self.pi_half_exp + rhs.pi_half_exp)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        &self * &rhs
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;

    fn neg(self) -> ExactScalar {
        ExactScalar::new(-self.rational, self.pi_half_exp)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;

    fn neg(self) -> ExactScalar {
        -self.clone()
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational)?;
        if self.pi_half_exp != 0 {
            write!(f, "·π^({}/2)", self.pi_half_exp)?;
        }
        Ok(())
    }
}

/// Nearest `f64` to an exact rational. Saturates to ±∞ / 0 outside the range.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite `f64` (every finite double is dyadic).
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

pub(crate) fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub(crate) fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Exact `Γ(two_z / 2)` for `two_z ≥ 1`.
///
/// Integer arguments give `(z-1)!`; half-integer arguments give a rational
/// multiple of `√π`, built upward from `Γ(1/2) = √π`.
pub fn gamma_of_half_integer(two_z: i64) -> Result<ExactScalar> {
    if two_z <= 0 {
        return Err(Error::GammaDomain { two_z });
    }
    if two_z % 2 == 0 {
        let z = u32::try_from(two_z / 2).map_err(|_| Error::GammaDomain { two_z })?;
        return Ok(ExactScalar::from_rational(BigRational::from_integer(factorial(z - 1))));
    }
    // Γ(m + 1/2) = Γ(1/2) · ∏_{i<m} (i + 1/2)
    let m = (two_z - 1) / 2;
    let mut value = BigRational::one();
    for i in 0..m {
        value *= rat(2 * i + 1, 2);
    }
    Ok(ExactScalar::new(value, 1))
}

/// `Γ(n + 1/2) / Γ(n − j + 1/2) = ∏_{i<j} (n − i − 1/2)`, exact.
pub fn gamma_ratio_half(n: u32, j: u32) -> Result<BigRational> {
    if j > n {
        return Err(Error::IndexOutOfRange { n, j });
    }
    let n = i64::from(n);
    Ok((0..i64::from(j)).fold(BigRational::one(), |acc, i| acc * rat(2 * (n - i) - 1, 2)))
}
