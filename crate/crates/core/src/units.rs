use alloc::format;

use num_traits::One;

use crate::exact::{rational_from_f64, BigRational};
use crate::{Error, Result};

/// Physical constants `ħ`, `m`, `ω`. All strictly positive; default is 1,1,1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Units {
    hbar: f64,
    mass: f64,
    omega: f64,
}

impl Default for Units {
    fn default() -> Self {
        Self { hbar: 1.0, mass: 1.0, omega: 1.0 }
    }
}

impl Units {
    pub fn new(hbar: f64, mass: f64, omega: f64) -> Result<Self> {
        for (name, v) in [("hbar", hbar), ("mass", mass), ("omega", omega)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidUnits(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(Self { hbar, mass, omega })
    }

    pub fn dimensionless() -> Self {
        Self::default()
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// `mω/ħ`, the inverse squared oscillator length.
    pub fn beta(&self) -> f64 {
        self.mass * self.omega / self.hbar
    }

    /// Exact rational images of the three constants.
    pub fn exact(&self) -> ExactUnits {
        // finiteness is checked in `new`
        let conv = |v: f64| rational_from_f64(v).expect("finite");
        ExactUnits { hbar: conv(self.hbar), mass: conv(self.mass), omega: conv(self.omega) }
    }
}

/// The same constants as exact dyadic rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactUnits {
    pub hbar: BigRational,
    pub mass: BigRational,
    pub omega: BigRational,
}

impl ExactUnits {
    pub fn beta(&self) -> BigRational {
        &self.mass * &self.omega / &self.hbar
    }

    pub fn hbar_omega(&self) -> BigRational {
        &self.hbar * &self.omega
    }

    pub fn is_dimensionless(&self) -> bool {
        self.hbar.is_one() && self.mass.is_one() && self.omega.is_one()
    }
}
