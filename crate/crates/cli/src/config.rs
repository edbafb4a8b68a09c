use serde::Serialize;

use crate::args::{EvenFactorArg, Format, ParityArg};

/// Echo of the effective settings, written to the `meta` block of JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u32>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub total_index: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity: Option<ParityArg>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub units: UnitsConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_factor: Option<EvenFactorArg>,
    pub format: Format,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct UnitsConfig {
    pub hbar: f64,
    pub mass: f64,
    pub omega: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GridConfig {
    pub half_width: f64,
    pub points: usize,
}
