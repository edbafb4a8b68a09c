use laplace_qho::oracle::{laplace_roundtrip, Quadrature};
use laplace_qho::{
    assemble_wavefunction, build_transform, eval_wavefunction, hermite_explicit, invert_transform, match_to_hermite,
    normalize, quantize, ExactScalar, Parity, QuantumNumbers, Units,
};
use serde_json::{json, Value};

use crate::args::{Common, ParityArg, StateArgs};
use crate::config::{GridConfig, RunConfig, UnitsConfig};
use crate::error::CliError;
use crate::output::{big_integer, emit, meta, rational, scalar, Cell, Table};

pub fn units(common: &Common) -> Result<Units, CliError> {
    Units::new(common.hbar, common.mass, common.omega).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn units_config(common: &Common) -> UnitsConfig {
    UnitsConfig { hbar: common.hbar, mass: common.mass, omega: common.omega }
}

pub fn resolve_state(state: &StateArgs) -> Result<QuantumNumbers, CliError> {
    match (state.total, state.parity, state.n) {
        (Some(total), None, None) => Ok(QuantumNumbers::from_total_index(total)),
        (None, Some(parity), Some(n)) => Ok(QuantumNumbers::new(parity_of(parity), n)),
        (None, None, None) => Err(CliError::Usage("select a state with --N or with --parity and --n".into())),
        _ => Err(CliError::Usage("--N conflicts with --parity/--n".into())),
    }
}

pub fn parity_of(p: ParityArg) -> Parity {
    match p {
        ParityArg::Even => Parity::Even,
        ParityArg::Odd => Parity::Odd,
    }
}

fn base_config(command: &'static str, common: &Common) -> RunConfig {
    RunConfig {
        command,
        n_max: None,
        total_index: None,
        parity: None,
        n: None,
        units: units_config(common),
        grid: None,
        tol: None,
        s: None,
        even_factor: None,
        format: common.format,
    }
}

fn with_state(mut config: RunConfig, state: &StateArgs) -> RunConfig {
    config.total_index = state.total;
    config.parity = state.parity;
    config.n = state.n;
    config
}

pub fn spectrum(n_max: u32, common: &Common) -> Result<(), CliError> {
    let units = units(common)?;
    let mut table = Table::new(vec!["N", "parity", "n", "nu", "k", "e_over_hbar_omega", "energy_exact", "energy"]);
    for total in 0..=n_max {
        let qn = QuantumNumbers::from_total_index(total);
        let level = quantize(qn.parity(), qn.n(), &units);
        table.push(vec![
            Cell::Int(total.into()),
            Cell::Text(qn.parity().to_string()),
            Cell::Int(qn.n().into()),
            Cell::Text(rational(qn.nu())),
            Cell::Text(rational(qn.k())),
            Cell::Text(rational(&level.reduced_energy)),
            Cell::Text(rational(&level.energy_exact)),
            Cell::Float(level.energy),
        ]);
    }
    let mut config = base_config("spectrum", common);
    config.n_max = Some(n_max);
    let doc = json!({ "meta": meta(config), "rows": table.to_json() });
    Ok(emit(common.format, &doc, &table, common.out.as_deref())?)
}

pub fn wavefunction(
    state: &StateArgs,
    half_width: f64,
    points: usize,
    tol: f64,
    common: &Common,
) -> Result<(), CliError> {
    let units = units(common)?;
    let qn = resolve_state(state)?;
    if !(half_width > 0.0 && half_width.is_finite()) || points < 2 {
        return Err(CliError::Usage("grid needs a positive half width and at least 2 points".into()));
    }
    if !(tol > 0.0) {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let ts = build_transform(qn.parity(), qn.n(), ExactScalar::one())?;
    let phi = invert_transform(&ts)?;
    let hermite = match_to_hermite(&phi, &qn)?;
    let ef = normalize(&assemble_wavefunction(&phi, &qn, &units)?, &Quadrature::relative(tol))?;
    let level = quantize(qn.parity(), qn.n(), &units);

    let mut table = Table::new(vec!["x", "psi"]);
    let step = 2.0 * half_width / (points - 1) as f64;
    for i in 0..points {
        // exact endpoints and centre, symmetric nodes
        let x = (i as f64 - (points - 1) as f64 / 2.0) * step;
        table.push(vec![Cell::Float(x), Cell::Float(eval_wavefunction(&ef, x))]);
    }

    let mut config = with_state(base_config("wavefunction", common), state);
    config.grid = Some(GridConfig { half_width, points });
    config.tol = Some(tol);
    let doc = json!({
        "meta": meta(config),
        "state": {
            "N": qn.total_index(),
            "parity": qn.parity().to_string(),
            "n": qn.n(),
            "delta": qn.delta(),
            "k": rational(qn.k()),
            "e_over_hbar_omega": rational(&level.reduced_energy),
            "energy": level.energy,
        },
        "nu": rational(qn.nu()),
        "c0": scalar(ts.c0()),
        "laplace_coefficients": ts.coefficients().iter().map(rational).collect::<Vec<_>>(),
        "phi": phi.terms().iter().map(|(q, c)| json!({ "half_power": q, "coeff": scalar(c) })).collect::<Vec<_>>(),
        "hermite": hermite_explicit(qn.total_index()).coeffs().iter().map(big_integer).collect::<Vec<Value>>(),
        "hermite_constant": scalar(&hermite.constant),
        "normalization": ef.normalization(),
        "samples": table.to_json(),
    });
    Ok(emit(common.format, &doc, &table, common.out.as_deref())?)
}

pub fn laplace(state: &StateArgs, s_values: &[f64], tol: f64, common: &Common) -> Result<(), CliError> {
    let qn = resolve_state(state)?;
    if s_values.is_empty() {
        return Err(CliError::Usage("--s needs at least one value".into()));
    }
    if let Some(bad) = s_values.iter().find(|s| !(**s > 0.0 && s.is_finite())) {
        return Err(CliError::Usage(format!("transform arguments must be positive, got {bad}")));
    }
    if !(tol > 0.0) {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    units(common)?;
    let ts = build_transform(qn.parity(), qn.n(), ExactScalar::one())?;
    let mut table = Table::new(vec!["s", "phi_analytic", "phi_numeric", "rel_err"]);
    for &s in s_values {
        let rt = laplace_roundtrip(&ts, s, tol)?;
        table.push(vec![Cell::Float(s), Cell::Float(rt.analytic), Cell::Float(rt.numeric), Cell::Float(rt.rel_err)]);
    }
    let mut config = with_state(base_config("laplace", common), state);
    config.s = Some(s_values.to_vec());
    config.tol = Some(tol);
    let doc = json!({
        "meta": meta(config),
        "state": { "N": qn.total_index(), "parity": qn.parity().to_string(), "n": qn.n(), "nu": rational(qn.nu()) },
        "rows": table.to_json(),
    });
    Ok(emit(common.format, &doc, &table, common.out.as_deref())?)
}
