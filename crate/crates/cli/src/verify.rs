//! The `verify` command: every consistency family over a range of states.

use laplace_qho::oracle::{
    asymptotic_large_s, asymptotic_large_xi, asymptotic_small_s, fd_hamiltonian, inner_product, laplace_roundtrip,
    lowest_eigenvalues, Grid, Quadrature,
};
use laplace_qho::series::{recurrence_coefficients, EvenFactor};
use laplace_qho::{
    assemble_wavefunction, coefficients_closed_form, exact::rational_to_f64, hermite::expected_hermite_constant,
    hermite_explicit, invert_transform, match_to_hermite, normalize, schrodinger_residual, verify_ode_identity,
    Eigenfunction, ExactScalar, QuantumNumbers, TransformSeries, Units,
};
use serde::Serialize;
use serde_json::json;

use crate::args::{Common, EvenFactorArg};
use crate::commands::{units, units_config};
use crate::config::{GridConfig, RunConfig};
use crate::error::CliError;
use crate::output::{emit, meta, Cell, Table};

const EIGEN_TOL: f64 = 1e-11;
const FD_TOL: f64 = 2e-4;
const RATIO_RANGE: (f64, f64) = (3.5, 4.5);
const NORM_TOL: f64 = 1e-13;
const LAPLACE_TOL: f64 = 1e-8;
const ASYMPTOTIC_TOL: f64 = 1e-6;
// the verdict is read at the last (most extreme) probe of each list
const SMALL_S: [f64; 3] = [1e-6, 1e-8, 1e-10];
const LARGE_S: [f64; 3] = [1e6, 1e8, 1e10];
const LARGE_XI: [f64; 3] = [1e6, 1e8, 1e10];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    /// Inclusive range of the total index `N` covered.
    pub n_range: [u32; 2],
    pub status: Status,
    pub worst_error: f64,
    pub detail: String,
    #[serde(skip)]
    pub converged: bool,
}

impl CheckResult {
    fn new(name: &'static str, n_max: u32, passed: bool, worst_error: f64, detail: String) -> Self {
        let status = if passed { Status::Pass } else { Status::Fail };
        Self { name, n_range: [0, n_max], status, worst_error, detail, converged: true }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n_max: u32,
    pub half_width: f64,
    pub points: usize,
    pub tol: f64,
    pub s: Vec<f64>,
    pub factor: EvenFactor,
    pub units: Units,
}

type Outcome = laplace_qho::Result<CheckResult>;

fn states(n_max: u32) -> impl Iterator<Item = QuantumNumbers> {
    (0..=n_max).map(QuantumNumbers::from_total_index)
}

fn series(opts: &VerifyOptions, qn: &QuantumNumbers) -> laplace_qho::Result<TransformSeries> {
    let coeffs = recurrence_coefficients(opts.factor, qn.parity(), qn.n());
    TransformSeries::from_parts(qn.clone(), coeffs, ExactScalar::one())
}

fn recurrence_closed_form(opts: &VerifyOptions) -> Outcome {
    let (mut worst, mut bad) = (0.0f64, Vec::new());
    for qn in states(opts.n_max) {
        let rec = recurrence_coefficients(opts.factor, qn.parity(), qn.n());
        let closed = coefficients_closed_form(qn.parity(), qn.n());
        let mut differs = false;
        for (a, b) in rec.iter().zip(&closed) {
            if a != b {
                differs = true;
                worst = worst.max(rational_to_f64(&(a - b)).abs() / rational_to_f64(b).abs());
            }
        }
        if differs {
            bad.push(qn.total_index());
        }
    }
    Ok(CheckResult::new("recurrence_closed_form", opts.n_max, bad.is_empty(), worst, describe(&bad, "exact match")))
}

fn ode_identity(opts: &VerifyOptions) -> Outcome {
    let (mut worst, mut bad) = (0.0f64, Vec::new());
    for qn in states(opts.n_max) {
        if let Some((_, coeff)) = verify_ode_identity(&series(opts, &qn)?).residual {
            worst = worst.max(rational_to_f64(&coeff).abs());
            bad.push(qn.total_index());
        }
    }
    Ok(CheckResult::new("ode_identity", opts.n_max, bad.is_empty(), worst, describe(&bad, "exact identity")))
}

fn hermite_match(opts: &VerifyOptions) -> Outcome {
    let (mut worst, mut bad) = (0.0f64, Vec::new());
    for qn in states(opts.n_max) {
        let ts = series(opts, &qn)?;
        let phi = invert_transform(&ts)?;
        let expected = expected_hermite_constant(qn.parity(), qn.n(), ts.c0());
        let matched = match_to_hermite(&phi, &qn).is_ok_and(|m| m.constant == expected);
        if !matched {
            // coefficientwise distance to the predicted multiple of H_N
            let h = hermite_explicit(qn.total_index());
            let lambda = expected.to_f64();
            let top = (lambda * rational_to_f64(&h.coeffs().last().cloned().unwrap_or_default().into())).abs();
            let mut dist = 0.0f64;
            for (q, hq) in h.coeffs().iter().enumerate() {
                let want = lambda * rational_to_f64(&hq.clone().into());
                dist = dist.max((phi.coefficient(q as u32).to_f64() - want).abs() / top);
            }
            worst = worst.max(dist);
            bad.push(qn.total_index());
        }
    }
    Ok(CheckResult::new("hermite_match", opts.n_max, bad.is_empty(), worst, describe(&bad, "exact multiple of H_N")))
}

fn eigenfunction(opts: &VerifyOptions, qn: &QuantumNumbers) -> laplace_qho::Result<Eigenfunction> {
    assemble_wavefunction(&invert_transform(&series(opts, qn)?)?, qn, &opts.units)
}

fn schrodinger(opts: &VerifyOptions) -> Outcome {
    let (mut worst, mut bad) = (0.0f64, Vec::new());
    for qn in states(opts.n_max) {
        let ef = eigenfunction(opts, &qn)?;
        let residual = schrodinger_residual(&ef)?;
        if !residual.is_zero() {
            let scale = ef.poly_x().terms().iter().fold(0.0f64, |m, (_, c)| m.max(c.to_f64().abs()));
            let r = residual.terms().iter().fold(0.0f64, |m, (_, c)| m.max(c.to_f64().abs()));
            worst = worst.max(r / (scale * opts.units.hbar() * opts.units.omega()));
            bad.push(qn.total_index());
        }
    }
    Ok(CheckResult::new(
        "schrodinger_residual",
        opts.n_max,
        bad.is_empty(),
        worst,
        describe(&bad, "exact zero residual"),
    ))
}

fn orthonormality(opts: &VerifyOptions) -> Outcome {
    let quad = Quadrature::relative(NORM_TOL);
    let efs = states(opts.n_max)
        .map(|qn| normalize(&eigenfunction(opts, &qn)?, &quad))
        .collect::<laplace_qho::Result<Vec<_>>>()?;
    let (mut worst, mut worst_pair) = (0.0f64, (0, 0));
    for (m, a) in efs.iter().enumerate() {
        for (n, b) in efs.iter().enumerate().skip(m) {
            let target = if m == n { 1.0 } else { 0.0 };
            let err = (inner_product(a, b, opts.tol * 1e-2)? - target).abs();
            if err > worst {
                worst = err;
                worst_pair = (m, n);
            }
        }
    }
    let detail = format!("max |<m|n> - delta_mn| at (m, n) = {worst_pair:?}, tolerance {:e}", opts.tol);
    Ok(CheckResult::new("orthonormality", opts.n_max, worst < opts.tol, worst, detail))
}

fn fd_oracle(opts: &VerifyOptions) -> Outcome {
    let coarse = Grid::new(opts.half_width, opts.points, &opts.units)?;
    let fine = Grid::new(opts.half_width, 2 * opts.points - 1, &opts.units)?;
    let count = opts.n_max as usize + 1;
    let e_h = lowest_eigenvalues(&fd_hamiltonian(&coarse, &opts.units), count, EIGEN_TOL)?;
    let e_h2 = lowest_eigenvalues(&fd_hamiltonian(&fine, &opts.units), count, EIGEN_TOL)?;
    let hw = opts.units.hbar() * opts.units.omega();
    let (mut raw_worst, mut extrapolated_worst) = (0.0f64, 0.0f64);
    let (mut ratio_lo, mut ratio_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut above_tol = Vec::new();
    for (i, (a, b)) in e_h.iter().zip(&e_h2).enumerate() {
        let exact = (i as f64 + 0.5) * hw;
        let raw = (a - exact).abs() / hw;
        let ratio = (a - exact) / (b - exact);
        let extrapolated = ((4.0 * b - a) / 3.0 - exact).abs() / hw;
        raw_worst = raw_worst.max(raw);
        extrapolated_worst = extrapolated_worst.max(extrapolated);
        ratio_lo = ratio_lo.min(ratio);
        ratio_hi = ratio_hi.max(ratio);
        if raw > FD_TOL {
            above_tol.push(i);
        }
    }
    let second_order = ratio_lo >= RATIO_RANGE.0 && ratio_hi <= RATIO_RANGE.1;
    let passed = second_order && extrapolated_worst < FD_TOL;
    let detail = format!(
        "h = {:e}: worst |E_h - E|/hbar*omega = {raw_worst:.3e} (above {FD_TOL:e} for N in {above_tol:?}); \
         error ratio h vs h/2 in [{ratio_lo:.4}, {ratio_hi:.4}]; Richardson-extrapolated error {extrapolated_worst:.3e}",
        coarse.spacing()
    );
    Ok(CheckResult::new("fd_oracle", opts.n_max, passed, raw_worst, detail))
}

fn laplace(opts: &VerifyOptions) -> Outcome {
    let (mut worst, mut bad) = (0.0f64, Vec::new());
    for qn in states(opts.n_max) {
        let ts = series(opts, &qn)?;
        for &s in &opts.s {
            let rt = laplace_roundtrip(&ts, s, LAPLACE_TOL)?;
            worst = worst.max(rt.rel_err);
            if !(rt.rel_err < LAPLACE_TOL) && bad.last() != Some(&qn.total_index()) {
                bad.push(qn.total_index());
            }
        }
    }
    Ok(CheckResult::new(
        "laplace_roundtrip",
        opts.n_max,
        bad.is_empty(),
        worst,
        describe(&bad, "relative error below 1e-8"),
    ))
}

fn asymptotics(opts: &VerifyOptions) -> Outcome {
    let (mut worst, mut bad) = (0.0f64, Vec::new());
    for qn in states(opts.n_max) {
        let ts = series(opts, &qn)?;
        let reports = [
            asymptotic_small_s(&ts, &SMALL_S, ASYMPTOTIC_TOL)?,
            asymptotic_large_s(&ts, &LARGE_S, ASYMPTOTIC_TOL)?,
            asymptotic_large_xi(&ts, &LARGE_XI, ASYMPTOTIC_TOL)?,
        ];
        for r in &reports {
            worst = worst.max(r.final_drift());
        }
        if !reports.iter().all(|r| r.passed) {
            bad.push(qn.total_index());
        }
    }
    let detail = describe(
        &bad,
        &format!(
            "drift below {ASYMPTOTIC_TOL:e} at s = {:e}, s = {:e}, xi = {:e}",
            SMALL_S[2], LARGE_S[2], LARGE_XI[2]
        ),
    );
    Ok(CheckResult::new("asymptotics", opts.n_max, bad.is_empty(), worst, detail))
}

fn describe(bad: &[u32], ok: &str) -> String {
    if bad.is_empty() {
        format!("{ok} for every state")
    } else {
        format!("failing N: {bad:?}")
    }
}

type Family = (&'static str, fn(&VerifyOptions) -> Outcome);

const FAMILIES: [Family; 8] = [
    ("recurrence_closed_form", recurrence_closed_form),
    ("ode_identity", ode_identity),
    ("hermite_match", hermite_match),
    ("schrodinger_residual", schrodinger),
    ("orthonormality", orthonormality),
    ("fd_oracle", fd_oracle),
    ("laplace_roundtrip", laplace),
    ("asymptotics", asymptotics),
];

/// Runs all families concurrently; the result order is fixed. A family whose
/// numerics do not converge is reported as failed, not dropped.
pub fn run_checks(opts: &VerifyOptions) -> laplace_qho::Result<Vec<CheckResult>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = FAMILIES.iter().map(|(name, f)| (*name, scope.spawn(move || f(opts)))).collect();
        handles
            .into_iter()
            .map(|(name, h)| match h.join().expect("check thread panicked") {
                Err(e) if e.is_non_convergence() => {
                    let mut c = CheckResult::new(name, opts.n_max, false, f64::NAN, format!("did not converge: {e}"));
                    c.converged = false;
                    Ok(c)
                }
                other => other,
            })
            .collect()
    })
}

#[allow(clippy::too_many_arguments)]
pub fn verify(
    n_max: u32,
    half_width: f64,
    points: usize,
    tol: f64,
    s: &[f64],
    even_factor: EvenFactorArg,
    common: &Common,
) -> Result<(), CliError> {
    let units = units(common)?;
    if !(tol > 0.0) {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    if s.is_empty() || s.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
        return Err(CliError::Usage("--s needs positive values".into()));
    }
    // reject an unusable box before spending time on the exact checks
    Grid::new(half_width, points, &units).map_err(|e| CliError::Usage(e.to_string()))?;
    if n_max as usize + 1 > points - 2 {
        return Err(CliError::Usage("--n-max exceeds the number of grid unknowns".into()));
    }
    let factor = match even_factor {
        EvenFactorArg::Consistent => EvenFactor::Consistent,
        EvenFactorArg::OffByOne => EvenFactor::OffByOne,
    };
    let opts = VerifyOptions { n_max, half_width, points, tol, s: s.to_vec(), factor, units };
    let checks = run_checks(&opts)?;

    let mut table = Table::new(vec!["name", "n_min", "n_max", "status", "worst_error", "detail"]);
    for c in &checks {
        table.push(vec![
            Cell::Text(c.name.into()),
            Cell::Int(c.n_range[0].into()),
            Cell::Int(c.n_range[1].into()),
            Cell::Text(if c.status == Status::Pass { "pass" } else { "fail" }.into()),
            Cell::Float(c.worst_error),
            Cell::Text(c.detail.clone()),
        ]);
    }
    let config = RunConfig {
        command: "verify",
        n_max: Some(n_max),
        total_index: None,
        parity: None,
        n: None,
        units: units_config(common),
        grid: Some(GridConfig { half_width, points }),
        tol: Some(tol),
        s: Some(s.to_vec()),
        even_factor: Some(even_factor),
        format: common.format,
    };
    let doc = json!({ "meta": meta(config), "checks": checks });
    emit(common.format, &doc, &table, common.out.as_deref())?;

    let stalled: Vec<&str> = checks.iter().filter(|c| !c.converged).map(|c| c.name).collect();
    if !stalled.is_empty() {
        return Err(CliError::NonConvergence(stalled.join(", ")));
    }
    let failed: Vec<&str> = checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::VerificationFailed(failed.join(", ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(factor: EvenFactor) -> VerifyOptions {
        VerifyOptions {
            n_max: 4,
            half_width: 10.0,
            points: 401,
            tol: 1e-10,
            s: vec![0.5, 2.0],
            factor,
            units: Units::dimensionless(),
        }
    }

    #[test]
    fn order_is_fixed() {
        let names: Vec<_> = run_checks(&opts(EvenFactor::Consistent)).unwrap().iter().map(|c| c.name).collect();
        assert_eq!(
            names,
            [
                "recurrence_closed_form",
                "ode_identity",
                "hermite_match",
                "schrodinger_residual",
                "orthonormality",
                "fd_oracle",
                "laplace_roundtrip",
                "asymptotics"
            ]
        );
    }

    #[test]
    fn off_by_one_breaks_exact_families() {
        let checks = run_checks(&opts(EvenFactor::OffByOne)).unwrap();
        let status = |name: &str| checks.iter().find(|c| c.name == name).unwrap().status;
        assert_eq!(status("ode_identity"), Status::Fail);
        assert_eq!(status("hermite_match"), Status::Fail);
        assert_eq!(status("recurrence_closed_form"), Status::Fail);
    }
}
