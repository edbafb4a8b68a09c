//! Acceptance criteria, one PASS/FAIL line each, at their stated tolerances.
//!
//! Runs without the libtest harness so the verdict table is always printed;
//! the process fails if any criterion fails.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use laplace_qho::oracle::{
    asymptotic_large_s, asymptotic_small_s, fd_hamiltonian, inner_product, laplace_roundtrip, lowest_eigenvalues, Grid,
    Quadrature,
};
use laplace_qho::series::{recurrence_coefficients, EvenFactor};
use laplace_qho::{
    assemble_wavefunction, boundary_exponent, build_transform, coefficients_closed_form, eval_wavefunction,
    invert_transform, match_to_hermite, normalize, recurrence_step, schrodinger_residual, verify_ode_identity,
    BigRational, Eigenfunction, ExactScalar, Parity, QuantumNumbers, TransformSeries, Units,
};
use num_bigint::BigInt;
use serde_json::Value;

const PARITIES: [Parity; 2] = [Parity::Even, Parity::Odd];

struct Verdict {
    passed: bool,
    detail: String,
}

impl Verdict {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self { passed, detail: detail.into() }
    }
}

type Outcome = Result<Verdict, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn series(parity: Parity, n: u32) -> Result<TransformSeries, String> {
    build_transform(parity, n, ExactScalar::one()).map_err(|e| e.to_string())
}

fn eigenfunction(total: u32, units: &Units) -> Result<Eigenfunction, String> {
    let qn = QuantumNumbers::from_total_index(total);
    let ts = series(qn.parity(), qn.n())?;
    let phi = invert_transform(&ts).map_err(|e| e.to_string())?;
    assemble_wavefunction(&phi, &qn, units).map_err(|e| e.to_string())
}

fn within(elapsed: Duration, limit_s: f64) -> (bool, String) {
    let secs = elapsed.as_secs_f64();
    (secs < limit_s, format!("{secs:.3} s (limit {limit_s} s)"))
}

fn spectrum_exactness() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_laplace-qho"))
        .args(["spectrum", "--n-max", "50"])
        .output()
        .map_err(|e| e.to_string())?;
    let (fast, timing) = within(start.elapsed(), 1.0);
    if !out.status.success() {
        return Ok(Verdict::new(false, format!("exit status {}", out.status)));
    }
    let doc: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let rows = doc["rows"].as_array().ok_or("no rows")?;
    let wrong: Vec<usize> = (0..=50usize)
        .filter(|&n| rows.get(n).map(|r| &r["e_over_hbar_omega"]) != Some(&Value::from(format!("{}/2", 2 * n + 1))))
        .collect();
    let complete = rows.len() == 51 && wrong.is_empty();
    Ok(Verdict::new(complete && fast, format!("{} rows, mismatches at {wrong:?}; {timing}", rows.len())))
}

fn recurrence_equivalence() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for parity in PARITIES {
        for n in 0..=100 {
            let mut iterated = vec![BigRational::from_integer(1.into())];
            for j in 0..n {
                let next = recurrence_step(parity, n, j, &iterated[j as usize]).map_err(|e| e.to_string())?;
                iterated.push(next);
            }
            if iterated != coefficients_closed_form(parity, n) {
                mismatches.push((parity, n));
            }
        }
    }
    let (fast, timing) = within(start.elapsed(), 5.0);
    Ok(Verdict::new(mismatches.is_empty() && fast, format!("402 series compared, mismatches {mismatches:?}; {timing}")))
}

fn ode_identity() -> Outcome {
    let mut broken = Vec::new();
    for parity in PARITIES {
        for n in 0..=50 {
            if !verify_ode_identity(&series(parity, n)?).holds() {
                broken.push((parity, n));
            }
        }
    }
    // negative control: the even factor −(n − j + 1/2)/(j + 1)
    let mut control_passes = Vec::new();
    for n in 1..=50 {
        let coeffs = recurrence_coefficients(EvenFactor::OffByOne, Parity::Even, n);
        let ts = TransformSeries::from_parts(QuantumNumbers::new(Parity::Even, n), coeffs, ExactScalar::one())
            .map_err(|e| e.to_string())?;
        if verify_ode_identity(&ts).holds() {
            control_passes.push(n);
        }
    }
    Ok(Verdict::new(
        broken.is_empty() && control_passes.is_empty(),
        format!("identity fails for {broken:?}; off-by-one control holds (should not) for n in {control_passes:?}"),
    ))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

fn hermite_reconstruction() -> Outcome {
    let mut wrong = Vec::new();
    for parity in PARITIES {
        for n in 0..=25 {
            // Γ(n+1/2)/((2n)!√π) = 1/(4^n n!);  n!/((2n+1)!√π) keeps its π^{-1/2}
            let expected = match parity {
                Parity::Even => ExactScalar::new(BigRational::new(1.into(), BigInt::from(4).pow(n) * factorial(n)), 0),
                Parity::Odd => ExactScalar::new(BigRational::new(factorial(n), factorial(2 * n + 1)), -1),
            };
            let ts = series(parity, n)?;
            let phi = invert_transform(&ts).map_err(|e| e.to_string())?;
            match match_to_hermite(&phi, ts.qn()) {
                Ok(m) if m.constant == expected => {}
                _ => wrong.push((parity, n)),
            }
        }
    }
    Ok(Verdict::new(wrong.is_empty(), format!("52 states, exact mismatches {wrong:?}")))
}

fn schrodinger() -> Outcome {
    let start = Instant::now();
    let systems = [
        Units::dimensionless(),
        Units::new(2.0, 0.5, 3.0).map_err(|e| e.to_string())?,
        Units::new(1.0545718e-34, 9.1093837e-31, 1e15).map_err(|e| e.to_string())?,
    ];
    let mut nonzero = Vec::new();
    for (i, units) in systems.iter().enumerate() {
        for total in 0..=40 {
            let ef = eigenfunction(total, units)?;
            if !schrodinger_residual(&ef).map_err(|e| e.to_string())?.is_zero() {
                nonzero.push((i, total));
            }
        }
    }
    let (fast, timing) = within(start.elapsed(), 10.0);
    Ok(Verdict::new(
        nonzero.is_empty() && fast,
        format!("N ≤ 40 in 3 unit systems, nonzero residuals {nonzero:?}; {timing}"),
    ))
}

fn laplace_roundtrip_check() -> Outcome {
    let mut worst = 0.0f64;
    let mut failing = Vec::new();
    let mut zeros = Vec::new();
    for parity in PARITIES {
        for n in 0..=8 {
            let ts = series(parity, n)?;
            for s in [0.5, 1.0, 1.5, 3.0] {
                // at an exact zero of Φ the error is taken relative to Σ|terms|
                if ts.vanishes_at(s) {
                    zeros.push((parity, n, s));
                }
                let rt = laplace_roundtrip(&ts, s, 1e-8).map_err(|e| e.to_string())?;
                worst = worst.max(rt.rel_err);
                if !(rt.rel_err < 1e-8) {
                    failing.push((parity, n, s));
                }
            }
        }
    }
    Ok(Verdict::new(
        failing.is_empty(),
        format!(
            "worst relative error {worst:.2e}, failing {failing:?}; {} exact zeros of the transform scored against the term-magnitude sum",
            zeros.len()
        ),
    ))
}

fn asymptotics() -> Outcome {
    let (mut worst_small, mut worst_large) = (0.0f64, 0.0f64);
    let (mut small_fail, mut large_fail) = (Vec::new(), Vec::new());
    for parity in PARITIES {
        for n in 0..=10 {
            let ts = series(parity, n)?;
            let small = asymptotic_small_s(&ts, &[1e-6], 1e-6).map_err(|e| e.to_string())?;
            let large = asymptotic_large_s(&ts, &[1e8], 1e-6).map_err(|e| e.to_string())?;
            worst_small = worst_small.max(small.final_drift());
            worst_large = worst_large.max(large.final_drift());
            if !small.passed {
                small_fail.push(format!("{parity} {n}"));
            }
            if !large.passed {
                large_fail.push(format!("{parity} {n}"));
            }
        }
    }
    Ok(Verdict::new(
        small_fail.is_empty() && large_fail.is_empty(),
        format!(
            "s=1e-6: worst drift {worst_small:.2e}, failing [{}]; s=1e8: worst drift {worst_large:.2e}, failing [{}]",
            small_fail.join(", "),
            large_fail.join(", ")
        ),
    ))
}

fn fd_oracle() -> Outcome {
    let start = Instant::now();
    let units = Units::dimensionless();
    let eigen = |points: usize| -> Result<Vec<f64>, String> {
        let grid = Grid::new(10.0, points, &units).map_err(|e| e.to_string())?;
        lowest_eigenvalues(&fd_hamiltonian(&grid, &units), 11, 1e-11).map_err(|e| e.to_string())
    };
    let coarse = eigen(2001)?;
    let fine = eigen(4001)?;
    let mut worst = 0.0f64;
    let mut over = Vec::new();
    let (mut ratio_lo, mut ratio_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for (total, (a, b)) in coarse.iter().zip(&fine).enumerate() {
        let exact = total as f64 + 0.5;
        let err = (a - exact).abs();
        worst = worst.max(err);
        if !(err < 2e-4) {
            over.push(format!("N={total}: {err:.2e}"));
        }
        let ratio = (a - exact) / (b - exact);
        ratio_lo = ratio_lo.min(ratio);
        ratio_hi = ratio_hi.max(ratio);
    }
    let second_order = ratio_lo >= 3.5 && ratio_hi <= 4.5;
    let (fast, timing) = within(start.elapsed(), 30.0);
    Ok(Verdict::new(
        over.is_empty() && second_order && fast,
        format!(
            "worst |E_h − (N+1/2)| = {worst:.2e}, above 2e-4: [{}]; error ratio in [{ratio_lo:.4}, {ratio_hi:.4}]; {timing}",
            over.join(", ")
        ),
    ))
}

fn orthonormality() -> Outcome {
    let units = Units::dimensionless();
    let quad = Quadrature::relative(1e-13);
    let states = (0..=15)
        .map(|total| normalize(&eigenfunction(total, &units)?, &quad).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let mut worst = (0.0f64, 0, 0);
    for (m, a) in states.iter().enumerate() {
        for (n, b) in states.iter().enumerate() {
            let delta = if m == n { 1.0 } else { 0.0 };
            let err = (inner_product(a, b, 1e-12).map_err(|e| e.to_string())? - delta).abs();
            if err > worst.0 {
                worst = (err, m, n);
            }
        }
    }
    let a0_err = (states[0].normalization() - std::f64::consts::PI.powf(-0.25)).abs();
    Ok(Verdict::new(
        worst.0 < 1e-10 && a0_err < 1e-10,
        format!("max |<m|n> − δ| = {:.2e} at ({}, {}); |A_0 − π^(-1/4)| = {a0_err:.2e}", worst.0, worst.1, worst.2),
    ))
}

fn boundary_behaviour() -> Outcome {
    let units = Units::dimensionless();
    let mut wrong = Vec::new();
    for parity in PARITIES {
        for n in 0..=25 {
            let qn = QuantumNumbers::new(parity, n);
            let ef = eigenfunction(qn.total_index(), &units)?;
            let expected = u32::from(parity == Parity::Odd);
            let origin_ok = parity == Parity::Even || eval_wavefunction(&ef, 0.0) == 0.0;
            if boundary_exponent(&ef) != expected || !origin_ok {
                wrong.push((parity, n));
            }
        }
    }
    Ok(Verdict::new(wrong.is_empty(), format!("52 states, wrong exponent or nonzero ψ(0) for {wrong:?}")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("spectrum exactness", spectrum_exactness),
        ("recurrence / closed-form equivalence", recurrence_equivalence),
        ("transform ODE identity", ode_identity),
        ("Hermite reconstruction", hermite_reconstruction),
        ("Schrödinger residual", schrodinger),
        ("Laplace round-trip", laplace_roundtrip_check),
        ("asymptotics", asymptotics),
        ("finite-difference oracle", fd_oracle),
        ("orthonormality", orthonormality),
        ("boundary behaviour", boundary_behaviour),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let verdict = check().unwrap_or_else(|e| Verdict::new(false, format!("error: {e}")));
        if !verdict.passed {
            failed += 1;
        }
        let mark = if verdict.passed { "PASS" } else { "FAIL" };
        println!("{mark} criterion {:>2} {name}: {}", i + 1, verdict.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
