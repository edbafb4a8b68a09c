//! Finite-difference Hamiltonian and a Sturm-sequence bisection eigensolver.

use alloc::format;
use alloc::vec::Vec;

use crate::units::Units;
use crate::{Error, Result};

/// Uniform grid on `[−L, L]` with an odd number of nodes, so `x = 0` is one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    half_width: f64,
    points: usize,
    spacing: f64,
}

impl Grid {
    /// Rejects boxes where the Gaussian envelope `exp(−mωL²/2ħ)` at the
    /// walls is not below `1e-12`.
    pub fn new(half_width: f64, points: usize, units: &Units) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidGrid(format!("half width must be positive, got {half_width}")));
        }
        if points < 3 || points.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!("point count must be odd and ≥ 3, got {points}")));
        }
        let wall = libm::exp(-0.5 * units.beta() * half_width * half_width);
        if !(wall < 1e-12) {
            return Err(Error::InvalidGrid(format!("box too small: envelope at ±{half_width} is {wall:e}")));
        }
        Ok(Self { half_width, points, spacing: 2.0 * half_width / (points - 1) as f64 })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn node(&self, i: usize) -> f64 {
        // symmetric about the centre node
        let centre = (self.points - 1) / 2;
        (i as f64 - centre as f64) * self.spacing
    }

    /// Nodes strictly inside the box (the Dirichlet unknowns).
    pub fn interior(&self) -> impl Iterator<Item = f64> + '_ {
        (1..self.points - 1).map(|i| self.node(i))
    }
}

/// Symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diagonal: Vec<f64>,
    off_diagonal: Vec<f64>,
}

impl TridiagonalOperator {
    pub fn new(diagonal: Vec<f64>, off_diagonal: Vec<f64>) -> Result<Self> {
        if diagonal.is_empty() {
            return Err(Error::InvalidOperator("empty diagonal".into()));
        }
        if off_diagonal.len() + 1 != diagonal.len() {
            return Err(Error::InvalidOperator(format!(
                "off-diagonal length {} does not match diagonal length {}",
                off_diagonal.len(),
                diagonal.len()
            )));
        }
        Ok(Self { diagonal, off_diagonal })
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> &[f64] {
        &self.off_diagonal
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    /// Number of eigenvalues strictly below `lambda` (negative LDLᵀ pivots).
    pub fn sturm_count(&self, lambda: f64) -> usize {
        const GUARD: f64 = 1e-300;
        let mut count = 0;
        let mut q = self.diagonal[0] - lambda;
        if q < 0.0 {
            count += 1;
        }
        for (d, e) in self.diagonal[1..].iter().zip(&self.off_diagonal) {
            let pivot = if q.abs() < GUARD { GUARD.copysign(q) } else { q };
            q = (d - lambda) - e * e / pivot;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let radius = |i: usize| {
            let left = if i > 0 { self.off_diagonal[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off_diagonal[i].abs() } else { 0.0 };
            left + right
        };
        (0..n).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), i| {
            (lo.min(self.diagonal[i] - radius(i)), hi.max(self.diagonal[i] + radius(i)))
        })
    }

    /// Unit eigenvector for an eigenvalue estimate, by inverse iteration.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.dim();
        let scale = self.diagonal.iter().fold(1.0f64, |m, d| m.max(d.abs()));
        let shift = lambda + 1e-10 * scale;
        let mut v = alloc::vec![1.0; n];
        for _ in 0..4 {
            v = self.solve_shifted(shift, &v);
            let norm = libm::sqrt(v.iter().map(|x| x * x).sum::<f64>());
            v.iter_mut().for_each(|x| *x /= norm);
        }
        v
    }

    /// Thomas algorithm for `(T − shift·I) x = rhs`.
    fn solve_shifted(&self, shift: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.dim();
        let mut c = alloc::vec![0.0; n];
        let mut d = alloc::vec![0.0; n];
        let nonzero = |x: f64| if x == 0.0 { 1e-300 } else { x };
        let mut denom = nonzero(self.diagonal[0] - shift);
        if n > 1 {
            c[0] = self.off_diagonal[0] / denom;
        }
        d[0] = rhs[0] / denom;
        for i in 1..n {
            let e = self.off_diagonal[i - 1];
            denom = nonzero(self.diagonal[i] - shift - e * c[i - 1]);
            if i + 1 < n {
                c[i] = self.off_diagonal[i] / denom;
            }
            d[i] = (rhs[i] - e * d[i - 1]) / denom;
        }
        for i in (0..n - 1).rev() {
            d[i] -= c[i] * d[i + 1];
        }
        d
    }
}

/// Central second difference on the interior nodes, Dirichlet at `±L`:
/// `diag = ħ²/(m h²) + ½mω²x²`, `off = −ħ²/(2m h²)`.
pub fn fd_hamiltonian(grid: &Grid, units: &Units) -> TridiagonalOperator {
    let h = grid.spacing();
    let kinetic = units.hbar() * units.hbar() / (units.mass() * h * h);
    let spring = 0.5 * units.mass() * units.omega() * units.omega();
    let diagonal: Vec<f64> = grid.interior().map(|x| kinetic + spring * x * x).collect();
    let off_diagonal = alloc::vec![-0.5 * kinetic; diagonal.len() - 1];
    TridiagonalOperator { diagonal, off_diagonal }
}

/// The `count` smallest eigenvalues, ascending, each bracketed to width `tol`.
pub fn lowest_eigenvalues(op: &TridiagonalOperator, count: usize, tol: f64) -> Result<Vec<f64>> {
    if count == 0 || count > op.dim() {
        return Err(Error::InvalidArgument(format!("count must be in 1..={}", op.dim())));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let (g_lo, g_hi) = op.gershgorin();
    let pad = 1e-12 * (g_hi - g_lo).abs().max(1.0);
    let (g_lo, g_hi) = (g_lo - pad, g_hi + pad);
    let mut out = Vec::with_capacity(count);
    let mut floor = g_lo;
    for index in 0..count {
        // invariant: sturm_count(lo) ≤ index < sturm_count(hi)
        let (mut lo, mut hi) = (floor, g_hi);
        let mut iterations = 0;
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if op.sturm_count(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
            iterations += 1;
            if iterations > 400 {
                return Err(Error::EigenNonConvergence { index });
            }
        }
        if hi - lo > tol && hi - lo > 4.0 * f64::EPSILON * hi.abs().max(lo.abs()) {
            return Err(Error::EigenNonConvergence { index });
        }
        floor = lo;
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}

/// Sign changes of a sampled function, skipping entries below `rel_floor · max|v|`.
pub fn sign_changes(values: &[f64], rel_floor: f64) -> usize {
    let max = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut last = 0.0f64;
    let mut changes = 0;
    for &v in values.iter().filter(|v| v.abs() > rel_floor * max) {
        if last != 0.0 && v.signum() != last.signum() {
            changes += 1;
        }
        last = v;
    }
    changes
}
