//! Adaptive Simpson quadrature.

use crate::{Error, Result};

/// Adaptive Simpson rule with a combined absolute/relative target.
///
/// The interval is first cut into `initial_panels` equal panels so narrow
/// features are not missed by the coarsest rule; each panel is then bisected
/// depth-first, left before right, so results are reproducible. Targets
/// below what rounding allows end in non-convergence once `max_evals`
/// integrand calls are spent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
    pub initial_panels: u32,
    pub max_evals: u64,
}

impl Quadrature {
    pub fn new(tol: f64) -> Self {
        Self { abs_tol: tol, rel_tol: tol, max_depth: 48, initial_panels: 64, max_evals: 2_000_000 }
    }

    pub fn absolute(tol: f64) -> Self {
        Self { rel_tol: 0.0, ..Self::new(tol) }
    }

    pub fn relative(tol: f64) -> Self {
        Self { abs_tol: 0.0, ..Self::new(tol) }
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<f64> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidArgument(alloc::format!("bad interval [{a}, {b}]")));
        }
        if !(self.abs_tol >= 0.0 && self.rel_tol >= 0.0 && self.abs_tol + self.rel_tol > 0.0) {
            return Err(Error::InvalidArgument("quadrature tolerance must be positive".into()));
        }
        let panels = self.initial_panels.max(1);
        let width = (b - a) / f64::from(panels);
        let mut coarse = alloc::vec::Vec::with_capacity(panels as usize);
        let mut magnitude = 0.0;
        for i in 0..panels {
            let lo = a + width * f64::from(i);
            let hi = if i + 1 == panels { b } else { lo + width };
            let mid = 0.5 * (lo + hi);
            let (flo, fmid, fhi) = (f(lo), f(mid), f(hi));
            let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
            magnitude += (hi - lo) / 6.0 * (flo.abs() + 4.0 * fmid.abs() + fhi.abs());
            coarse.push(Panel { lo, hi, flo, fmid, fhi, whole });
        }
        if !magnitude.is_finite() {
            return Err(Error::QuadratureNonConvergence { a, b });
        }
        let target = self.abs_tol.max(self.rel_tol * magnitude);
        let per_panel = target / f64::from(panels);
        let mut total = 0.0;
        let mut budget = self.max_evals.saturating_sub(3 * u64::from(panels));
        for p in coarse {
            total += self.refine(&f, p, per_panel, 0, &mut budget).ok_or(Error::QuadratureNonConvergence { a, b })?;
        }
        Ok(total)
    }

    fn refine<F: Fn(f64) -> f64>(&self, f: &F, p: Panel, tol: f64, depth: u32, budget: &mut u64) -> Option<f64> {
        *budget = budget.checked_sub(2)?;
        let Panel { lo, hi, flo, fmid, fhi, whole } = p;
        let mid = 0.5 * (lo + hi);
        let (lm, rm) = (0.5 * (lo + mid), 0.5 * (mid + hi));
        let (flm, frm) = (f(lm), f(rm));
        let left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
        let right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
        let refined = left + right;
        let diff = refined - whole;
        if !diff.is_finite() {
            return None;
        }
        // below this the difference is rounding noise
        let floor = 1e-15 * (hi - lo) * (flo.abs() + flm.abs() + fmid.abs() + frm.abs() + fhi.abs());
        if depth >= 2 && diff.abs() <= (15.0 * tol).max(floor) {
            return Some(refined + diff / 15.0);
        }
        if depth >= self.max_depth {
            return None;
        }
        let l = self.refine(
            f,
            Panel { lo, hi: mid, flo, fmid: flm, fhi: fmid, whole: left },
            tol / 2.0,
            depth + 1,
            budget,
        )?;
        let r = self.refine(
            f,
            Panel { lo: mid, hi, flo: fmid, fmid: frm, fhi, whole: right },
            tol / 2.0,
            depth + 1,
            budget,
        )?;
        Some(l + r)
    }
}

#[derive(Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    flo: f64,
    fmid: f64,
    fhi: f64,
    whole: f64,
}

/// `∫_a^b f` to tolerance `tol` (absolute or relative, whichever is looser).
pub fn quadrature<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    Quadrature::new(tol).integrate(f, a, b)
}
