//! Adaptive Simpson quadrature.

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 50;

/// Integral estimate with the accumulated error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Integrate `f` over `[a, b]` to absolute tolerance `tol`.
///
/// The interval is first split into `initial_panels` equal pieces, each
/// refined recursively with Richardson-corrected Simpson estimates. The
/// recursion order is fixed, so the result is reproducible bit for bit.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64, initial_panels: usize) -> Result<Quadrature>
where
    F: Fn(f64) -> f64,
{
    if !(tol > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!(
            "invalid quadrature setup: [{a}, {b}] tol {tol}"
        )));
    }
    let panels = initial_panels.max(1);
    let width = (b - a) / panels as f64;
    let panel_tol = tol / panels as f64;
    let mut state = State {
        evaluations: 0,
        error: 0.0,
        converged: true,
    };
    let mut pieces = Vec::with_capacity(panels);
    for i in 0..panels {
        let lo = a + width * i as f64;
        let hi = if i + 1 == panels { b } else { lo + width };
        let mid = 0.5 * (lo + hi);
        let (flo, fmid, fhi) = (f(lo), f(mid), f(hi));
        state.evaluations += 3;
        let whole = simpson(lo, hi, flo, fmid, fhi);
        pieces.push(recurse(&f, lo, hi, flo, fmid, fhi, whole, panel_tol, MAX_DEPTH, &mut state));
    }
    let total = compensated_sum(pieces);
    if !state.converged || !total.is_finite() {
        return Err(Error::Accuracy {
            estimate: total,
            error_estimate: state.error,
            tolerance: tol,
        });
    }
    Ok(Quadrature {
        value: total,
        error_estimate: state.error,
        evaluations: state.evaluations,
    })
}

/// Neumaier-compensated sum; the result does not depend on how large the
/// partial sums grow relative to the terms.
pub fn compensated_sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for x in terms {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

struct State {
    evaluations: usize,
    error: f64,
    converged: bool,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    state: &mut State,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    state.evaluations += 2;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        state.error += delta.abs() / 15.0;
        return left + right + delta / 15.0;
    }
    if depth == 0 {
        state.converged = false;
        state.error += delta.abs() / 15.0;
        return left + right + delta / 15.0;
    }
    recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, state)
        + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, state)
}
