//! The classical `H = xp` flow and the semiclassical counting functions built
//! on the area below its hyperbolas.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Result};

/// Point of the `(x, p)` phase plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseSpacePoint {
    pub x: f64,
    pub p: f64,
}

/// Exact flow of `H = xp`: `x` grows and `p` decays at unit rate.
pub fn xp_flow(x0: f64, p0: f64, t: f64) -> PhaseSpacePoint {
    PhaseSpacePoint {
        x: x0 * t.exp(),
        p: p0 * (-t).exp(),
    }
}

/// Constant offset of the semiclassical count from the restricted quadrant.
pub const MASLOV_SHIFT: f64 = -1.0 / 8.0;

/// Phase-space area count `(E/2π)(log(E/2π) − 1) + 1` with the boundary
/// cutoffs `ℓ_x ℓ_p = 2πħ` already absorbed; `maslov` adds `−1/8`.
///
/// Defined for `E > 0`.
pub fn count_bk(e: f64, maslov: bool) -> f64 {
    let x = e / (2.0 * PI);
    let n = x * (x.ln() - 1.0) + 1.0;
    if maslov {
        n + MASLOV_SHIFT
    } else {
        n
    }
}

/// `d/dE count_bk = (1/2π) log(E/2π)`.
pub fn count_bk_derivative(e: f64) -> f64 {
    (e / (2.0 * PI)).ln() / (2.0 * PI)
}

/// `(E/2π)(log(a) − log(E/2π) + 1)` with `a = Λ²/2π`.
///
/// At `E = Λ²` both logarithms take the same argument, so the count there is
/// `Λ²/2π` exactly.
fn cutoff_count(e: f64, lambda_sq: f64) -> f64 {
    let x = e / (2.0 * PI);
    x * (((lambda_sq / (2.0 * PI)).ln() - x.ln()) + 1.0)
}

/// Count with a phase-space cutoff `Λ`: `(E/2π) log(Λ²/2π) − (E/2π)(log(E/2π) − 1)`.
///
/// Defined for `E > 0`, `Λ > 0`; diverges logarithmically in `Λ`.
pub fn count_connes(e: f64, lambda: f64) -> f64 {
    cutoff_count(e, lambda * lambda)
}

/// Flux count in the first quadrant of a box of side `L` with magnetic
/// length `ℓ`; identical to [`count_connes`] at `Λ = L/ℓ`.
///
/// Requires `E > 0` and `L > ℓ > 0`.
pub fn count_landau(e: f64, l: f64, ell: f64) -> f64 {
    let ratio = l / ell;
    cutoff_count(e, ratio * ratio)
}

/// [`count_landau`] expressed through the boundary ratio `ρ = L²/(2ℓ²)`.
pub fn count_landau_rho(e: f64, rho: f64) -> f64 {
    cutoff_count(e, 2.0 * rho)
}

/// The largest energy `L²/ℓ²` reachable inside the box.
pub fn landau_e_max(l: f64, ell: f64) -> Result<f64> {
    if !(ell > 0.0) || !(l > ell) {
        return Err(domain(format!("need L > ell > 0, got L = {l}, ell = {ell}")));
    }
    let ratio = l / ell;
    Ok(ratio * ratio)
}
