//! Smooth and fluctuating parts of the zero counting function.

use std::f64::consts::PI;

use crate::primes::PrimeTable;
use crate::special::rs_theta;

/// `θ(E)/π + 1`, the exact smooth part of the staircase.
pub fn smooth_count(e: f64) -> f64 {
    rs_theta(e) / PI + 1.0
}

/// `(E/2π)(log(E/2π) − 1) + 7/8`.
pub fn smooth_count_asymptotic(e: f64) -> f64 {
    let x = e / (2.0 * PI);
    x * (x.ln() - 1.0) + 7.0 / 8.0
}

/// Prime-sum fluctuation `−(1/π) Σ_p Σ_{m≤m_max} sin(m E log p) / (m p^{m/2})`.
pub fn fluct_sum(e: f64, table: &PrimeTable, m_max: u32) -> f64 {
    fluct_terms(e, table, m_max, |_| 1.0)
}

/// [`fluct_sum`] convolved with a unit-mass Gaussian of standard deviation
/// `width` in `E`; each term picks up the factor `exp(−(m log p · width)²/2)`.
pub fn fluct_sum_smoothed(e: f64, table: &PrimeTable, m_max: u32, width: f64) -> f64 {
    fluct_terms(e, table, m_max, |freq| (-0.5 * (freq * width).powi(2)).exp())
}

fn fluct_terms(e: f64, table: &PrimeTable, m_max: u32, damping: impl Fn(f64) -> f64) -> f64 {
    let mut acc = 0.0;
    for p in table.iter() {
        let log_p = (p as f64).ln();
        for m in 1..=m_max {
            let mf = f64::from(m);
            let freq = mf * log_p;
            acc += (e * freq).sin() * (-0.5 * freq).exp() / mf * damping(freq);
        }
    }
    -acc / PI
}

/// Gaussian convolution of a smooth function: `∫ f(E + w x) φ(x) dx` by the
/// trapezoid rule over `±8` standard deviations, which converges
/// geometrically for Gaussian-weighted analytic integrands.
pub fn gaussian_smooth(f: impl Fn(f64) -> f64, e: f64, width: f64) -> f64 {
    const PANELS: usize = 128;
    const REACH: f64 = 8.0;
    let h = 2.0 * REACH / PANELS as f64;
    let norm = 1.0 / (2.0 * PI).sqrt();
    let mut acc = 0.0;
    for i in 0..=PANELS {
        let x = -REACH + h * i as f64;
        let weight = if i == 0 || i == PANELS { 0.5 } else { 1.0 };
        acc += weight * f(e + width * x) * (-0.5 * x * x).exp();
    }
    acc * h * norm
}
