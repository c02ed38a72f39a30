//! Complex log-Gamma, digamma and the Riemann–Siegel theta function.
//!
//! Both Gamma routines shift the argument with the functional recurrence
//! until `|z| >= 15` and `Re z >= 1/2`, then apply the Stirling series with
//! ten Bernoulli terms. The log-Gamma shift subtracts a sum of principal
//! logarithms, which yields the branch of `log Γ` that is analytic off the
//! negative real axis; the imaginary part is never recovered from `arg Γ`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Result};

pub type ComplexValue = Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `B_2, B_4, ..., B_20`
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

const MIN_MODULUS: f64 = 15.0;
const MIN_REAL: f64 = 0.5;

fn check_argument(z: Complex64) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(domain(format!("non-finite argument {z}")));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(domain(format!("Gamma pole at {}", z.re)));
    }
    Ok(())
}

/// Number of unit shifts needed before the Stirling series is accurate.
fn shift_count(z: Complex64) -> usize {
    let mut n = 0usize;
    if z.re < MIN_REAL {
        n = (MIN_REAL - z.re).ceil() as usize;
    }
    let re = z.re + n as f64;
    let need_re = (MIN_MODULUS * MIN_MODULUS - z.im * z.im).max(0.0).sqrt();
    if re < need_re {
        n += (need_re - re).ceil() as usize;
    }
    n
}

fn stirling_log_gamma(z: Complex64) -> Complex64 {
    let half_log_two_pi = 0.5 * (2.0 * PI).ln();
    let mut acc = (z - 0.5) * z.ln() - z + half_log_two_pi;
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let m = 2.0 * (k as f64 + 1.0);
        acc += pow * (b / (m * (m - 1.0)));
        pow *= inv2;
    }
    acc
}

fn asymptotic_digamma(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut acc = z.ln() - inv * 0.5;
    let mut pow = inv2;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let m = 2.0 * (k as f64 + 1.0);
        acc -= pow * (b / m);
        pow *= inv2;
    }
    acc
}

/// Principal branch of `log Γ(z)`.
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    check_argument(z)?;
    let n = shift_count(z);
    let mut correction = Complex64::new(0.0, 0.0);
    for k in 0..n {
        correction += (z + k as f64).ln();
    }
    Ok(stirling_log_gamma(z + n as f64) - correction)
}

/// `Γ'(z)/Γ(z)`.
pub fn digamma(z: ComplexValue) -> Result<ComplexValue> {
    check_argument(z)?;
    let n = shift_count(z);
    let mut correction = Complex64::new(0.0, 0.0);
    for k in 0..n {
        correction += (z + k as f64).inv();
    }
    Ok(asymptotic_digamma(z + n as f64) - correction)
}

/// `Im log Γ(1/4 + i t/2)`, the phase shared by theta and the Landau condition.
pub fn gamma_quarter_phase(t: f64) -> f64 {
    let z = Complex64::new(0.25, 0.5 * t.abs());
    // Re z > 0, so the argument is never a pole
    let v = log_gamma(z).map(|v| v.im).unwrap_or(f64::NAN);
    if t < 0.0 {
        -v
    } else {
        v
    }
}

/// Riemann–Siegel theta, `θ(t) = Im log Γ(1/4 + it/2) − (t/2) log π`.
///
/// Evaluated from `log_gamma` directly so it stays accurate for small `t`.
pub fn rs_theta(t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let a = t.abs();
    let v = gamma_quarter_phase(a) - 0.5 * a * PI.ln();
    if t < 0.0 {
        -v
    } else {
        v
    }
}

/// Leading terms of the large-`t` expansion of theta.
pub fn rs_theta_asymptotic(t: f64) -> f64 {
    let x = t / (2.0 * PI);
    0.5 * t * x.ln() - 0.5 * t - PI / 8.0 + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t)
}

/// `θ'(t) = Re ψ(1/4 + it/2)/2 − (log π)/2`.
pub fn rs_theta_derivative(t: f64) -> f64 {
    let z = Complex64::new(0.25, 0.5 * t.abs());
    let psi = digamma(z).map(|v| v.re).unwrap_or(f64::NAN);
    0.5 * psi - 0.5 * PI.ln()
}
