//! Riemann–Siegel evaluation of Hardy's Z function.

use std::f64::consts::PI;

use super::rs_coefficients::{C0, C1, C2, C3, C4};
use crate::special::rs_theta;

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Main sum plus the `C0..C4` remainder terms.
///
/// Meant for `t >= 10`; the absolute error is about `1e-5` at `t = 10`,
/// `1e-6` at `t = 30` and below `1e-7` from `t = 100` on.
pub fn hardy_z_riemann_siegel(t: f64) -> f64 {
    let t = t.abs();
    let a = (t / (2.0 * PI)).sqrt();
    let n = a.floor();
    let frac = a - n;
    let theta = rs_theta(t);

    let terms = n as usize;
    let mut main = 0.0;
    for k in 1..=terms {
        let kf = k as f64;
        main += (theta - t * kf.ln()).cos() / kf.sqrt();
    }
    main *= 2.0;

    let w = frac - 0.5;
    let inv = 1.0 / a;
    let remainder = horner(&C0, w)
        + inv * (horner(&C1, w) + inv * (horner(&C2, w) + inv * (horner(&C3, w) + inv * horner(&C4, w))));
    let sign = if terms % 2 == 1 { 1.0 } else { -1.0 };
    main + sign * remainder / a.sqrt()
}
