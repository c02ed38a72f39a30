//! Locating zeros of Z(t) on the critical line.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::hardy_z;
use crate::error::{domain, Result};
use crate::special::rs_theta;

/// Lowest height scanned; every zero lies above 14.
pub const SCAN_FLOOR: f64 = 10.0;

pub const DEFAULT_GRID_FACTOR: f64 = 8.0;

/// Spacing between count checkpoints.
const CHECKPOINT_STEP: f64 = 100.0;

/// Largest tolerated `|N(T) − (θ(T)/π + 1)|` before a rescan.
const COUNT_SLACK: f64 = 2.0;

const MAX_GRID_STEP: f64 = 1.0;

/// Bisection stops anyway once the bracket is a few ulps wide.
pub const MIN_REFINE_TOL: f64 = 1e-15;

/// Count check that did not pass even after a finer rescan.
#[derive(Debug, Clone, PartialEq)]
pub struct MissedZeroWarning {
    pub lo: f64,
    pub hi: f64,
    pub found: usize,
    pub expected: f64,
}

impl std::fmt::Display for MissedZeroWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "possible missed zeros in [{}, {}]: {} zeros below {}, smooth count {:.3}",
            self.lo, self.hi, self.found, self.hi, self.expected
        )
    }
}

/// Ordinates of zeros on the critical line, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    zeros: Vec<f64>,
    t_max: f64,
    refine_tol: f64,
    warnings: Vec<MissedZeroWarning>,
}

impl ZeroTable {
    /// Build a table from already located ordinates.
    pub fn new(mut zeros: Vec<f64>, t_max: f64, refine_tol: f64) -> Result<Self> {
        if zeros.iter().any(|z| !z.is_finite() || *z <= 0.0) {
            return Err(domain("zero ordinates must be positive and finite"));
        }
        zeros.sort_by(f64::total_cmp);
        if zeros.windows(2).any(|w| w[0] == w[1]) {
            return Err(domain("zero ordinates must be distinct"));
        }
        Ok(ZeroTable {
            zeros,
            t_max,
            refine_tol,
            warnings: Vec::new(),
        })
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn refine_tol(&self) -> f64 {
        self.refine_tol
    }

    pub fn warnings(&self) -> &[MissedZeroWarning] {
        &self.warnings
    }

    /// Number of zeros with ordinate `<= e`; at a zero the right limit.
    pub fn staircase(&self, e: f64) -> usize {
        self.zeros.partition_point(|&g| g <= e)
    }

    /// Staircase convolved with a unit-mass Gaussian of standard deviation `width`.
    pub fn smoothed_staircase(&self, e: f64, width: f64) -> f64 {
        let reach = 12.0 * width;
        let lo = self.zeros.partition_point(|&g| g < e - reach);
        let hi = self.zeros.partition_point(|&g| g <= e + reach);
        let mut acc = lo as f64;
        for &g in &self.zeros[lo..hi] {
            acc += 0.5 * libm::erfc(-(e - g) / (width * std::f64::consts::SQRT_2));
        }
        acc
    }

    /// Table restricted to ordinates `<= t`.
    pub fn truncated(&self, t: f64) -> ZeroTable {
        let end = self.staircase(t);
        ZeroTable {
            zeros: self.zeros[..end].to_vec(),
            t_max: t.min(self.t_max),
            refine_tol: self.refine_tol,
            warnings: self
                .warnings
                .iter()
                .filter(|w| w.hi <= t)
                .cloned()
                .collect(),
        }
    }

    /// The first `n` zeros (or all, if fewer).
    pub fn first(&self, n: usize) -> &[f64] {
        &self.zeros[..n.min(self.zeros.len())]
    }
}

fn mean_spacing(t: f64) -> f64 {
    2.0 * PI / (t / (2.0 * PI)).ln().max(0.1)
}

fn scan_grid(lo: f64, hi: f64, grid_factor: f64) -> Vec<f64> {
    let mut grid = Vec::new();
    let mut t = lo;
    while t < hi {
        grid.push(t);
        t += (mean_spacing(t) / grid_factor).min(MAX_GRID_STEP);
    }
    grid.push(hi);
    grid
}

fn bisect(mut a: f64, mut b: f64, mut za: f64, tol: f64) -> f64 {
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let zm = hardy_z(m);
        if (zm >= 0.0) == (za >= 0.0) {
            a = m;
            za = zm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Subdivisions used to look for a hidden pair under a dip of `|Z|`.
const DIP_SUBDIVISIONS: usize = 16;

fn same_sign(a: f64, b: f64) -> bool {
    (a >= 0.0) == (b >= 0.0)
}

fn scan(lo: f64, hi: f64, grid_factor: f64, refine_tol: f64) -> Vec<f64> {
    let grid = scan_grid(lo, hi, grid_factor);
    let values: Vec<f64> = grid.par_iter().map(|&t| hardy_z(t)).collect();

    // sign changes between grid points
    let mut brackets: Vec<(f64, f64, f64)> = (0..grid.len() - 1)
        .filter(|&i| !same_sign(values[i], values[i + 1]))
        .map(|i| (grid[i], grid[i + 1], values[i]))
        .collect();

    // a local minimum of |Z| without a sign change can hide a close pair
    let dips: Vec<usize> = (1..grid.len().saturating_sub(1))
        .filter(|&i| {
            same_sign(values[i - 1], values[i])
                && same_sign(values[i], values[i + 1])
                && values[i].abs() < values[i - 1].abs()
                && values[i].abs() < values[i + 1].abs()
        })
        .collect();
    let hidden: Vec<Vec<(f64, f64, f64)>> = dips
        .par_iter()
        .map(|&i| {
            let (a, b) = (grid[i - 1], grid[i + 1]);
            let h = (b - a) / DIP_SUBDIVISIONS as f64;
            let pts: Vec<f64> = (0..=DIP_SUBDIVISIONS).map(|k| a + h * k as f64).collect();
            let vals: Vec<f64> = pts.iter().map(|&t| hardy_z(t)).collect();
            (0..DIP_SUBDIVISIONS)
                .filter(|&k| !same_sign(vals[k], vals[k + 1]))
                .map(|k| (pts[k], pts[k + 1], vals[k]))
                .collect()
        })
        .collect();
    brackets.extend(hidden.into_iter().flatten());
    brackets.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut zeros: Vec<f64> = brackets
        .par_iter()
        .map(|&(a, b, za)| bisect(a, b, za, refine_tol))
        .collect();
    zeros.dedup();
    zeros
}

/// Sign-change zeros of Z in `[SCAN_FLOOR, t_max]`.
///
/// The grid step is the local mean spacing divided by `grid_factor`; each
/// bracket is bisected until it is narrower than `refine_tol`. Every 100 units
/// and at `t_max` the count is compared with `θ(T)/π + 1`; an interval that is
/// off by more than 2 is rescanned four times finer, and reported as a
/// [`MissedZeroWarning`] if it still fails.
pub fn find_zeros(t_max: f64, grid_factor: f64, refine_tol: f64) -> Result<ZeroTable> {
    if !(t_max >= 15.0) || !t_max.is_finite() {
        return Err(domain(format!("t_max must be at least 15, got {t_max}")));
    }
    find_zeros_in(SCAN_FLOOR, t_max, grid_factor, refine_tol)
}

/// As [`find_zeros`] but starting the scan at `lo >= SCAN_FLOOR`.
///
/// The count checks are only meaningful when `lo` is the scan floor.
pub fn find_zeros_in(lo: f64, t_max: f64, grid_factor: f64, refine_tol: f64) -> Result<ZeroTable> {
    if !(grid_factor > 0.0) {
        return Err(domain(format!("grid factor must be positive, got {grid_factor}")));
    }
    if !(MIN_REFINE_TOL..=1.0).contains(&refine_tol) {
        return Err(domain(format!(
            "refine_tol must lie in [{MIN_REFINE_TOL:e}, 1], got {refine_tol}"
        )));
    }
    if !(lo >= SCAN_FLOOR) || !(t_max > lo) {
        return Err(domain(format!("invalid scan range [{lo}, {t_max}]")));
    }

    let mut zeros = scan(lo, t_max, grid_factor, refine_tol);
    let mut warnings = Vec::new();

    if lo == SCAN_FLOOR {
        let mut checkpoints = Vec::new();
        let mut c = CHECKPOINT_STEP;
        while c < t_max {
            checkpoints.push(c);
            c += CHECKPOINT_STEP;
        }
        checkpoints.push(t_max);

        let mut prev = SCAN_FLOOR;
        for &cp in &checkpoints {
            let found = zeros.partition_point(|&g| g <= cp);
            let expected = rs_theta(cp) / PI + 1.0;
            if (found as f64 - expected).abs() > COUNT_SLACK {
                let finer = scan(prev, cp, 4.0 * grid_factor, refine_tol);
                let start = zeros.partition_point(|&g| g < prev);
                let end = zeros.partition_point(|&g| g <= cp);
                let finer: Vec<f64> = finer.into_iter().filter(|&g| g >= prev && g <= cp).collect();
                zeros.splice(start..end, finer);
                let found = zeros.partition_point(|&g| g <= cp);
                if (found as f64 - expected).abs() > COUNT_SLACK {
                    warnings.push(MissedZeroWarning {
                        lo: prev,
                        hi: cp,
                        found,
                        expected,
                    });
                }
            }
            prev = cp;
        }
    }
    zeros.dedup();

    Ok(ZeroTable {
        zeros,
        t_max,
        refine_tol,
        warnings,
    })
}
