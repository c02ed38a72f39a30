//! Explicit formula, periodic-orbit sums, Selberg-type products and the
//! sinh-versus-power comparison between primes and hyperbolic orbits.

use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, io_at, Error, Result};
use crate::primes::{PrimePower, PrimeTable};
use crate::quad::{adaptive_simpson, compensated_sum};
use crate::special::digamma;
use crate::zeta::ZeroTable;

/// Even test function `h` with its partner `g(u) = (1/2π) ∫ h(k) e^{−iku} dk`.
pub trait TestFunction: Sync {
    fn h(&self, k: f64) -> f64;
    fn g(&self, u: f64) -> f64;
    /// `h(i/2)`, which equals `h(−i/2)` by evenness.
    fn h_imag_half(&self) -> f64;
    /// Smallest `K` with `|h(k)| < eps` for all `|k| >= K`.
    fn decay_bound(&self, eps: f64) -> f64;
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Gaussian {
    pub sigma: f64,
}

impl Gaussian {
    pub fn new(sigma: f64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(domain(format!("sigma must be positive, got {sigma}")));
        }
        Ok(Gaussian { sigma })
    }
}

impl TestFunction for Gaussian {
    fn h(&self, k: f64) -> f64 {
        (-k * k / (2.0 * self.sigma * self.sigma)).exp()
    }

    fn g(&self, u: f64) -> f64 {
        self.sigma / (2.0 * PI).sqrt() * (-0.5 * self.sigma * self.sigma * u * u).exp()
    }

    fn h_imag_half(&self) -> f64 {
        (1.0 / (8.0 * self.sigma * self.sigma)).exp()
    }

    fn decay_bound(&self, eps: f64) -> f64 {
        if eps >= 1.0 {
            return 0.0;
        }
        self.sigma * (2.0 * (1.0 / eps).ln()).sqrt()
    }
}

/// Finite linear combination `Σ c_j h_j` of Gaussians.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct GaussianMixture {
    pub components: Vec<(f64, Gaussian)>,
}

impl TestFunction for GaussianMixture {
    fn h(&self, k: f64) -> f64 {
        self.components.iter().map(|(c, g)| c * g.h(k)).sum()
    }

    fn g(&self, u: f64) -> f64 {
        self.components.iter().map(|(c, g)| c * g.g(u)).sum()
    }

    fn h_imag_half(&self) -> f64 {
        self.components.iter().map(|(c, g)| c * g.h_imag_half()).sum()
    }

    fn decay_bound(&self, eps: f64) -> f64 {
        let total: f64 = self.components.iter().map(|(c, _)| c.abs()).sum();
        if total == 0.0 {
            return 0.0;
        }
        self.components
            .iter()
            .map(|(_, g)| g.decay_bound(eps / total))
            .fold(0.0, f64::max)
    }
}

/// `Σ h(γ)` over zeros `±γ_n`, i.e. `2 Σ_{γ_n > 0} h(γ_n)`.
///
/// Terms are added from the top of the table down so the small tail is not
/// swamped by the leading terms.
pub fn weil_lhs(h: &dyn TestFunction, zeros: &ZeroTable) -> f64 {
    2.0 * compensated_sum(zeros.zeros().iter().rev().map(|&g| h.h(g)))
}

/// Quadrature settings for the digamma integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadParams {
    /// Half-width `K` of the integration range. When `None` it is chosen so
    /// that `h(K) < tol · 10⁻²`.
    pub bound: Option<f64>,
    pub tol: f64,
}

impl QuadParams {
    pub fn with_tol(tol: f64) -> Self {
        QuadParams { bound: None, tol }
    }
}

/// Signed contributions to the prime side; they add up to the total.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RhsBreakdown {
    /// `(1/2π) ∫ h(k) Re ψ(1/4 + ik/2) dk`
    pub digamma_integral: f64,
    /// `h(i/2) + h(−i/2)`
    pub h_imag_terms: f64,
    /// `−g(0) log π`
    pub log_pi_term: f64,
    /// `−2 Σ log p · p^{−n/2} · g(n log p)`
    pub prime_sum: f64,
    pub quad_bound: f64,
    pub quad_error_estimate: f64,
}

impl RhsBreakdown {
    pub fn total(&self) -> f64 {
        compensated_sum([
            self.digamma_integral,
            self.h_imag_terms,
            self.log_pi_term,
            self.prime_sum,
        ])
    }
}

/// Prime side of the explicit formula with its per-term breakdown.
pub fn weil_rhs(h: &dyn TestFunction, powers: &[PrimePower], quad: QuadParams) -> Result<RhsBreakdown> {
    if !(quad.tol > 0.0) {
        return Err(domain(format!("quadrature tolerance must be positive, got {}", quad.tol)));
    }
    let bound = match quad.bound {
        Some(k) => {
            if !(h.h(k).abs() < quad.tol) {
                return Err(domain(format!(
                    "h({k}) = {:e} is not below the quadrature tolerance {:e}",
                    h.h(k),
                    quad.tol
                )));
            }
            k
        }
        None => h.decay_bound(quad.tol * 1e-2).max(1.0),
    };
    let integrand = |k: f64| {
        let psi = digamma(Complex64::new(0.25, 0.5 * k)).expect("no poles on this line");
        h.h(k) * psi.re
    };
    let q = adaptive_simpson(integrand, -bound, bound, 2.0 * PI * quad.tol, 16)?;

    let prime_terms = powers
        .iter()
        .rev()
        .map(|pp| pp.log_p() * (-0.5 * pp.log_term).exp() * h.g(pp.log_term));
    Ok(RhsBreakdown {
        digamma_integral: q.value / (2.0 * PI),
        h_imag_terms: 2.0 * h.h_imag_half(),
        log_pi_term: -h.g(0.0) * PI.ln(),
        prime_sum: -2.0 * compensated_sum(prime_terms),
        quad_bound: bound,
        quad_error_estimate: q.error_estimate / (2.0 * PI),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExplicitFormulaReport {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub zero_count: usize,
    pub zero_cutoff: f64,
    pub prime_power_count: usize,
    pub zero_sum: f64,
    pub breakdown: RhsBreakdown,
}

/// Both sides of the explicit formula and `lhs − rhs`.
pub fn explicit_formula_residual(
    h: &dyn TestFunction,
    zeros: &ZeroTable,
    powers: &[PrimePower],
    quad: QuadParams,
) -> Result<ExplicitFormulaReport> {
    let lhs = weil_lhs(h, zeros);
    let breakdown = weil_rhs(h, powers, quad)?;
    let rhs = breakdown.total();
    Ok(ExplicitFormulaReport {
        lhs,
        rhs,
        residual: lhs - rhs,
        zero_count: zeros.len(),
        zero_cutoff: zeros.t_max(),
        prime_power_count: powers.len(),
        zero_sum: lhs,
        breakdown,
    })
}

/// Primitive periodic orbit: period and Lyapunov exponent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitData {
    pub period: f64,
    pub lyapunov: f64,
}

impl OrbitData {
    pub fn new(period: f64, lyapunov: f64) -> Result<Self> {
        if !(period > 0.0) || !(lyapunov > 0.0) {
            return Err(domain(format!(
                "period and Lyapunov exponent must be positive, got {period} and {lyapunov}"
            )));
        }
        Ok(OrbitData { period, lyapunov })
    }
}

/// Orbits with `T_p = λ_p = log p`, one per prime.
pub fn prime_orbits(table: &PrimeTable) -> Vec<OrbitData> {
    table
        .iter()
        .map(|p| {
            let l = (p as f64).ln();
            OrbitData { period: l, lyapunov: l }
        })
        .collect()
}

/// `(1/π) Σ_γ Σ_{m ≤ m_max} sin(m E T_γ) / (2m sinh(m λ_γ / 2))`.
pub fn gutzwiller_fluct(orbits: &[OrbitData], e: f64, m_max: u32) -> f64 {
    let mut acc = 0.0;
    for o in orbits {
        for m in 1..=m_max {
            let mf = f64::from(m);
            acc += (mf * e * o.period).sin() / (2.0 * mf * (0.5 * mf * o.lyapunov).sinh());
        }
    }
    acc / PI
}

/// Bound on `|gutzwiller_fluct(prime orbits) + fluct_sum|` at any `E`:
/// `Σ_p Σ_m p^{−3m/2} / ((1 − p^{−m}) m π)`.
pub fn orbit_discrepancy_bound(table: &PrimeTable, m_max: u32) -> f64 {
    let mut acc = 0.0;
    for p in table.iter() {
        let lp = (p as f64).ln();
        for m in 1..=m_max {
            let mf = f64::from(m);
            acc += (-1.5 * mf * lp).exp() / (-(-mf * lp).exp_m1() * mf);
        }
    }
    acc / PI
}

/// Ascending positive lengths, with multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LengthSpectrum {
    lengths: Vec<f64>,
}

impl LengthSpectrum {
    pub fn new(lengths: Vec<f64>) -> Result<Self> {
        if lengths.iter().any(|l| !(*l > 0.0) || !l.is_finite()) {
            return Err(domain("lengths must be positive and finite"));
        }
        if lengths.windows(2).any(|w| w[1] < w[0]) {
            return Err(domain("lengths must be ascending"));
        }
        Ok(LengthSpectrum { lengths })
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }

    /// One decimal length per line; `#` starts a comment.
    pub fn parse(text: &str, origin: &Path) -> Result<Self> {
        let mut lengths = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let err = |message: String| Error::Format {
                path: origin.to_path_buf(),
                line: i + 1,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let v: f64 = line
                .parse()
                .map_err(|e| err(format!("bad length `{line}`: {e}")))?;
            if !(v > 0.0) || !v.is_finite() {
                return Err(err(format!("length must be positive, got {v}")));
            }
            if lengths.last().is_some_and(|&last| v < last) {
                return Err(err(format!("lengths not ascending at {v}")));
            }
            lengths.push(v);
        }
        Ok(LengthSpectrum { lengths })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path).map_err(io_at(path))?, path)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SelbergValue {
    pub re: f64,
    pub im: f64,
    /// Bound on `|log|` of the omitted factors `m > m_max`.
    pub truncation_bound: f64,
}

impl SelbergValue {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// `Π_ℓ Π_{m=0}^{m_max} (1 − e^{−ℓ(s+m)})`.
///
/// The omitted factors satisfy `|log(1 − z)| <= |z|/(1 − |z|)`; summing the
/// geometric tail in `m` gives a truncation bound whose leading term is
/// `e^{−ℓ_min(Re s + m_max + 1)}`.
pub fn selberg_zeta_partial(spectrum: &LengthSpectrum, s: Complex64, m_max: u32) -> Result<SelbergValue> {
    if !(s.re > 1.0) {
        return Err(Error::Divergence(format!("need Re s > 1, got {s}")));
    }
    let mut value = Complex64::new(1.0, 0.0);
    let mut bound = 0.0;
    for &l in spectrum.lengths() {
        for m in 0..=m_max {
            value *= Complex64::new(1.0, 0.0) - (-(s + f64::from(m)) * l).exp();
        }
        let x = (-l * (s.re + f64::from(m_max) + 1.0)).exp();
        bound += x / ((1.0 - x) * -(-l).exp_m1());
    }
    Ok(SelbergValue {
        re: value.re,
        im: value.im,
        truncation_bound: bound,
    })
}

/// Prime power compared with the hyperbolic-orbit weight it replaces.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AnalogyRow {
    pub p: u64,
    pub n: u32,
    /// `1 / (2 sinh(n log p / 2))`
    pub sinh_term: f64,
    /// `p^{−n/2}`
    pub power_term: f64,
    /// `sinh_term / power_term − 1 = 1/(p^n − 1)`
    pub rel_dev: f64,
}

/// Rows for every prime in `table` and `1 <= n <= n_max`, ordered by `p` then `n`.
pub fn analogy_report(table: &PrimeTable, n_max: u32) -> Result<Vec<AnalogyRow>> {
    if n_max < 1 {
        return Err(domain("n_max must be at least 1"));
    }
    let mut rows = Vec::with_capacity(table.len() * n_max as usize);
    for p in table.iter() {
        let lp = (p as f64).ln();
        for n in 1..=n_max {
            let x = f64::from(n) * lp;
            rows.push(AnalogyRow {
                p,
                n,
                sinh_term: 1.0 / (2.0 * (0.5 * x).sinh()),
                power_term: (-0.5 * x).exp(),
                rel_dev: 1.0 / x.exp_m1(),
            });
        }
    }
    Ok(rows)
}
