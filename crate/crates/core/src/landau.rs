//! Charged particle in a plane with a perpendicular field and a saddle
//! potential, its lowest-Landau-level reduction to `H = xp`, and the boundary
//! quantization of the reduced model.
//!
//! With Lagrangian `(μ/2)(ẋ² + ẏ²) − (eB/c) ẏ x − eλ x y` the equations of
//! motion are
//!
//! ```text
//! ẍ = −Ω ẏ − κ y,    ÿ = Ω ẋ − κ x,    Ω = eB/(μc),  κ = eλ/μ,
//! ```
//!
//! and `(x, y) ∝ e^{st}` gives `s⁴ + Ω² s² − κ² = 0`. One root pair is real,
//! `±ω_h`, the other imaginary, `±iω_c`, with
//!
//! ```text
//! ω_c² = (Ω² + √(Ω⁴ + 4κ²))/2,    ω_h² = 2κ² / (Ω² + √(Ω⁴ + 4κ²)).
//! ```
//!
//! Hence `ω_c² − ω_h² = Ω²`, `ω_c → Ω` and `ω_h → κ/Ω = λc/B` as `λ → 0`. The
//! energy `(μ/2)v² + eλxy` is conserved, and the guiding centre
//! `X = x − ẏ/Ω`, `Y = y + ẋ/Ω` obeys `Ẋ = κx/Ω`, `Ẏ = −κy/Ω`.

use std::f64::consts::PI;

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::special::{digamma, gamma_quarter_phase, log_gamma};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LandauParams {
    pub mass: f64,
    pub charge: f64,
    pub field: f64,
    pub light_speed: f64,
    /// Saddle strength `λ`; zero gives the pure Landau problem.
    pub coupling: f64,
    pub hbar: f64,
}

/// Smallest `ω_c/|ω_h|` at which only the lowest Landau level is kept.
pub const ADIABATIC_RATIO: f64 = 100.0;

/// Steps per cyclotron period below which the integrator refuses to run.
pub const STEPS_PER_PERIOD: f64 = 50.0;

impl LandauParams {
    pub fn new(mass: f64, charge: f64, field: f64, light_speed: f64, coupling: f64, hbar: f64) -> Result<Self> {
        let positive = [("mass", mass), ("charge", charge), ("field", field), ("light speed", light_speed), ("hbar", hbar)];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(domain(format!("{name} must be positive, got {v}")));
            }
        }
        if !(coupling >= 0.0) || !coupling.is_finite() {
            return Err(domain(format!("coupling must be non-negative, got {coupling}")));
        }
        Ok(LandauParams {
            mass,
            charge,
            field,
            light_speed,
            coupling,
            hbar,
        })
    }

    /// Units with `μ = e = c = ħ = 1`.
    pub fn natural(field: f64, coupling: f64) -> Result<Self> {
        Self::new(1.0, 1.0, field, 1.0, coupling, 1.0)
    }

    /// `Ω = eB/(μc)`
    pub fn cyclotron(&self) -> f64 {
        self.charge * self.field / (self.mass * self.light_speed)
    }

    /// `κ = eλ/μ`
    pub fn kappa(&self) -> f64 {
        self.charge * self.coupling / self.mass
    }

    /// `ℓ = (ħc/(eB))^{1/2}`
    pub fn magnetic_length(&self) -> f64 {
        (self.hbar * self.light_speed / (self.charge * self.field)).sqrt()
    }

    /// `ω_c/|ω_h|`, infinite at zero coupling.
    pub fn adiabatic_ratio(&self) -> f64 {
        let m = landau_normal_modes(self);
        m.omega_c / m.omega_h_abs
    }

    pub fn is_adiabatic(&self) -> bool {
        self.adiabatic_ratio() >= ADIABATIC_RATIO
    }

    /// `(μ/2)(ẋ² + ẏ²) + eλxy`
    pub fn energy(&self, s: &LandauState) -> f64 {
        0.5 * self.mass * (s.vx * s.vx + s.vy * s.vy) + self.charge * self.coupling * s.x * s.y
    }

    /// Guiding centre `(x − ẏ/Ω, y + ẋ/Ω)`.
    pub fn guiding_center(&self, s: &LandauState) -> (f64, f64) {
        let w = self.cyclotron();
        (s.x - s.vy / w, s.y + s.vx / w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormalModes {
    pub omega_c: f64,
    pub omega_h_abs: f64,
}

/// Roots of `s⁴ + Ω² s² − κ² = 0`.
pub fn landau_normal_modes(params: &LandauParams) -> NormalModes {
    let w2 = params.cyclotron().powi(2);
    let k = params.kappa();
    let root = w2.hypot(2.0 * k);
    let big = w2 + root;
    NormalModes {
        omega_c: (0.5 * big).sqrt(),
        // written without cancellation so it stays accurate as κ → 0
        omega_h_abs: (2.0 * k * k / big).sqrt(),
    }
}

/// Position and velocity in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LandauState {
    pub x: f64,
    pub y: f64,
    pub vx: f64,
    pub vy: f64,
}

impl LandauState {
    fn to_vector(self) -> Vector4<f64> {
        Vector4::new(self.x, self.y, self.vx, self.vy)
    }

    fn from_vector(v: &Vector4<f64>) -> Self {
        LandauState {
            x: v[0],
            y: v[1],
            vx: v[2],
            vy: v[3],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectorySample {
    pub t: f64,
    pub state: LandauState,
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub params: LandauParams,
    pub dt: f64,
    pub samples: Vec<TrajectorySample>,
}

impl Trajectory {
    pub fn last(&self) -> &TrajectorySample {
        self.samples.last().expect("trajectory holds the initial state")
    }

    /// Largest `|E(t) − E(0)| / |E(0)|`.
    pub fn energy_drift(&self) -> f64 {
        let e0 = self.samples[0].energy;
        self.samples
            .iter()
            .map(|s| (s.energy - e0).abs())
            .fold(0.0, f64::max)
            / e0.abs()
    }
}

/// One step of the two-stage Gauss–Legendre method for `u' = Au`; for a
/// linear system this is the (2,2) Padé approximant of `e^{hA}`.
fn step_matrix(params: &LandauParams, h: f64) -> Matrix4<f64> {
    let w = params.cyclotron();
    let k = params.kappa();
    #[rustfmt::skip]
    let a = Matrix4::new(
        0.0, 0.0, 1.0, 0.0,
        0.0, 0.0, 0.0, 1.0,
        0.0, -k, 0.0, -w,
        -k, 0.0, w, 0.0,
    );
    let ha = a * h;
    let ha2 = ha * ha / 12.0;
    let id = Matrix4::identity();
    let num = id + ha * 0.5 + ha2;
    let den = id - ha * 0.5 + ha2;
    den.try_inverse().expect("Gauss-Legendre step is invertible for real h") * num
}

/// Integrate from `init` over `[0, t_end]` (backwards if `dt < 0`), storing
/// every step.
pub fn integrate_landau(params: &LandauParams, init: LandauState, dt: f64, t_end: f64) -> Result<Trajectory> {
    integrate_landau_strided(params, init, dt, t_end, 1)
}

/// As [`integrate_landau`], storing every `stride`-th step and the final one.
///
/// The scheme is fourth order, symplectic and symmetric, and preserves every
/// quadratic invariant, so the energy is conserved up to rounding. `|dt|`
/// must resolve the cyclotron period with at least 50 steps.
pub fn integrate_landau_strided(
    params: &LandauParams,
    init: LandauState,
    dt: f64,
    t_end: f64,
    stride: usize,
) -> Result<Trajectory> {
    let period = 2.0 * PI / landau_normal_modes(params).omega_c;
    let limit = period / STEPS_PER_PERIOD;
    if !(dt.abs() <= limit) || dt == 0.0 {
        return Err(Error::Stability { dt, limit });
    }
    if !(t_end >= 0.0) || !t_end.is_finite() {
        return Err(domain(format!("integration time must be non-negative, got {t_end}")));
    }
    let stride = stride.max(1);
    let steps = (t_end / dt.abs()).round() as usize;
    let m = step_matrix(params, dt);
    let mut u = init.to_vector();
    let sample = |i: usize, u: &Vector4<f64>| {
        let state = LandauState::from_vector(u);
        TrajectorySample {
            t: dt * i as f64,
            state,
            energy: params.energy(&state),
        }
    };
    let mut samples = Vec::with_capacity(steps / stride + 2);
    samples.push(sample(0, &u));
    for i in 1..=steps {
        u = m * u;
        if i % stride == 0 || i == steps {
            samples.push(sample(i, &u));
        }
    }
    Ok(Trajectory {
        params: *params,
        dt,
        samples,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LllProjection {
    pub ell: f64,
    pub omega_h_abs: f64,
    /// `ħ/ℓ²`, so that the momentum conjugate to `x` is `p = (ħ/ℓ²) y`.
    pub momentum_scale: f64,
}

/// Lowest-Landau-level data; the reduced Hamiltonian is `|ω_h| x p`.
pub fn lll_projection(params: &LandauParams) -> Result<LllProjection> {
    let ratio = params.adiabatic_ratio();
    if !(ratio >= ADIABATIC_RATIO) {
        return Err(Error::Regime(format!(
            "omega_c/|omega_h| = {ratio:.4} is below {ADIABATIC_RATIO}; the lowest Landau level does not decouple"
        )));
    }
    let ell = params.magnetic_length();
    Ok(LllProjection {
        ell,
        omega_h_abs: landau_normal_modes(params).omega_h_abs,
        momentum_scale: params.hbar / (ell * ell),
    })
}

/// Guiding-centre sample with its reduced energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProjectedSample {
    pub t: f64,
    pub x: f64,
    pub p: f64,
    /// `x p / ħ`, the reduced energy in units of `ħ|ω_h|`; equals `XY/ℓ²`.
    pub energy: f64,
}

/// Guiding-centre trajectory in the reduced `(x, p)` variables.
pub fn project_trajectory(traj: &Trajectory) -> Result<Vec<ProjectedSample>> {
    let proj = lll_projection(&traj.params)?;
    Ok(traj
        .samples
        .iter()
        .map(|s| {
            let (x, y) = traj.params.guiding_center(&s.state);
            let p = proj.momentum_scale * y;
            ProjectedSample {
                t: s.t,
                x,
                p,
                energy: x * p / traj.params.hbar,
            }
        })
        .collect())
}

/// Oscillation frequency of `ẋ` from the peak of its Hann-windowed spectrum.
///
/// The signal is linearly detrended and zero-padded eight-fold; the peak is
/// refined by a parabola through the log magnitudes of the three top bins.
/// Bins below `min_omega` are ignored so slow drift does not mask the peak.
pub fn measure_oscillation(traj: &Trajectory, min_omega: f64) -> Result<f64> {
    let n = traj.samples.len();
    if n < 16 {
        return Err(Error::InsufficientData { needed: 16, got: n });
    }
    let h = traj.samples[1].t - traj.samples[0].t;
    let t: Vec<f64> = traj.samples.iter().map(|s| s.t).collect();
    let v: Vec<f64> = traj.samples.iter().map(|s| s.state.vx).collect();
    let (slope, icept) = linear_fit(&t, &v);
    let len = (8 * n).next_power_of_two();
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    for i in 0..n {
        let w = 0.5 - 0.5 * (2.0 * PI * i as f64 / (n - 1) as f64).cos();
        buf[i].re = w * (v[i] - slope * t[i] - icept);
    }
    FftPlanner::new().plan_fft_forward(len).process(&mut buf);
    let domega = 2.0 * PI / (len as f64 * h.abs());
    let k_min = ((min_omega / domega).ceil() as usize).max(1);
    let half = len / 2;
    if k_min + 2 >= half {
        return Err(domain("minimum frequency is above the Nyquist limit"));
    }
    let mags: Vec<f64> = buf[..half].iter().map(|c| c.norm()).collect();
    let k = (k_min..half - 1)
        .max_by(|&a, &b| mags[a].total_cmp(&mags[b]))
        .expect("non-empty search range");
    let (a, b, c) = (mags[k - 1].ln(), mags[k].ln(), mags[k + 1].ln());
    let shift = 0.5 * (a - c) / (a - 2.0 * b + c);
    Ok((k as f64 + shift) * domega)
}

/// Growth rate from the least-squares slope of `log √(x² + y²)` over the
/// samples with `t >= from`, where the growing mode dominates.
pub fn measure_growth(traj: &Trajectory, from: f64) -> Result<f64> {
    let (t, r): (Vec<f64>, Vec<f64>) = traj
        .samples
        .iter()
        .filter(|s| s.t >= from)
        .map(|s| (s.t, s.state.x.hypot(s.state.y).ln()))
        .unzip();
    if t.len() < 2 {
        return Err(Error::InsufficientData { needed: 2, got: t.len() });
    }
    Ok(linear_fit(&t, &r).0)
}

fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// Solutions of the boundary condition
/// `Γ(1/4 + iE/2) / Γ(1/4 − iE/2) · ρ^{−iE} = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumTable {
    pub rho: f64,
    pub e_max: f64,
    /// Energies are dimensionless multiples of this unit.
    pub unit: &'static str,
    pub energies: Vec<f64>,
    /// `n` with `Φ(E_n) = −2πn`.
    pub indices: Vec<i64>,
    /// `|e^{iΦ(E_n)} − 1|` evaluated from the gamma ratio.
    pub phase_residuals: Vec<f64>,
}

impl SpectrumTable {
    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    /// Number of solutions with `E_n <= e`.
    pub fn count_below(&self, e: f64) -> usize {
        self.energies.partition_point(|&x| x <= e)
    }
}

pub const SPECTRUM_UNIT: &str = "hbar*|omega_h|";

/// `Φ(E) = 2 Im log Γ(1/4 + iE/2) − E log ρ`, continuous with `Φ(0) = 0`.
pub fn landau_phase(e: f64, rho: f64) -> f64 {
    2.0 * gamma_quarter_phase(e) - e * rho.ln()
}

/// `Φ'(E) = Re ψ(1/4 + iE/2) − log ρ`.
pub fn landau_phase_derivative(e: f64, rho: f64) -> f64 {
    digamma(Complex64::new(0.25, 0.5 * e))
        .expect("no poles on this line")
        .re
        - rho.ln()
}

const SPECTRUM_PHASE_TOL: f64 = 1e-10;
const SPECTRUM_MAX_STEP: f64 = 0.5;

/// All `E ∈ (0, E_max]` with `Φ(E) ∈ 2πZ`.
///
/// The grid step is `2π/(4|Φ'|)`, a quarter of the local root spacing, capped
/// at 0.5; each bracket is bisected until `|Φ − 2πm| <= 10⁻¹⁰`.
pub fn landau_spectrum(rho: f64, e_max: f64) -> Result<SpectrumTable> {
    if !(rho > 1.0) || !rho.is_finite() {
        return Err(Error::Regime(format!(
            "boundary ratio rho = {rho} must exceed 1 for a spectrum"
        )));
    }
    if !(e_max > 0.0) || !e_max.is_finite() {
        return Err(domain(format!("E_max must be positive, got {e_max}")));
    }
    let step_at = |e: f64| (2.0 * PI / (4.0 * landau_phase_derivative(e, rho).abs())).min(SPECTRUM_MAX_STEP);

    // Φ(0) = 0 is the trivial solution; start one step in, where |Φ| < π/2.
    let mut grid = Vec::new();
    let mut e = step_at(0.0).min(e_max);
    while e < e_max {
        grid.push(e);
        e += step_at(e);
    }
    grid.push(e_max);
    let phases: Vec<f64> = grid.par_iter().map(|&e| landau_phase(e, rho)).collect();

    let mut brackets = Vec::new();
    for i in 0..grid.len() - 1 {
        let (ka, kb) = ((phases[i] / (2.0 * PI)).floor(), (phases[i + 1] / (2.0 * PI)).floor());
        if ka == kb {
            continue;
        }
        if (ka - kb).abs() > 1.0 {
            return Err(Error::Accuracy {
                estimate: grid[i],
                error_estimate: (ka - kb).abs(),
                tolerance: 1.0,
            });
        }
        let m = ka.max(kb);
        brackets.push((grid[i], grid[i + 1], m));
    }
    let roots: Vec<(f64, i64)> = brackets
        .par_iter()
        .map(|&(a, b, m)| (bisect_phase(a, b, 2.0 * PI * m, rho), -(m as i64)))
        .collect();
    let mut energies = Vec::with_capacity(roots.len());
    let mut indices = Vec::with_capacity(roots.len());
    for (e, n) in roots {
        if energies.last() != Some(&e) {
            energies.push(e);
            indices.push(n);
        }
    }
    let phase_residuals = energies.par_iter().map(|&e| gamma_ratio_residual(e, rho)).collect();
    Ok(SpectrumTable {
        rho,
        e_max,
        unit: SPECTRUM_UNIT,
        energies,
        indices,
        phase_residuals,
    })
}

fn bisect_phase(mut a: f64, mut b: f64, target: f64, rho: f64) -> f64 {
    let f = |e: f64| landau_phase(e, rho) - target;
    let mut fa = f(a);
    if fa == 0.0 {
        return a;
    }
    loop {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            return if fa.abs() <= f(b).abs() { a } else { b };
        }
        let fm = f(m);
        if fm.abs() <= SPECTRUM_PHASE_TOL * 1e-2 {
            return m;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
}

/// `|Γ(1/4 + iE/2)/Γ(1/4 − iE/2) · ρ^{−iE} − 1|`.
pub fn gamma_ratio_residual(e: f64, rho: f64) -> f64 {
    let z = Complex64::new(0.25, 0.5 * e);
    let lg = log_gamma(z).expect("no poles on this line");
    let lg_conj = log_gamma(z.conj()).expect("no poles on this line");
    let exponent = lg - lg_conj - Complex64::new(0.0, e * rho.ln());
    (exponent.exp() - 1.0).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xp::count_landau_rho;

    #[test]
    fn parameters_are_validated() {
        assert!(LandauParams::new(0.0, 1.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(LandauParams::new(1.0, 1.0, -1.0, 1.0, 1.0, 1.0).is_err());
        assert!(LandauParams::new(1.0, 1.0, 1.0, 1.0, -1.0, 1.0).is_err());
        assert!(LandauParams::new(1.0, 1.0, 1.0, 1.0, 0.0, 1.0).is_ok());
    }

    #[test]
    fn modes_satisfy_the_characteristic_equation() {
        let p = LandauParams::new(1.3, 0.7, 2.0, 1.1, 0.4, 1.0).unwrap();
        let m = landau_normal_modes(&p);
        let w2 = p.cyclotron().powi(2);
        let k2 = p.kappa().powi(2);
        let poly = |s2: f64| s2 * s2 + w2 * s2 - k2;
        assert!(poly(m.omega_h_abs.powi(2)).abs() < 1e-14);
        assert!(poly(-m.omega_c.powi(2)).abs() < 1e-14);
        assert!((m.omega_c.powi(2) - m.omega_h_abs.powi(2) - w2).abs() < 1e-14);
    }

    #[test]
    fn weak_coupling_limits() {
        let (mu, e, b, c) = (2.0, 1.5, 40.0, 3.0);
        let free = LandauParams::new(mu, e, b, c, 0.0, 1.0).unwrap();
        assert_eq!(landau_normal_modes(&free).omega_c, e * b / (mu * c));
        assert_eq!(landau_normal_modes(&free).omega_h_abs, 0.0);
        // reference scale: the coupling at which ω_h reaches ω_c
        let scale = (e * b / c).powi(2) / (mu * e);
        let lambda = 1e-6 * scale;
        let p = LandauParams::new(mu, e, b, c, lambda, 1.0).unwrap();
        let m = landau_normal_modes(&p);
        assert!((m.omega_h_abs / (lambda * c / b) - 1.0).abs() < 1e-6);
        assert!((m.omega_c / (e * b / (mu * c)) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn magnetic_length_scaling() {
        let a = LandauParams::new(1.0, 2.0, 3.0, 5.0, 0.1, 0.7).unwrap();
        let b = LandauParams { field: 6.0, ..a };
        let (la, lb) = (a.magnetic_length(), b.magnetic_length());
        assert!((la * la / (lb * lb) - 2.0).abs() < 1e-15);
        let unit = LandauParams::natural(1e4, 1.0).unwrap();
        let proj = lll_projection(&LandauParams { hbar: 1e-4, ..unit }).unwrap();
        assert!((proj.ell - 1e-4).abs() < 1e-18);
        assert!((proj.momentum_scale * proj.ell * proj.ell - 1e-4).abs() < 1e-18);
    }

    #[test]
    fn regime_check() {
        let slow = LandauParams::natural(1.0, 0.3).unwrap();
        assert!(matches!(lll_projection(&slow), Err(Error::Regime(_))));
        let fast = LandauParams::natural(100.0, 1.0).unwrap();
        assert!(lll_projection(&fast).is_ok());
    }

    #[test]
    fn step_limit() {
        let p = LandauParams::natural(10.0, 0.0).unwrap();
        let init = LandauState { x: 1.0, y: 0.0, vx: 0.0, vy: 1.0 };
        let limit = 2.0 * PI / 10.0 / 50.0;
        assert!(matches!(
            integrate_landau(&p, init, 1.01 * limit, 1.0),
            Err(Error::Stability { .. })
        ));
        assert!(integrate_landau(&p, init, limit, 1.0).is_ok());
    }

    #[test]
    fn cyclotron_orbit() {
        let p = LandauParams::natural(4.0, 0.0).unwrap();
        let period = 2.0 * PI / 4.0;
        // speed 2 on a circle of radius 1/2 about the origin
        let init = LandauState { x: 0.5, y: 0.0, vx: 0.0, vy: 2.0 };
        let traj = integrate_landau(&p, init, period / 400.0, 20.0 * period).unwrap();
        for s in &traj.samples {
            assert!((s.state.x.hypot(s.state.y) - 0.5).abs() < 1e-8);
        }
        let measured = measure_oscillation(&traj, 0.5).unwrap();
        assert!((2.0 * PI / measured / period - 1.0).abs() < 0.01);
        assert!(traj.energy_drift() < 1e-12);
    }

    #[test]
    fn time_reversal() {
        let p = LandauParams::natural(3.0, 0.0).unwrap();
        let init = LandauState { x: 0.2, y: -0.4, vx: 1.0, vy: 0.3 };
        let dt = 2.0 * PI / 3.0 / 100.0;
        let fwd = integrate_landau_strided(&p, init, dt, 50.0, 1000).unwrap();
        let back = integrate_landau_strided(&p, fwd.last().state, -dt, 50.0, 1000).unwrap();
        let end = back.last().state;
        let err = (end.x - init.x).abs() + (end.y - init.y).abs() + (end.vx - init.vx).abs() + (end.vy - init.vy).abs();
        assert!(err < 1e-8, "{err}");
    }

    #[test]
    fn guiding_center_drifts_along_the_saddle() {
        let p = LandauParams::natural(50.0, 1.0).unwrap();
        let init = LandauState { x: 1.0, y: 2.0, vx: 0.0, vy: 0.0 };
        let traj = integrate_landau(&p, init, 2.0 * PI / 50.0 / 100.0, 1.0).unwrap();
        let (x0, y0) = p.guiding_center(&init);
        let (x1, y1) = p.guiding_center(&traj.last().state);
        // Ẋ = κx/Ω, Ẏ = −κy/Ω with κ/Ω = 0.02
        assert!((x1 - x0 - 0.02).abs() < 2e-3);
        assert!((y1 - y0 + 0.04).abs() < 2e-3);
    }

    #[test]
    fn strong_coupling_growth_rate() {
        let p = LandauParams::natural(1.0, 0.3).unwrap();
        let m = landau_normal_modes(&p);
        let init = LandauState { x: 1.0, y: 0.0, vx: 0.0, vy: 0.0 };
        let t_end = 10.0 / m.omega_h_abs;
        let traj = integrate_landau_strided(&p, init, 2.0 * PI / m.omega_c / 200.0, t_end, 10).unwrap();
        let g = measure_growth(&traj, 0.5 * t_end).unwrap();
        assert!((g / m.omega_h_abs - 1.0).abs() < 0.01);
        // the weak-coupling estimate κ/Ω is measurably off here
        assert!((g / p.kappa() - 1.0).abs() > 0.03);
    }

    #[test]
    fn spectrum_small_rho() {
        assert!(matches!(landau_spectrum(1.0, 10.0), Err(Error::Regime(_))));
        assert!(landau_spectrum(10.0, 0.0).is_err());
    }

    #[test]
    fn spectrum_solutions() {
        let rho = 50.0;
        let s = landau_spectrum(rho, 60.0).unwrap();
        assert!(!s.is_empty());
        assert!(s.energies.windows(2).all(|w| w[0] < w[1]));
        for (i, &e) in s.energies.iter().enumerate() {
            let phi = landau_phase(e, rho);
            assert!((phi + 2.0 * PI * s.indices[i] as f64).abs() <= 1e-10);
            assert!(s.phase_residuals[i] <= 1e-9);
        }
        // indices run 1, 2, ... on the decreasing branch
        assert_eq!(s.indices[0], 1);
        assert!(s.indices.windows(2).all(|w| w[1] == w[0] + 1));
        for e in [10.0, 30.0, 60.0] {
            let diff = s.count_below(e) as f64 - count_landau_rho(e, rho);
            assert!(diff.abs() <= 1.0, "E {e}: {diff}");
        }
    }

    #[test]
    fn phase_derivative_matches_finite_differences() {
        for e in [0.5, 7.0, 80.0] {
            let h = 1e-5;
            let fd = (landau_phase(e + h, 30.0) - landau_phase(e - h, 30.0)) / (2.0 * h);
            assert!((fd - landau_phase_derivative(e, 30.0)).abs() < 1e-7);
        }
        assert_eq!(landau_phase(0.0, 30.0), 0.0);
    }
}
