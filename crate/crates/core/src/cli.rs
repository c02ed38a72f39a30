//! Command-line front end. Every subcommand writes one table or report to
//! standard output or to `--output`.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::error::{domain, io_at, Error, Result};
use crate::landau::{
    integrate_landau_strided, landau_normal_modes, landau_spectrum, measure_growth, measure_oscillation,
    LandauParams, LandauState, ADIABATIC_RATIO, SPECTRUM_UNIT,
};
use crate::output::{write_json, Cell, Table};
use crate::primes::{prime_powers, sieve};
use crate::stats::{
    montgomery_r2, pair_correlation, pearson_correlation, spacing_distribution, unfold, wigner_surmise_pdf,
    Histogram, NON_UNIVERSAL_PREFIX,
};
use crate::trace::{analogy_report, explicit_formula_residual, selberg_zeta_partial, Gaussian, LengthSpectrum, QuadParams};
use crate::xp::{count_bk, count_connes, count_landau};
use crate::zeta::{
    find_zeros, fluct_sum, fluct_sum_smoothed, gaussian_smooth, load_or_compute, read_cache, smooth_count,
    write_cache_to, ZeroTable, DEFAULT_GRID_FACTOR,
};

/// Environment variable capping the worker count; `0` means one per core.
pub const THREADS_ENV: &str = "RSL_THREADS";

#[derive(Debug, Parser)]
#[command(name = "rsl", version, about = "Riemann zeros, explicit formulas and the xp / Landau model")]
pub struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Output format; `explicit` defaults to json, everything else to csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zeros of Z(t) on (0, t_max] in the zero-table file format.
    Zeros {
        #[arg(long)]
        t_max: f64,
        /// Reuse or create a cache at this path.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_GRID_FACTOR)]
        grid_factor: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// A semiclassical counting function next to the zero staircase.
    Counts {
        #[arg(long, value_enum)]
        model: Model,
        /// Phase-space cutoff for the connes model.
        #[arg(long)]
        lambda: Option<f64>,
        /// Box size for the landau model.
        #[arg(long = "L")]
        l: Option<f64>,
        /// Magnetic length for the landau model.
        #[arg(long)]
        ell: Option<f64>,
        #[arg(long)]
        e_max: f64,
        #[arg(long)]
        e_min: Option<f64>,
        /// Number of grid points, ending at e_max.
        #[arg(long, default_value_t = 100)]
        points: usize,
        /// Subtract 1/8 from the bk count.
        #[arg(long)]
        maslov: bool,
        /// Zero table to build the staircase from.
        #[arg(long)]
        zeros: Option<PathBuf>,
    },
    /// Prime-sum fluctuation against the staircase minus its smooth part.
    Fluct {
        #[arg(long)]
        e_min: f64,
        #[arg(long)]
        e_max: f64,
        #[arg(long)]
        p_max: u64,
        #[arg(long)]
        m_max: u32,
        /// Gaussian smoothing width; 0 compares the raw functions.
        #[arg(long, default_value_t = 0.0)]
        smooth: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        #[arg(long)]
        zeros: Option<PathBuf>,
    },
    /// Spacing or pair-correlation histograms of the unfolded zeros.
    Stats {
        #[arg(value_enum)]
        kind: StatsKind,
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long)]
        bins: usize,
        /// Upper end of the pair-correlation window.
        #[arg(long, default_value_t = 2.0)]
        x_max: f64,
        /// Lowest zeros left out.
        #[arg(long, default_value_t = NON_UNIVERSAL_PREFIX)]
        drop: usize,
    },
    /// Both sides of the explicit formula for a Gaussian test function.
    Explicit {
        #[arg(long)]
        sigma: f64,
        #[arg(long)]
        zero_max: f64,
        #[arg(long)]
        u_max: f64,
        #[arg(long, default_value_t = 1e-9)]
        quad_tol: f64,
        #[arg(long)]
        zeros: Option<PathBuf>,
    },
    /// Charged particle in a field with a saddle potential.
    Landau {
        #[command(subcommand)]
        action: LandauAction,
    },
    /// Hyperbolic orbit weight 1/(2 sinh(n log p/2)) against p^(-n/2).
    Analogy {
        #[arg(long)]
        p_max: u64,
        #[arg(long)]
        n_max: u32,
    },
    /// Truncated Selberg-type product over a length spectrum.
    Selberg {
        #[arg(long)]
        lengths: PathBuf,
        /// Real part of s.
        #[arg(long)]
        s: f64,
        /// Imaginary part of s.
        #[arg(long, default_value_t = 0.0)]
        s_im: f64,
        #[arg(long)]
        m_max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Bk,
    Connes,
    Landau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatsKind {
    Spacing,
    Paircorr,
}

#[derive(Debug, Args)]
pub struct Physical {
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    #[arg(long, default_value_t = 1.0)]
    charge: f64,
    #[arg(long, default_value_t = 100.0)]
    field: f64,
    #[arg(long, default_value_t = 1.0)]
    light_speed: f64,
    #[arg(long, default_value_t = 1.0)]
    coupling: f64,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
}

impl Physical {
    fn params(&self) -> Result<LandauParams> {
        LandauParams::new(self.mass, self.charge, self.field, self.light_speed, self.coupling, self.hbar)
    }
}

#[derive(Debug, Subcommand)]
pub enum LandauAction {
    /// Normal-mode frequencies, optionally measured from a trajectory.
    Modes {
        #[command(flatten)]
        physical: Physical,
        /// Also integrate and read the frequencies off the trajectory.
        #[arg(long)]
        measure: bool,
    },
    /// Trajectory samples.
    Trajectory {
        #[command(flatten)]
        physical: Physical,
        #[arg(long, default_value_t = 1.0)]
        x0: f64,
        #[arg(long, default_value_t = 1.0)]
        y0: f64,
        #[arg(long, default_value_t = 0.0)]
        vx0: f64,
        #[arg(long, default_value_t = 0.0)]
        vy0: f64,
        /// Time step; defaults to 1/100 of the cyclotron period.
        #[arg(long)]
        dt: Option<f64>,
        #[arg(long)]
        t_end: f64,
        #[arg(long, default_value_t = 1)]
        stride: usize,
    },
    /// Energies solving the boundary phase condition.
    Spectrum {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        e_max: f64,
    },
}

/// Size the global worker pool from `RSL_THREADS`.
pub fn configure_threads() -> Result<()> {
    let n = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| domain(format!("{THREADS_ENV} must be a non-negative integer, got `{v}`")))?,
        Err(_) => 0,
    };
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

enum Artifact {
    Table(Table),
    Report { json: serde_json::Value, table: Table },
    Text(Vec<u8>),
}

/// Execute a parsed command line.
pub fn run(cli: &Cli) -> Result<()> {
    let artifact = match &cli.command {
        Command::Zeros {
            t_max,
            cache,
            grid_factor,
            tol,
        } => zeros_cmd(*t_max, cache.as_ref(), *grid_factor, *tol, cli.format)?,
        Command::Counts {
            model,
            lambda,
            l,
            ell,
            e_max,
            e_min,
            points,
            maslov,
            zeros,
        } => counts_cmd(*model, *lambda, *l, *ell, *e_max, *e_min, *points, *maslov, zeros.as_ref())?,
        Command::Fluct {
            e_min,
            e_max,
            p_max,
            m_max,
            smooth,
            step,
            zeros,
        } => fluct_cmd(*e_min, *e_max, *p_max, *m_max, *smooth, *step, zeros.as_ref())?,
        Command::Stats {
            kind,
            zeros,
            bins,
            x_max,
            drop,
        } => stats_cmd(*kind, zeros, *bins, *x_max, *drop)?,
        Command::Explicit {
            sigma,
            zero_max,
            u_max,
            quad_tol,
            zeros,
        } => explicit_cmd(*sigma, *zero_max, *u_max, *quad_tol, zeros.as_ref())?,
        Command::Landau { action } => landau_cmd(action)?,
        Command::Analogy { p_max, n_max } => analogy_cmd(*p_max, *n_max)?,
        Command::Selberg { lengths, s, s_im, m_max } => selberg_cmd(lengths, *s, *s_im, *m_max)?,
    };

    let mut out: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(io_at(p))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let default_json = matches!(cli.command, Command::Explicit { .. });
    let json = cli.format.map_or(default_json, |f| f == Format::Json);
    match artifact {
        Artifact::Text(bytes) => out.write_all(&bytes)?,
        Artifact::Table(t) if json => write_json(&t.to_json(), &mut out)?,
        Artifact::Table(t) => t.write_csv(&mut out)?,
        Artifact::Report { json: j, .. } if json => write_json(&j, &mut out)?,
        Artifact::Report { table, .. } => table.write_csv(&mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn load_zeros(path: Option<&PathBuf>, t_max: f64, tol: f64) -> Result<ZeroTable> {
    let table = match path {
        Some(p) => {
            let t = read_cache(p)?;
            if t.t_max() < t_max {
                return Err(domain(format!(
                    "zero table {} covers only t <= {}, need {t_max}",
                    p.display(),
                    t.t_max()
                )));
            }
            t
        }
        None => find_zeros(t_max.max(15.0), DEFAULT_GRID_FACTOR, tol)?,
    };
    report_warnings(&table);
    Ok(table.truncated(t_max))
}

fn report_warnings(table: &ZeroTable) {
    for w in table.warnings() {
        eprintln!("rsl: warning: {w}");
    }
}

fn zeros_cmd(t_max: f64, cache: Option<&PathBuf>, grid_factor: f64, tol: f64, format: Option<Format>) -> Result<Artifact> {
    let table = match cache {
        Some(p) => load_or_compute(p, t_max, grid_factor, tol)?,
        None => find_zeros(t_max, grid_factor, tol)?,
    };
    report_warnings(&table);
    if format.is_some() {
        let mut t = Table::new(&["n", "gamma"])
            .comment("ordinates gamma_n of zeros of zeta on the critical line, found as sign changes of Hardy's Z")
            .comment(format!("t_max = {t_max}, bisection tolerance = {tol:e}"));
        for (i, &g) in table.zeros().iter().enumerate() {
            t.push(vec![Cell::from(i + 1), Cell::from(g)]);
        }
        return Ok(Artifact::Table(t));
    }
    let mut buf = Vec::new();
    write_cache_to(&table, &mut buf)?;
    Ok(Artifact::Text(buf))
}

fn grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points <= 1 {
        return vec![hi];
    }
    (0..points)
        .map(|i| if i + 1 == points { hi } else { lo + (hi - lo) * i as f64 / (points - 1) as f64 })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn counts_cmd(
    model: Model,
    lambda: Option<f64>,
    l: Option<f64>,
    ell: Option<f64>,
    e_max: f64,
    e_min: Option<f64>,
    points: usize,
    maslov: bool,
    zeros: Option<&PathBuf>,
) -> Result<Artifact> {
    if !(e_max > 0.0) {
        return Err(domain(format!("--e-max must be positive, got {e_max}")));
    }
    let points = points.max(1);
    let e_min = e_min.unwrap_or(e_max / points as f64);
    if !(e_min > 0.0) || e_min > e_max {
        return Err(domain(format!("need 0 < --e-min <= --e-max, got {e_min}")));
    }
    let (count, description): (Box<dyn Fn(f64) -> f64>, String) = match model {
        Model::Bk => (
            Box::new(move |e| count_bk(e, maslov)),
            format!(
                "count = (E/2pi)(log(E/2pi) - 1) + 1{}, area below the xp hyperbola",
                if maslov { " - 1/8" } else { "" }
            ),
        ),
        Model::Connes => {
            let lam = lambda.ok_or_else(|| domain("--lambda is required for the connes model"))?;
            if !(lam > 0.0) {
                return Err(domain(format!("--lambda must be positive, got {lam}")));
            }
            (
                Box::new(move |e| count_connes(e, lam)),
                format!("count = (E/2pi) log(Lambda^2/2pi) - (E/2pi)(log(E/2pi) - 1), Lambda = {lam}"),
            )
        }
        Model::Landau => {
            let l = l.ok_or_else(|| domain("--L is required for the landau model"))?;
            let ell = ell.ok_or_else(|| domain("--ell is required for the landau model"))?;
            crate::xp::landau_e_max(l, ell)?;
            (
                Box::new(move |e| count_landau(e, l, ell)),
                format!(
                    "count = (E/2pi) log(L^2/(2pi ell^2)) - (E/2pi)(log(E/2pi) - 1), flux quanta in the first quadrant, L = {l}, ell = {ell}"
                ),
            )
        }
    };
    let table = load_zeros(zeros, e_max, 1e-10)?;
    let mut t = Table::new(&["E", "count", "staircase", "smooth_count"])
        .comment(description)
        .comment("E dimensionless (units of hbar*|omega_h| for the landau model)")
        .comment("staircase = number of zeros with ordinate <= E; smooth_count = theta(E)/pi + 1");
    for e in grid(e_min, e_max, points) {
        t.push(vec![
            Cell::from(e),
            Cell::from(count(e)),
            Cell::from(table.staircase(e)),
            Cell::from(smooth_count(e)),
        ]);
    }
    Ok(Artifact::Table(t))
}

fn fluct_cmd(
    e_min: f64,
    e_max: f64,
    p_max: u64,
    m_max: u32,
    smooth: f64,
    step: f64,
    zeros: Option<&PathBuf>,
) -> Result<Artifact> {
    if !(e_min > 0.0) || !(e_max > e_min) {
        return Err(domain(format!("need 0 < --e-min < --e-max, got {e_min} and {e_max}")));
    }
    if !(step > 0.0) || !(smooth >= 0.0) || m_max == 0 {
        return Err(domain("--step must be positive, --smooth non-negative and --m-max at least 1"));
    }
    let primes = sieve(p_max)?;
    let reach = 12.0 * smooth;
    let table = load_zeros(zeros, e_max + reach, 1e-10)?;
    let n = ((e_max - e_min) / step).round() as usize;
    let energies: Vec<f64> = (0..=n).map(|i| (e_min + step * i as f64).min(e_max)).collect();
    use rayon::prelude::*;
    let rows: Vec<(f64, f64, f64)> = energies
        .par_iter()
        .map(|&e| {
            if smooth > 0.0 {
                let formula = fluct_sum_smoothed(e, &primes, m_max, smooth);
                let stair = table.smoothed_staircase(e, smooth) - gaussian_smooth(smooth_count, e, smooth);
                (e, formula, stair)
            } else {
                (e, fluct_sum(e, &primes, m_max), table.staircase(e) as f64 - smooth_count(e))
            }
        })
        .collect();
    let (a, b): (Vec<f64>, Vec<f64>) = rows.iter().map(|r| (r.1, r.2)).unzip();
    let mut t = Table::new(&["E", "fluct_formula", "staircase_minus_smooth"])
        .comment("fluct_formula = -(1/pi) sum_p sum_{m<=m_max} sin(m E log p)/(m p^(m/2))")
        .comment("staircase_minus_smooth = N(E) - theta(E)/pi - 1")
        .comment(format!(
            "primes <= {p_max}, m_max = {m_max}, Gaussian smoothing width {smooth} applied to both columns"
        ))
        .comment(format!("pearson correlation = {}", crate::output::fmt_num(pearson_correlation(&a, &b))));
    for (e, f, s) in rows {
        t.push(vec![Cell::from(e), Cell::from(f), Cell::from(s)]);
    }
    Ok(Artifact::Table(t))
}

fn histogram_table(h: &Histogram, reference: impl Fn(f64) -> f64) -> Table {
    let mut t = Table::new(&["bin_left", "bin_right", "density", "reference_value"]);
    for (i, w) in h.bin_edges.windows(2).enumerate() {
        t.push(vec![
            Cell::from(w[0]),
            Cell::from(w[1]),
            Cell::from(h.counts[i]),
            Cell::from(reference(0.5 * (w[0] + w[1]))),
        ]);
    }
    t
}

fn stats_cmd(kind: StatsKind, zeros: &Path, bins: usize, x_max: f64, drop: usize) -> Result<Artifact> {
    let table = read_cache(zeros)?;
    let seq = unfold(&table)?.drop_lowest(drop);
    let common = format!(
        "unfolded x_n = theta(gamma_n)/pi + 1 for {} zeros, lowest {drop} dropped",
        seq.len()
    );
    let t = match kind {
        StatsKind::Spacing => {
            let d = spacing_distribution(&seq, bins)?;
            let mut t = histogram_table(&d.histogram, wigner_surmise_pdf);
            t.comments = vec![
                "nearest-neighbour spacing density s_n = x_(n+1) - x_n".into(),
                "reference_value = unitary Wigner surmise (32/pi^2) s^2 exp(-4 s^2/pi) at the bin midpoint".into(),
                common,
                format!("spacings = {}, ks_stat = {}", d.histogram.n_samples, crate::output::fmt_num(d.ks_stat)),
            ];
            t
        }
        StatsKind::Paircorr => {
            if bins == 0 {
                return Err(domain("--bins must be positive"));
            }
            let h = pair_correlation(&seq, x_max, x_max / bins as f64)?;
            let mut t = histogram_table(&h, montgomery_r2);
            t.comments = vec![
                "density of differences x_m - x_n in (0, x_max] per unit length per base point".into(),
                "reference_value = 1 - (sin(pi x)/(pi x))^2 at the bin midpoint".into(),
                common,
                format!("base points = {}", h.n_samples),
            ];
            t
        }
    };
    Ok(Artifact::Table(t))
}

fn explicit_cmd(sigma: f64, zero_max: f64, u_max: f64, quad_tol: f64, zeros: Option<&PathBuf>) -> Result<Artifact> {
    let h = Gaussian::new(sigma)?;
    if !(zero_max > 0.0) || !(u_max > 0.0) {
        return Err(domain("--zero-max and --u-max must be positive"));
    }
    let table = load_zeros(zeros, zero_max, 1e-14)?;
    let p_max = (u_max.exp().floor() as u64).max(2);
    let powers = prime_powers(&sieve(p_max)?, u_max)?;
    let report = explicit_formula_residual(&h, &table, &powers, QuadParams::with_tol(quad_tol))?;
    let json = serde_json::json!({
        "test_function": { "kind": "gaussian", "sigma": sigma },
        "zero_max": zero_max,
        "u_max": u_max,
        "quad_tol": quad_tol,
        "report": report,
    });
    let b = &report.breakdown;
    let mut t = Table::new(&["quantity", "value"])
        .comment("sum over zeros of h(gamma) against the archimedean and prime terms")
        .comment(format!("h(k) = exp(-k^2/(2 sigma^2)), sigma = {sigma}; zeros <= {zero_max}; n log p <= {u_max}"));
    for (k, v) in [
        ("lhs", report.lhs),
        ("rhs", report.rhs),
        ("residual", report.residual),
        ("zero_sum", report.zero_sum),
        ("digamma_integral", b.digamma_integral),
        ("h_imag_terms", b.h_imag_terms),
        ("log_pi_term", b.log_pi_term),
        ("prime_sum", b.prime_sum),
        ("quad_error_estimate", b.quad_error_estimate),
    ] {
        t.push(vec![Cell::from(k), Cell::from(v)]);
    }
    Ok(Artifact::Report { json, table: t })
}

fn landau_cmd(action: &LandauAction) -> Result<Artifact> {
    match action {
        LandauAction::Modes { physical, measure } => {
            let p = physical.params()?;
            let m = landau_normal_modes(&p);
            let mut columns = vec!["omega_c", "omega_h_abs", "cyclotron", "weak_coupling_omega_h", "magnetic_length", "adiabatic_ratio"];
            let mut row = vec![
                Cell::from(m.omega_c),
                Cell::from(m.omega_h_abs),
                Cell::from(p.cyclotron()),
                Cell::from(p.coupling * p.light_speed / p.field),
                Cell::from(p.magnetic_length()),
                Cell::from(m.omega_c / m.omega_h_abs),
            ];
            if *measure {
                let (wc, wh) = measured_modes(&p)?;
                columns.extend(["measured_omega_c", "measured_omega_h_abs"]);
                row.extend([Cell::from(wc), Cell::from(wh)]);
            }
            let mut t = Table::new(&columns)
                .comment("roots of s^4 + Omega^2 s^2 - kappa^2 = 0, Omega = eB/(mu c), kappa = e lambda/mu")
                .comment("frequencies in inverse time units of the input parameters");
            if *measure {
                t = t.comment(format!(
                    "measured: spectral peak of vx over 200 cyclotron periods (only when omega_c/|omega_h| >= {ADIABATIC_RATIO}), slope of log r over ten hyperbolic times"
                ));
            }
            t.push(row);
            Ok(Artifact::Table(t))
        }
        LandauAction::Trajectory {
            physical,
            x0,
            y0,
            vx0,
            vy0,
            dt,
            t_end,
            stride,
        } => {
            let p = physical.params()?;
            let period = 2.0 * PI / landau_normal_modes(&p).omega_c;
            let dt = dt.unwrap_or(period / 100.0);
            let init = LandauState { x: *x0, y: *y0, vx: *vx0, vy: *vy0 };
            let traj = integrate_landau_strided(&p, init, dt, *t_end, *stride)?;
            let mut t = Table::new(&["t", "x", "y", "vx", "vy", "energy"])
                .comment("mu x'' = -(eB/c) y' - e lambda y, mu y'' = (eB/c) x' - e lambda x; 4th-order Gauss-Legendre steps")
                .comment("energy = (mu/2)(vx^2 + vy^2) + e lambda x y, conserved");
            for s in &traj.samples {
                let st = s.state;
                t.push(vec![s.t.into(), st.x.into(), st.y.into(), st.vx.into(), st.vy.into(), s.energy.into()]);
            }
            Ok(Artifact::Table(t))
        }
        LandauAction::Spectrum { rho, e_max } => {
            let s = landau_spectrum(*rho, *e_max)?;
            let mut t = Table::new(&["n", "E_n", "phase_residual"])
                .comment("solutions of Gamma(1/4 + iE/2)/Gamma(1/4 - iE/2) rho^(-iE) = 1, index n from phase = -2 pi n")
                .comment(format!("rho = L^2/(2 ell^2) = {rho}; energies in units of {SPECTRUM_UNIT}"));
            for i in 0..s.len() {
                t.push(vec![s.indices[i].into(), s.energies[i].into(), s.phase_residuals[i].into()]);
            }
            Ok(Artifact::Table(t))
        }
    }
}

/// Frequencies read off trajectories: the cyclotron peak over 200 periods
/// and the growth rate over ten hyperbolic times.
///
/// The oscillation is only resolvable when many cyclotron periods fit before
/// the hyperbolic mode takes over, so outside the adiabatic regime the first
/// value is NaN.
fn measured_modes(p: &LandauParams) -> Result<(f64, f64)> {
    let m = landau_normal_modes(p);
    if m.omega_h_abs == 0.0 {
        return Err(Error::Regime("zero coupling has no hyperbolic mode to measure".into()));
    }
    let period = 2.0 * PI / m.omega_c;
    let dt = period / 100.0;
    let init = LandauState { x: 1.0, y: 1.0, vx: 1.0, vy: 0.0 };
    let wc = if p.is_adiabatic() {
        let osc = integrate_landau_strided(p, init, dt, 200.0 * period, 1)?;
        measure_oscillation(&osc, 0.5 * p.cyclotron())?
    } else {
        f64::NAN
    };
    let growth_time = 10.0 / m.omega_h_abs;
    let stride = ((growth_time / dt) as usize / 20_000).max(1);
    let grow = integrate_landau_strided(p, init, dt, growth_time, stride)?;
    let wh = measure_growth(&grow, 0.5 * growth_time)?;
    Ok((wc, wh))
}

fn analogy_cmd(p_max: u64, n_max: u32) -> Result<Artifact> {
    let rows = analogy_report(&sieve(p_max)?, n_max)?;
    let mut t = Table::new(&["p", "n", "sinh_term", "power_term", "rel_dev"])
        .comment("sinh_term = 1/(2 sinh(n log p/2)), power_term = p^(-n/2)")
        .comment("rel_dev = sinh_term/power_term - 1 = p^(-n)/(1 - p^(-n))");
    for r in rows {
        t.push(vec![r.p.into(), r.n.into(), r.sinh_term.into(), r.power_term.into(), r.rel_dev.into()]);
    }
    Ok(Artifact::Table(t))
}

fn selberg_cmd(lengths: &Path, s: f64, s_im: f64, m_max: u32) -> Result<Artifact> {
    let spectrum = LengthSpectrum::from_file(lengths)?;
    let v = selberg_zeta_partial(&spectrum, Complex64::new(s, s_im), m_max)?;
    let json = serde_json::json!({
        "s": { "re": s, "im": s_im },
        "m_max": m_max,
        "lengths": spectrum.lengths().len(),
        "value": v,
    });
    let mut t = Table::new(&["s_re", "s_im", "m_max", "re", "im", "truncation_bound"])
        .comment("product over lengths l and 0 <= m <= m_max of (1 - exp(-l (s + m)))")
        .comment("truncation_bound: bound on |log| of the omitted factors m > m_max");
    t.push(vec![s.into(), s_im.into(), m_max.into(), v.re.into(), v.im.into(), v.truncation_bound.into()]);
    Ok(Artifact::Report { json, table: t })
}

/// One-line rendering of a clap parse failure.
pub fn first_line(err: &clap::Error) -> String {
    let text = err.render().to_string();
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let head = lines.next().unwrap_or("invalid arguments").to_string();
    // a trailing colon introduces a list of offending arguments
    if head.ends_with(':') {
        let items: Vec<&str> = lines.take_while(|l| !l.starts_with("Usage:")).collect();
        return format!("{} {}", head, items.join(", "));
    }
    head
}
