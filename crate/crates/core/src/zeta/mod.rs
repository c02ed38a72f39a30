//! The zeta function near the critical line, its zeros and the zero
//! counting function.

mod cache;
mod counting;
mod riemann_siegel;
mod rs_coefficients;
mod zeros;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::primes::PrimeTable;
use crate::special::{log_gamma, rs_theta, ComplexValue};

pub use cache::{load_or_compute, read_cache, read_cache_from, write_cache, write_cache_to};
pub use counting::{
    fluct_sum, fluct_sum_smoothed, gaussian_smooth, smooth_count, smooth_count_asymptotic,
};
pub use riemann_siegel::hardy_z_riemann_siegel;
pub use zeros::{
    find_zeros, find_zeros_in, MissedZeroWarning, ZeroTable, DEFAULT_GRID_FACTOR, MIN_REFINE_TOL,
    SCAN_FLOOR,
};

/// Below this height `hardy_z` uses the eta series instead of Riemann–Siegel.
pub const RS_SWITCHOVER: f64 = 100.0;

/// `ζ(s)` from the alternating eta series, `ζ(s) = η(s) / (1 − 2^{1−s})`.
///
/// The last `terms / 2` partial sums are combined with binomial weights
/// (repeated pairwise averaging), which acts as a smooth cutoff on the
/// alternating tail. Accuracy is limited once `|Im s|` approaches `terms / 2`.
pub fn zeta_eta(s: ComplexValue, terms: usize) -> Result<ComplexValue> {
    if !(s.re > 0.0) || !s.im.is_finite() {
        return Err(domain(format!("eta series needs Re s > 0, got {s}")));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(domain("pole of zeta at s = 1"));
    }
    if terms < 10 {
        return Err(domain(format!("eta series needs at least 10 terms, got {terms}")));
    }
    let denom = 1.0 - (Complex64::new(2f64.ln(), 0.0) * (1.0 - s)).exp();
    if denom.norm() < 1e-12 {
        return Err(domain(format!("1 - 2^(1-s) vanishes at s = {s}")));
    }

    let averaging = terms / 2;
    let head = terms - averaging;
    let log_weights = binomial_log_weights(averaging);

    let mut partial = Complex64::new(0.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..=terms {
        let term = (-s * (n as f64).ln()).exp();
        if n % 2 == 1 {
            partial += term;
        } else {
            partial -= term;
        }
        if n >= head {
            acc += partial * log_weights[n - head].exp();
        }
    }
    Ok(acc / denom)
}

/// `log(C(m, j) / 2^m)` for `j = 0..=m`.
fn binomial_log_weights(m: usize) -> Vec<f64> {
    let mut log_fact = vec![0.0f64; m + 1];
    for k in 1..=m {
        log_fact[k] = log_fact[k - 1] + (k as f64).ln();
    }
    let scale = m as f64 * 2f64.ln();
    (0..=m)
        .map(|j| log_fact[m] - log_fact[j] - log_fact[m - j] - scale)
        .collect()
}

/// Number of eta terms giving double-precision accuracy at height `t`.
pub fn eta_terms(t: f64) -> usize {
    2 * (t.abs().ceil() as usize).max(64)
}

/// Partial Euler product over the primes in `table`.
pub fn euler_product_partial(s: ComplexValue, table: &PrimeTable) -> Result<ComplexValue> {
    if !(s.re > 1.0) {
        return Err(Error::Divergence(format!(
            "Euler product diverges for Re s <= 1 (s = {s})"
        )));
    }
    let mut prod = Complex64::new(1.0, 0.0);
    for p in table.iter() {
        let factor = 1.0 - (-s * (p as f64).ln()).exp();
        prod /= factor;
    }
    Ok(prod)
}

/// Hardy's function `Z(t) = e^{iθ(t)} ζ(1/2 + it)`, real and even.
///
/// Uses the eta series below [`RS_SWITCHOVER`] and the Riemann–Siegel formula
/// with four correction terms above it.
pub fn hardy_z(t: f64) -> f64 {
    let a = t.abs();
    if a < RS_SWITCHOVER {
        hardy_z_eta(a, eta_terms(a))
    } else {
        hardy_z_riemann_siegel(a)
    }
}

/// `Z(t)` assembled from the eta series.
pub fn hardy_z_eta(t: f64, terms: usize) -> f64 {
    let zeta = zeta_eta(Complex64::new(0.5, t), terms.max(10))
        .expect("Re s = 1/2 lies in the eta domain");
    (Complex64::from_polar(1.0, rs_theta(t)) * zeta).re
}

/// `ξ(1/2 + iE) = −(1/2)(E² + 1/4) π^{−1/4} |Γ(1/4 + iE/2)| Z(E)`.
pub fn xi_critical(e: f64) -> f64 {
    let lg = log_gamma(Complex64::new(0.25, 0.5 * e)).expect("Re > 0");
    -0.5 * (e * e + 0.25) * PI.powf(-0.25) * lg.re.exp() * hardy_z(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::sieve;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Euler–Maclaurin evaluation of ζ(s), independent of the eta series.
    fn zeta_euler_maclaurin(s: Complex64) -> Complex64 {
        let n = 50 + s.im.abs().ceil() as usize;
        let nf = n as f64;
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 1..n {
            sum += (-s * (k as f64).ln()).exp();
        }
        let n_s = (-s * nf.ln()).exp();
        sum += n_s * 0.5 + n_s * nf / (s - 1.0);
        // Bernoulli corrections B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
        let b = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0];
        let mut rising = s;
        let mut fact = 2.0;
        let mut npow = n_s / nf;
        for (k, bk) in b.iter().enumerate() {
            sum += rising * npow * (bk / fact);
            let m = 2.0 * k as f64 + 2.0;
            rising *= (s + m - 1.0) * (s + m);
            fact *= (m + 1.0) * (m + 2.0);
            npow /= nf * nf;
        }
        sum
    }

    #[test]
    fn oracle_self_check() {
        let v = zeta_euler_maclaurin(Complex64::new(2.0, 0.0));
        assert!((v.re - PI * PI / 6.0).abs() < 1e-13);
    }

    #[test]
    fn eta_basel_and_half() {
        let v = zeta_eta(Complex64::new(2.0, 0.0), 80).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-8);
        assert!(v.im.abs() < 1e-15);
        let h = zeta_eta(Complex64::new(0.5, 0.0), 200).unwrap();
        let oracle = zeta_euler_maclaurin(Complex64::new(0.5, 0.0)).re;
        assert!((oracle - (-1.460_354_508_809_586_8)).abs() < 1e-12);
        assert!((h.re - oracle).abs() < 1e-6);
        assert!((h.re - oracle).abs() < 1e-12);
    }

    #[test]
    fn eta_schwarz_reflection() {
        let s0 = Complex64::new(0.5, 20.0);
        let a = zeta_eta(s0.conj(), 200).unwrap();
        let b = zeta_eta(s0, 200).unwrap().conj();
        assert_eq!(a, b);
        let em = zeta_euler_maclaurin(s0);
        assert!((b.conj() - em).norm() < 1e-12);
    }

    #[test]
    fn eta_domain_errors() {
        assert!(zeta_eta(Complex64::new(1.0, 0.0), 100).is_err());
        assert!(zeta_eta(Complex64::new(-0.5, 1.0), 100).is_err());
        assert!(zeta_eta(Complex64::new(2.0, 0.0), 5).is_err());
    }

    #[test]
    fn eta_matches_euler_maclaurin_high_on_line() {
        for t in [50.0, 150.0, 300.0, 450.0] {
            let s = Complex64::new(0.5, t);
            let a = zeta_eta(s, eta_terms(t)).unwrap();
            let b = zeta_euler_maclaurin(s);
            assert!((a - b).norm() < 1e-9, "t = {t}: {a} vs {b}");
        }
    }

    #[test]
    fn euler_product_cases() {
        let basel = euler_product_partial(Complex64::new(2.0, 0.0), &sieve(1_000_000).unwrap()).unwrap();
        assert!((basel.re - PI * PI / 6.0).abs() < 1e-6);
        let three = euler_product_partial(Complex64::new(3.0, 0.0), &sieve(1000).unwrap()).unwrap();
        let eta3 = zeta_eta(Complex64::new(3.0, 0.0), 100).unwrap();
        assert!((three - eta3).norm() < 1e-5);
        let single = euler_product_partial(Complex64::new(2.0, 0.0), &sieve(2).unwrap()).unwrap();
        assert_relative_eq!(single.re, 4.0 / 3.0, epsilon = 1e-15);
        assert!(matches!(
            euler_product_partial(Complex64::new(1.0, 3.0), &sieve(10).unwrap()),
            Err(Error::Divergence(_))
        ));
    }

    #[test]
    fn euler_product_converges_monotonically() {
        let s = Complex64::new(2.0, 0.0);
        let target = zeta_eta(s, 100).unwrap();
        let errs: Vec<f64> = [100u64, 1000, 10_000]
            .iter()
            .map(|&l| (euler_product_partial(s, &sieve(l).unwrap()).unwrap() - target).norm())
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
    }

    #[test]
    fn hardy_z_modulus_and_evenness() {
        let t = 30.0;
        let z = hardy_z(t);
        let zeta = zeta_eta(Complex64::new(0.5, t), eta_terms(t)).unwrap();
        assert!((z * z - zeta.norm_sqr()).abs() < 1e-6);
        assert_relative_eq!(z * z, 0.355_249_995_747_289_9, epsilon = 1e-10);
        assert_eq!(hardy_z(-20.0), hardy_z(20.0));
        assert!(hardy_z(14.0) * hardy_z(14.5) < 0.0);
    }

    #[test]
    fn riemann_siegel_against_eta_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let t: f64 = rng.gen_range(10.0..300.0);
            let rs = hardy_z(t);
            let oracle = hardy_z_eta(t, eta_terms(t));
            assert!((rs - oracle).abs() <= 1e-4, "t = {t}: {rs} vs {oracle}");
        }
    }

    #[test]
    fn switchover_overlap() {
        for t in [90.0, 95.0, 100.0, 110.0, 130.0] {
            let a = hardy_z_riemann_siegel(t);
            let b = hardy_z_eta(t, eta_terms(t));
            assert!((a - b).abs() < 1e-7, "t = {t}: {a} vs {b}");
        }
    }

    #[test]
    fn xi_on_critical_line() {
        // assemble ξ(1/2 + iE) as a complex product and check it is real
        let e = 10.0;
        let s = Complex64::new(0.5, e);
        let prod = 0.5 * s * (s - 1.0)
            * (-(s / 2.0) * PI.ln()).exp()
            * log_gamma(s / 2.0).unwrap().exp()
            * zeta_eta(s, 200).unwrap();
        assert!(prod.im.abs() <= 1e-10 * prod.norm().max(1e-300) + 1e-10);
        assert!((prod.re - xi_critical(e)).abs() < 1e-10 * prod.re.abs().max(1.0));

        assert!(xi_critical(14.0) * xi_critical(14.3) < 0.0);
        let half = xi_critical(0.0);
        // eta assembly at s = 1/2
        let oracle = -0.5 * 0.25 * PI.powf(-0.25)
            * log_gamma(Complex64::new(0.25, 0.0)).unwrap().re.exp()
            * zeta_eta(Complex64::new(0.5, 0.0), 200).unwrap().re;
        assert_relative_eq!(half, oracle, epsilon = 1e-12);
        assert!((half - 0.4971).abs() < 1e-4);
    }

    #[test]
    fn xi_even() {
        for e in [1.0, 5.5, 14.134_725, 33.0, 120.0] {
            assert!(xi_critical(e) * xi_critical(-e) >= 0.0);
            assert_eq!(xi_critical(e), xi_critical(-e));
        }
    }
}
