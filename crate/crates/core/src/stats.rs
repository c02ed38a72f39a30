//! Local statistics of unfolded zeros compared with the unitary ensemble.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::zeta::{smooth_count, ZeroTable};

/// Zeros removed from the bottom of the table before statistics are taken;
/// the lowest zeros are not in the universal regime.
pub const NON_UNIVERSAL_PREFIX: usize = 50;

/// Zeros mapped through the smooth counting function, so the mean spacing is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct UnfoldedSequence {
    values: Vec<f64>,
}

impl UnfoldedSequence {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Drop the `n` lowest entries.
    pub fn drop_lowest(&self, n: usize) -> UnfoldedSequence {
        UnfoldedSequence {
            values: self.values[n.min(self.values.len())..].to_vec(),
        }
    }

    /// Keep the `n` lowest entries.
    pub fn take_lowest(&self, n: usize) -> UnfoldedSequence {
        UnfoldedSequence {
            values: self.values[..n.min(self.values.len())].to_vec(),
        }
    }

    pub fn spacings(&self) -> Vec<f64> {
        self.values.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// `(x_N − x_1)/(N − 1)`.
    pub fn mean_spacing(&self) -> f64 {
        let n = self.values.len();
        if n < 2 {
            return f64::NAN;
        }
        (self.values[n - 1] - self.values[0]) / (n - 1) as f64
    }
}

/// `x_n = θ(γ_n)/π + 1`.
pub fn unfold(zeros: &ZeroTable) -> Result<UnfoldedSequence> {
    unfold_ordinates(zeros.zeros())
}

pub fn unfold_ordinates(ordinates: &[f64]) -> Result<UnfoldedSequence> {
    if ordinates.len() < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: ordinates.len(),
        });
    }
    let values: Vec<f64> = ordinates.iter().map(|&g| smooth_count(g)).collect();
    if values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain(
            "unfolded values are not strictly ascending".into(),
        ));
    }
    Ok(UnfoldedSequence { values })
}

/// Density histogram on fixed edges.
///
/// `counts` holds densities: raw bin counts divided by bin width and by a
/// normalizing sample count recorded in `n_samples`.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<f64>,
    pub n_samples: usize,
}

impl Histogram {
    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn midpoints(&self) -> impl Iterator<Item = f64> + '_ {
        self.bin_edges.windows(2).map(|w| 0.5 * (w[0] + w[1]))
    }

    /// `Σ density · width`.
    pub fn mass(&self) -> f64 {
        self.bin_edges
            .windows(2)
            .zip(&self.counts)
            .map(|(w, d)| (w[1] - w[0]) * d)
            .sum()
    }
}

/// Nearest-neighbour spacing histogram and its distance from the surmise.
#[derive(Debug, Clone, PartialEq)]
pub struct SpacingDistribution {
    pub histogram: Histogram,
    pub ks_stat: f64,
}

/// Unitary-ensemble Wigner surmise `p(s) = (32/π²) s² exp(−4s²/π)`.
pub fn wigner_surmise_pdf(s: f64) -> f64 {
    32.0 / (PI * PI) * s * s * (-4.0 * s * s / PI).exp()
}

/// Closed-form CDF of the surmise, `erf(2s/√π) − (4s/π) exp(−4s²/π)`.
pub fn wigner_surmise_cdf(s: f64) -> f64 {
    if s <= 0.0 {
        return 0.0;
    }
    libm::erf(2.0 * s / PI.sqrt()) - 4.0 * s / PI * (-4.0 * s * s / PI).exp()
}

/// Montgomery's pair correlation `1 − (sin πx / πx)²`.
pub fn montgomery_r2(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let v = (PI * x).sin() / (PI * x);
    1.0 - v * v
}

/// Kolmogorov–Smirnov distance between the empirical CDF of `samples` and `cdf`.
pub fn ks_statistic(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    sorted
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let f = cdf(s);
            let upper = (i as f64 + 1.0) / n - f;
            let lower = f - i as f64 / n;
            upper.max(lower)
        })
        .fold(0.0, f64::max)
}

pub const MIN_SPACINGS: usize = 100;
pub const MIN_PAIR_ENTRIES: usize = 1000;

/// Spacing density on `bins` equal bins over `[0, max(3, s_max)]`, so every
/// spacing is counted and the density integrates to one.
pub fn spacing_distribution(seq: &UnfoldedSequence, bins: usize) -> Result<SpacingDistribution> {
    let spacings = seq.spacings();
    if spacings.len() < MIN_SPACINGS {
        return Err(Error::InsufficientData {
            needed: MIN_SPACINGS,
            got: spacings.len(),
        });
    }
    if bins == 0 {
        return Err(Error::Domain("bin count must be positive".into()));
    }
    let s_max = spacings.iter().copied().fold(0.0, f64::max);
    let upper = s_max.max(3.0) * (1.0 + 1e-12);
    let width = upper / bins as f64;
    let mut raw = vec![0usize; bins];
    for &s in &spacings {
        let k = ((s / width) as usize).min(bins - 1);
        raw[k] += 1;
    }
    let n = spacings.len();
    let bin_edges: Vec<f64> = (0..=bins).map(|k| width * k as f64).collect();
    let counts = raw.iter().map(|&c| c as f64 / (n as f64 * width)).collect();
    Ok(SpacingDistribution {
        histogram: Histogram {
            bin_edges,
            counts,
            n_samples: n,
        },
        ks_stat: ks_statistic(&spacings, wigner_surmise_cdf),
    })
}

/// Density of positive differences `x_m − x_n ∈ (0, x_max]` per unit length
/// per base point.
///
/// Only base points with `x_n + x_max <= x_last` are used, so every counted
/// base point sees its full window; `n_samples` records how many there were.
/// In this mode the histogram mass is the mean number of partners within
/// `x_max`, close to `x_max` for a unit-density sequence.
pub fn pair_correlation(seq: &UnfoldedSequence, x_max: f64, bin_width: f64) -> Result<Histogram> {
    if seq.len() < MIN_PAIR_ENTRIES {
        return Err(Error::InsufficientData {
            needed: MIN_PAIR_ENTRIES,
            got: seq.len(),
        });
    }
    if !(bin_width > 0.0) || !(bin_width <= x_max) {
        return Err(Error::Domain(format!(
            "need 0 < bin_width <= x_max, got {bin_width} and {x_max}"
        )));
    }
    let bins = (x_max / bin_width - 1e-9).ceil() as usize;
    let mut bin_edges: Vec<f64> = (0..bins).map(|k| bin_width * k as f64).collect();
    bin_edges.push(x_max);

    let x = seq.values();
    let last = x[x.len() - 1];
    let bases = x.partition_point(|&v| v + x_max <= last);
    if bases == 0 {
        return Err(Error::InsufficientData {
            needed: 1,
            got: 0,
        });
    }
    let mut raw = vec![0usize; bins];
    for n in 0..bases {
        for &xm in &x[n + 1..] {
            let d = xm - x[n];
            if d > x_max {
                break;
            }
            if d <= 0.0 {
                continue;
            }
            // bins are (left, right]
            let k = ((d / bin_width).ceil() as usize).clamp(1, bins) - 1;
            raw[k] += 1;
        }
    }
    let counts = raw
        .iter()
        .zip(bin_edges.windows(2))
        .map(|(&c, w)| c as f64 / (bases as f64 * (w[1] - w[0])))
        .collect();
    Ok(Histogram {
        bin_edges,
        counts,
        n_samples: bases,
    })
}

/// Pearson correlation coefficient.
pub fn pearson_correlation(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len().min(b.len()) as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for (x, y) in a.iter().zip(b) {
        cov += (x - ma) * (y - mb);
        va += (x - ma) * (x - ma);
        vb += (y - mb) * (y - mb);
    }
    cov / (va * vb).sqrt()
}
