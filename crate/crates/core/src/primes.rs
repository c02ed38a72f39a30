//! Prime tables and prime-power enumeration.
//!
//! Limits up to [`SEGMENT_THRESHOLD`] use a single odd-only sieve; above it the
//! range is processed in fixed-size segments so memory stays bounded by the
//! square root of the limit plus one segment.

use crate::error::{Error, Result};

/// Above this limit the sieve switches to segmented processing.
pub const SEGMENT_THRESHOLD: u64 = 10_000_000;

const SEGMENT_LEN: u64 = 1 << 18;

/// All primes up to an inclusive limit, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    /// Table restricted to primes not exceeding `limit`.
    pub fn truncated(&self, limit: u64) -> PrimeTable {
        let end = self.primes.partition_point(|&p| p <= limit);
        PrimeTable {
            limit: limit.min(self.limit),
            primes: self.primes[..end].to_vec(),
        }
    }
}

/// A prime power `p^n` carrying `n log p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimePower {
    pub p: u64,
    pub n: u32,
    pub log_term: f64,
}

impl PrimePower {
    pub fn new(p: u64, n: u32) -> Self {
        PrimePower {
            p,
            n,
            log_term: f64::from(n) * (p as f64).ln(),
        }
    }

    /// `log p`, the von Mangoldt weight of this power.
    pub fn log_p(&self) -> f64 {
        (self.p as f64).ln()
    }
}

/// Primes `<= limit`.
pub fn sieve(limit: u64) -> Result<PrimeTable> {
    if limit < 2 {
        return Err(Error::Domain(format!(
            "sieve limit must be at least 2, got {limit}"
        )));
    }
    let primes = if limit <= SEGMENT_THRESHOLD {
        odd_sieve(limit)
    } else {
        segmented_sieve(limit)
    };
    Ok(PrimeTable { limit, primes })
}

fn odd_sieve(limit: u64) -> Vec<u64> {
    // index i stands for 2i + 1
    let n = ((limit - 1) / 2 + 1) as usize;
    let mut composite = vec![0u64; n.div_ceil(64)];
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= limit as usize {
        if composite[i / 64] & (1 << (i % 64)) == 0 {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j < n {
                composite[j / 64] |= 1 << (j % 64);
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = Vec::with_capacity(estimate_count(limit));
    primes.push(2);
    primes.extend(
        (1..n)
            .filter(|&i| composite[i / 64] & (1 << (i % 64)) == 0)
            .map(|i| (2 * i + 1) as u64),
    );
    primes
}

fn segmented_sieve(limit: u64) -> Vec<u64> {
    let root = integer_sqrt(limit);
    let base = odd_sieve(root.max(2));
    let mut primes = Vec::with_capacity(estimate_count(limit));
    primes.extend(base.iter().copied());

    let mut low = root + 1;
    let mut mark = vec![false; SEGMENT_LEN as usize];
    while low <= limit {
        let high = (low + SEGMENT_LEN - 1).min(limit);
        let len = (high - low + 1) as usize;
        mark[..len].iter_mut().for_each(|m| *m = false);
        for &p in &base {
            if p * p > high {
                break;
            }
            let start = (p * p).max(low.div_ceil(p) * p);
            let mut m = start;
            while m <= high {
                mark[(m - low) as usize] = true;
                m += p;
            }
        }
        primes.extend(
            (0..len)
                .filter(|&k| !mark[k])
                .map(|k| low + k as u64)
                .filter(|&v| v >= 2),
        );
        low = high + 1;
    }
    primes
}

fn integer_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn estimate_count(limit: u64) -> usize {
    let x = limit as f64;
    (1.3 * x / x.ln().max(1.0)) as usize + 8
}

/// All `(p, n)` with `n log p <= u_max`, sorted by `n log p`.
///
/// Powers of each prime are generated until the cutoff, so large primes
/// contribute a single entry.
pub fn prime_powers(table: &PrimeTable, u_max: f64) -> Result<Vec<PrimePower>> {
    if !(u_max > 0.0) {
        return Err(Error::Domain(format!("u_max must be positive, got {u_max}")));
    }
    let mut out = Vec::new();
    for p in table.iter() {
        if (p as f64).ln() > u_max {
            break;
        }
        let mut n = 1u32;
        loop {
            let pp = PrimePower::new(p, n);
            if pp.log_term > u_max {
                break;
            }
            out.push(pp);
            n += 1;
        }
    }
    out.sort_by(|a, b| a.log_term.total_cmp(&b.log_term));
    Ok(out)
}
