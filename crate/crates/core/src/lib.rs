//! Numerics for the spectral view of the Riemann zeros.
//!
//! - [`primes`]: prime tables and prime powers.
//! - [`special`]: complex log-Gamma, digamma and the Riemann–Siegel theta.
//! - [`zeta`]: ζ near the critical line, Hardy's Z, zeros and the counting function.
//! - [`stats`]: unfolding, nearest-neighbour spacings and pair correlation.
//! - [`trace`]: the Weil explicit formula, periodic-orbit sums and Selberg's product.
//! - [`xp`]: the classical `H = xp` flow and its semiclassical state counts.
//! - [`landau`]: a charge in a magnetic field plus saddle potential, its
//!   lowest-Landau-level projection and the boundary quantization spectrum.
//! - [`cli`]: the batch front end behind the `rsl` binary.

// `!(x > 0.0)` is written on purpose: it rejects NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod landau;
pub mod output;
pub mod primes;
pub mod quad;
pub mod special;
pub mod stats;
pub mod trace;
pub mod xp;
pub mod zeta;

pub use error::{Error, Result};
