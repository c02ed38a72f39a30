//! C ABI over the `rsl` numerics.
//!
//! Every fallible function returns an [`RslStatus`] and writes its result
//! through an out-pointer; on failure the message is kept per thread and read
//! back with [`rsl_last_error`]. Tables are opaque handles released by their
//! `_free` function. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use rsl::landau::{landau_normal_modes, landau_spectrum, LandauParams, SpectrumTable};
use rsl::primes::{prime_powers, sieve, PrimeTable};
use rsl::trace::{explicit_formula_residual, Gaussian, QuadParams};
use rsl::xp::{count_bk, count_connes, count_landau};
use rsl::zeta::{find_zeros, hardy_z, read_cache, ZeroTable};
use rsl::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RslStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Divergence = 3,
    InsufficientData = 4,
    Regime = 5,
    Accuracy = 6,
    Stability = 7,
    Format = 8,
    Io = 9,
    OutOfRange = 10,
    InvalidUtf8 = 11,
    Panic = 12,
}

impl From<&Error> for RslStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain(_) => RslStatus::Domain,
            Error::Divergence(_) => RslStatus::Divergence,
            Error::InsufficientData { .. } => RslStatus::InsufficientData,
            Error::Regime(_) => RslStatus::Regime,
            Error::Accuracy { .. } => RslStatus::Accuracy,
            Error::Stability { .. } => RslStatus::Stability,
            Error::Format { .. } => RslStatus::Format,
            Error::Io(_) => RslStatus::Io,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

struct Failure(RslStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(RslStatus::from(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(RslStatus::NullPointer, format!("{what} is null"))
}

/// Run `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RslStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RslStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            RslStatus::Panic
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn handle<'a, T>(h: *const T, what: &str) -> Result<&'a T, Failure> {
    h.as_ref().ok_or_else(|| null(what))
}

fn index<T: Copy>(data: &[T], i: usize) -> Result<T, Failure> {
    data.get(i)
        .copied()
        .ok_or_else(|| Failure(RslStatus::OutOfRange, format!("index {i} out of range for length {}", data.len())))
}

/// Message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rsl_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static name of a status code, e.g. `"domain"`.
#[no_mangle]
pub extern "C" fn rsl_status_name(status: RslStatus) -> *const c_char {
    let s: &'static CStr = match status {
        RslStatus::Ok => c"ok",
        RslStatus::NullPointer => c"null pointer",
        RslStatus::Domain => c"domain",
        RslStatus::Divergence => c"divergence",
        RslStatus::InsufficientData => c"insufficient data",
        RslStatus::Regime => c"regime",
        RslStatus::Accuracy => c"accuracy",
        RslStatus::Stability => c"stability",
        RslStatus::Format => c"format",
        RslStatus::Io => c"io",
        RslStatus::OutOfRange => c"out of range",
        RslStatus::InvalidUtf8 => c"invalid utf-8",
        RslStatus::Panic => c"panic",
    };
    s.as_ptr()
}

pub struct RslPrimeTable(PrimeTable);

pub struct RslZeroTable(ZeroTable);

pub struct RslSpectrum(SpectrumTable);

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_primes_sieve(limit: u64, out: *mut *mut RslPrimeTable) -> RslStatus {
    guard(|| {
        let table = sieve(limit)?;
        write(out, Box::into_raw(Box::new(RslPrimeTable(table))))
    })
}

/// Number of primes in the table; 0 for NULL.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rsl_primes_len(table: *const RslPrimeTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.len())
}

/// Borrowed pointer to the ascending primes; valid while the handle lives.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rsl_primes_data(table: *const RslPrimeTable) -> *const u64 {
    table.as_ref().map_or(ptr::null(), |t| t.0.primes().as_ptr())
}

/// # Safety
/// `table` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rsl_primes_free(table: *mut RslPrimeTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Locate the critical-line zeros in `(0, t_max]`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_zeros_find(
    t_max: f64,
    grid_factor: f64,
    refine_tol: f64,
    out: *mut *mut RslZeroTable,
) -> RslStatus {
    guard(|| {
        let table = find_zeros(t_max, grid_factor, refine_tol)?;
        write(out, Box::into_raw(Box::new(RslZeroTable(table))))
    })
}

/// Read a zero cache written by `rsl zeros`.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_zeros_read(path: *const c_char, out: *mut *mut RslZeroTable) -> RslStatus {
    guard(|| {
        if path.is_null() {
            return Err(null("path"));
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|e| Failure(RslStatus::InvalidUtf8, format!("path: {e}")))?;
        let table = read_cache(Path::new(path))?;
        write(out, Box::into_raw(Box::new(RslZeroTable(table))))
    })
}

/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rsl_zeros_len(table: *const RslZeroTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.len())
}

/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rsl_zeros_data(table: *const RslZeroTable) -> *const f64 {
    table.as_ref().map_or(ptr::null(), |t| t.0.zeros().as_ptr())
}

/// # Safety
/// `table` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_zeros_get(table: *const RslZeroTable, i: usize, out: *mut f64) -> RslStatus {
    guard(|| {
        let t = handle(table, "zero table")?;
        write(out, index(t.0.zeros(), i)?)
    })
}

/// Number of zeros with ordinate `<= e`.
///
/// # Safety
/// `table` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_zeros_staircase(table: *const RslZeroTable, e: f64, out: *mut usize) -> RslStatus {
    guard(|| {
        let t = handle(table, "zero table")?;
        write(out, t.0.staircase(e))
    })
}

/// # Safety
/// `table` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rsl_zeros_free(table: *mut RslZeroTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

fn finite(name: &str, v: f64) -> Result<f64, Failure> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Failure(RslStatus::Domain, format!("{name} must be finite, got {v}")))
    }
}

fn positive(name: &str, v: f64) -> Result<f64, Failure> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Failure(RslStatus::Domain, format!("{name} must be positive, got {v}")))
    }
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_hardy_z(t: f64, out: *mut f64) -> RslStatus {
    guard(|| write(out, hardy_z(finite("t", t)?)))
}

/// Semiclassical count of the `xp` model, with the `-1/8` shift if `maslov`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_count_bk(e: f64, maslov: bool, out: *mut f64) -> RslStatus {
    guard(|| write(out, count_bk(positive("E", e)?, maslov)))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_count_connes(e: f64, lambda: f64, out: *mut f64) -> RslStatus {
    guard(|| write(out, count_connes(positive("E", e)?, positive("lambda", lambda)?)))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_count_landau(e: f64, l: f64, ell: f64, out: *mut f64) -> RslStatus {
    guard(|| {
        let ell = positive("ell", ell)?;
        if l.is_nan() || l <= ell {
            return Err(Failure(RslStatus::Domain, format!("need L > ell, got L = {l}, ell = {ell}")));
        }
        write(out, count_landau(positive("E", e)?, l, ell))
    })
}

/// Explicit-formula residual `lhs - rhs` for a Gaussian of width `sigma`,
/// the given zeros, and prime powers `p^n <= e^u_max` drawn from `primes`.
///
/// # Safety
/// Both handles must be live and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_explicit_residual(
    sigma: f64,
    zeros: *const RslZeroTable,
    primes: *const RslPrimeTable,
    u_max: f64,
    quad_tol: f64,
    out: *mut f64,
) -> RslStatus {
    guard(|| {
        let zeros = handle(zeros, "zero table")?;
        let primes = handle(primes, "prime table")?;
        let h = Gaussian::new(sigma)?;
        let powers = prime_powers(&primes.0, u_max)?;
        let quad = QuadParams::with_tol(positive("quad_tol", quad_tol)?);
        let report = explicit_formula_residual(&h, &zeros.0, &powers, quad)?;
        write(out, report.residual)
    })
}

/// Physical constants of the charge-in-field-and-saddle model.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct RslLandauParams {
    pub mass: f64,
    pub charge: f64,
    pub field: f64,
    pub light_speed: f64,
    /// Saddle strength; 0 gives the pure Landau problem.
    pub coupling: f64,
    pub hbar: f64,
}

/// Exact normal-mode frequencies `omega_c` and `|omega_h|`.
///
/// # Safety
/// `params` must point to a valid struct; both out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_landau_modes(
    params: *const RslLandauParams,
    omega_c: *mut f64,
    omega_h_abs: *mut f64,
) -> RslStatus {
    guard(|| {
        let q = *handle(params, "params")?;
        if omega_c.is_null() || omega_h_abs.is_null() {
            return Err(null("output pointer"));
        }
        let p = LandauParams::new(q.mass, q.charge, q.field, q.light_speed, q.coupling, q.hbar)?;
        let m = landau_normal_modes(&p);
        write(omega_c, m.omega_c)?;
        write(omega_h_abs, m.omega_h_abs)
    })
}

/// Real solutions `E_n <= e_max` of the boundary phase condition at ratio `rho`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_spectrum_compute(rho: f64, e_max: f64, out: *mut *mut RslSpectrum) -> RslStatus {
    guard(|| {
        let s = landau_spectrum(rho, e_max)?;
        write(out, Box::into_raw(Box::new(RslSpectrum(s))))
    })
}

/// # Safety
/// `spectrum` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rsl_spectrum_len(spectrum: *const RslSpectrum) -> usize {
    spectrum.as_ref().map_or(0, |s| s.0.len())
}

/// Energy and index of level `i`; either out-pointer may be NULL.
///
/// # Safety
/// `spectrum` must be a live handle; non-NULL out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rsl_spectrum_get(
    spectrum: *const RslSpectrum,
    i: usize,
    energy: *mut f64,
    n: *mut i64,
) -> RslStatus {
    guard(|| {
        let s = handle(spectrum, "spectrum")?;
        let e = index(&s.0.energies, i)?;
        let k = index(&s.0.indices, i)?;
        if !energy.is_null() {
            energy.write(e);
        }
        if !n.is_null() {
            n.write(k);
        }
        Ok(())
    })
}

/// # Safety
/// `spectrum` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rsl_spectrum_free(spectrum: *mut RslSpectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}
