#ifndef RSL_H
#define RSL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RslStatus {
  RSL_STATUS_OK = 0,
  RSL_STATUS_NULL_POINTER = 1,
  RSL_STATUS_DOMAIN = 2,
  RSL_STATUS_DIVERGENCE = 3,
  RSL_STATUS_INSUFFICIENT_DATA = 4,
  RSL_STATUS_REGIME = 5,
  RSL_STATUS_ACCURACY = 6,
  RSL_STATUS_STABILITY = 7,
  RSL_STATUS_FORMAT = 8,
  RSL_STATUS_IO = 9,
  RSL_STATUS_OUT_OF_RANGE = 10,
  RSL_STATUS_INVALID_UTF8 = 11,
  RSL_STATUS_PANIC = 12,
} RslStatus;

typedef struct RslPrimeTable RslPrimeTable;

typedef struct RslSpectrum RslSpectrum;

typedef struct RslZeroTable RslZeroTable;

// Physical constants of the charge-in-field-and-saddle model.
typedef struct RslLandauParams {
  double mass;
  double charge;
  double field;
  double light_speed;
  // Saddle strength; 0 gives the pure Landau problem.
  double coupling;
  double hbar;
} RslLandauParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or NULL. The pointer stays
// valid until the next failing call on the same thread.
const char *rsl_last_error(void);

// Static name of a status code, e.g. `"domain"`.
const char *rsl_status_name(enum RslStatus status);

// # Safety
// `out` must be valid for writes.
enum RslStatus rsl_primes_sieve(uint64_t limit, struct RslPrimeTable **out);

// Number of primes in the table; 0 for NULL.
//
// # Safety
// `table` must be NULL or a live handle.
size_t rsl_primes_len(const struct RslPrimeTable *table);

// Borrowed pointer to the ascending primes; valid while the handle lives.
//
// # Safety
// `table` must be NULL or a live handle.
const uint64_t *rsl_primes_data(const struct RslPrimeTable *table);

// # Safety
// `table` must be NULL or a handle not yet freed.
void rsl_primes_free(struct RslPrimeTable *table);

// Locate the critical-line zeros in `(0, t_max]`.
//
// # Safety
// `out` must be valid for writes.
enum RslStatus rsl_zeros_find(double t_max,
                              double grid_factor,
                              double refine_tol,
                              struct RslZeroTable **out);

// Read a zero cache written by `rsl zeros`.
//
// # Safety
// `path` must be a NUL-terminated string and `out` valid for writes.
enum RslStatus rsl_zeros_read(const char *path, struct RslZeroTable **out);

// # Safety
// `table` must be NULL or a live handle.
size_t rsl_zeros_len(const struct RslZeroTable *table);

// # Safety
// `table` must be NULL or a live handle.
const double *rsl_zeros_data(const struct RslZeroTable *table);

// # Safety
// `table` must be a live handle and `out` valid for writes.
enum RslStatus rsl_zeros_get(const struct RslZeroTable *table, size_t i, double *out);

// Number of zeros with ordinate `<= e`.
//
// # Safety
// `table` must be a live handle and `out` valid for writes.
enum RslStatus rsl_zeros_staircase(const struct RslZeroTable *table, double e, size_t *out);

// # Safety
// `table` must be NULL or a handle not yet freed.
void rsl_zeros_free(struct RslZeroTable *table);

// # Safety
// `out` must be valid for writes.
enum RslStatus rsl_hardy_z(double t, double *out);

// Semiclassical count of the `xp` model, with the `-1/8` shift if `maslov`.
//
// # Safety
// `out` must be valid for writes.
enum RslStatus rsl_count_bk(double e, bool maslov, double *out);

// # Safety
// `out` must be valid for writes.
enum RslStatus rsl_count_connes(double e, double lambda, double *out);

// # Safety
// `out` must be valid for writes.
enum RslStatus rsl_count_landau(double e, double l, double ell, double *out);

// Explicit-formula residual `lhs - rhs` for a Gaussian of width `sigma`,
// the given zeros, and prime powers `p^n <= e^u_max` drawn from `primes`.
//
// # Safety
// Both handles must be live and `out` valid for writes.
enum RslStatus rsl_explicit_residual(double sigma,
                                     const struct RslZeroTable *zeros,
                                     const struct RslPrimeTable *primes,
                                     double u_max,
                                     double quad_tol,
                                     double *out);

// Exact normal-mode frequencies `omega_c` and `|omega_h|`.
//
// # Safety
// `params` must point to a valid struct; both out-pointers must be valid for writes.
enum RslStatus rsl_landau_modes(const struct RslLandauParams *params,
                                double *omega_c,
                                double *omega_h_abs);

// Real solutions `E_n <= e_max` of the boundary phase condition at ratio `rho`.
//
// # Safety
// `out` must be valid for writes.
enum RslStatus rsl_spectrum_compute(double rho, double e_max, struct RslSpectrum **out);

// # Safety
// `spectrum` must be NULL or a live handle.
size_t rsl_spectrum_len(const struct RslSpectrum *spectrum);

// Energy and index of level `i`; either out-pointer may be NULL.
//
// # Safety
// `spectrum` must be a live handle; non-NULL out-pointers must be valid for writes.
enum RslStatus rsl_spectrum_get(const struct RslSpectrum *spectrum,
                                size_t i,
                                double *energy,
                                int64_t *n);

// # Safety
// `spectrum` must be NULL or a handle not yet freed.
void rsl_spectrum_free(struct RslSpectrum *spectrum);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RSL_H */
