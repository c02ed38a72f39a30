#include <math.h>
#include <stdio.h>
#include <string.h>

#include "rsl.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);      \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  RslPrimeTable *primes = NULL;
  CHECK(rsl_primes_sieve(30, &primes) == RSL_STATUS_OK);
  CHECK(rsl_primes_len(primes) == 10);
  CHECK(rsl_primes_data(primes)[9] == 29);

  RslZeroTable *zeros = NULL;
  CHECK(rsl_zeros_find(60.0, 8.0, 1e-14, &zeros) == RSL_STATUS_OK);
  CHECK(rsl_zeros_len(zeros) == 13);
  double g = 0.0;
  CHECK(rsl_zeros_get(zeros, 0, &g) == RSL_STATUS_OK);
  CHECK(fabs(g - 14.134725141734693) < 1e-12);
  CHECK(rsl_zeros_get(zeros, 13, &g) == RSL_STATUS_OUT_OF_RANGE);
  CHECK(strstr(rsl_last_error(), "out of range") != NULL);

  double r = 1.0;
  CHECK(rsl_explicit_residual(5.0, zeros, primes, 3.0, 1e-9, &r) == RSL_STATUS_OK);
  CHECK(fabs(r) < 1e-5);

  double z = 1.0;
  CHECK(rsl_hardy_z(g, &z) == RSL_STATUS_OK);
  CHECK(fabs(z) < 1e-9);

  RslLandauParams p = {1.0, 1.0, 100.0, 1.0, 1.0, 1.0};
  double wc = 0.0, wh = 0.0;
  CHECK(rsl_landau_modes(&p, &wc, &wh) == RSL_STATUS_OK);
  CHECK(fabs(wc - 100.0) < 1e-4 && fabs(wh - 0.01) < 1e-6);
  p.mass = -1.0;
  CHECK(rsl_landau_modes(&p, &wc, &wh) == RSL_STATUS_DOMAIN);

  RslSpectrum *spectrum = NULL;
  CHECK(rsl_spectrum_compute(0.5, 10.0, &spectrum) == RSL_STATUS_REGIME);
  CHECK(spectrum == NULL);
  CHECK(rsl_spectrum_compute(1000.0, 30.0, &spectrum) == RSL_STATUS_OK);
  CHECK(rsl_spectrum_len(spectrum) > 0);
  int64_t n = 0;
  CHECK(rsl_spectrum_get(spectrum, 0, NULL, &n) == RSL_STATUS_OK && n == 1);

  CHECK(rsl_zeros_read("/nonexistent/zeros.txt", &zeros) == RSL_STATUS_IO);
  CHECK(strcmp(rsl_status_name(RSL_STATUS_IO), "io") == 0);

  rsl_spectrum_free(spectrum);
  rsl_zeros_free(zeros);
  rsl_primes_free(primes);
  rsl_primes_free(NULL);
  puts("ok");
  return 0;
}
