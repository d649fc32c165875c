/* C interface to the adia library. All handles are opaque; every fallible
 * call returns an adia_status and leaves a thread-local message readable via
 * adia_last_error(). */
#ifndef ADIA_ADIA_H
#define ADIA_ADIA_H

#include <stddef.h>

#if defined(_WIN32)
#define ADIA_API __declspec(dllexport)
#else
#define ADIA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adia_status {
  ADIA_OK = 0,
  ADIA_ERR_INVALID_ARGUMENT = 1,
  ADIA_ERR_BRANCH_VIOLATION = 2,
  ADIA_ERR_POLE_AT = 3,
  ADIA_ERR_NO_EIGENVALUE = 4,
  ADIA_ERR_CONTINUATION_FAILURE = 5,
  ADIA_ERR_QUADRATURE_FAILURE = 6,
  ADIA_ERR_CONTOUR_CLASH = 7,
  ADIA_ERR_ACCURACY_LOSS = 8,
  ADIA_ERR_ON_CUT = 9,
  ADIA_ERR_TRUNCATION_TOO_SMALL = 10,
  ADIA_ERR_TRACE_DIVERGED = 11,
  ADIA_ERR_LINEAR_SOLVE_FAILURE = 12,
  ADIA_ERR_INTERNAL = 100
} adia_status;

typedef struct adia_complex {
  double re;
  double im;
} adia_complex;

typedef struct adia_table adia_table;
typedef struct adia_series adia_series;

ADIA_API const char* adia_version(void);
ADIA_API const char* adia_status_name(adia_status status);
/* Nonzero for errors caused by the caller's input rather than by numerics. */
ADIA_API int adia_status_is_validation(adia_status status);
ADIA_API const char* adia_last_error(void);

/* Special and branch functions by name; adia_special_name(i) enumerates the
 * names and returns NULL past the end. side is "none", "above" or "below"
 * and selects the one-sided limit onto the real axis. eps is used only by
 * the eps-dependent functions. */
ADIA_API const char* adia_special_name(size_t index);
ADIA_API adia_status adia_special(const char* fn, adia_complex arg, double eps,
                                  const char* side, adia_complex* out);

ADIA_API adia_status adia_tau_threshold(int n, double* out);
ADIA_API adia_status adia_eigen(int n, double tau, double* p_n, double* e_n,
                                double* dlnpn_dtau);

/* Exact Fourier coefficient of the generating solution. */
ADIA_API adia_status adia_series_create(double eps, adia_series** out);
ADIA_API adia_status adia_series_psi(const adia_series* s, int n, double x, double t,
                                     adia_complex* psi, double* est_error);
ADIA_API void adia_series_free(adia_series* s);

/* method is "contour" or "series". */
ADIA_API adia_status adia_field_table(double eps, int n, double t, double x_min,
                                      double x_max, int steps, const char* method,
                                      adia_table** out);
/* delta_reg <= 0 selects the default transition width. */
ADIA_API adia_status adia_compare_table(double eps, int n, double t, int steps,
                                        double delta_reg, adia_table** out);

typedef struct adia_check_params {
  const double* eps; /* NULL or eps_count == 0 selects the check default */
  size_t eps_count;
  int n;             /* <= 0: default */
  double tau;        /* NaN: default */
  double xi;         /* NaN: default */
  int x_steps;       /* <= 0: default */
  int samples;       /* <= 0: default */
  unsigned long long seed;
} adia_check_params;

ADIA_API void adia_check_params_init(adia_check_params* p);
ADIA_API const char* adia_check_name(size_t index);
ADIA_API adia_status adia_check(const char* name, const adia_check_params* p, adia_table** out);

typedef struct adia_oracle_report {
  double deviation;
  double norm_drift;
  double runtime_ms;
  double boundary_amplitude;
  long steps;
} adia_oracle_report;

/* snap is "cell-average" or "nearest-node". */
ADIA_API adia_status adia_oracle(double eps, int n, double t0, double t1, double x_max,
                                 int nx, double dt, const char* snap,
                                 adia_oracle_report* out);

ADIA_API size_t adia_table_rows(const adia_table* t);
ADIA_API size_t adia_table_cols(const adia_table* t);
ADIA_API const char* adia_table_column(const adia_table* t, size_t col);
/* Text cells return their string; numeric cells return NULL. */
ADIA_API const char* adia_table_text(const adia_table* t, size_t row, size_t col);
/* Numeric cells return their value; text cells return NaN. */
ADIA_API double adia_table_number(const adia_table* t, size_t row, size_t col);
ADIA_API void adia_table_free(adia_table* t);

#ifdef __cplusplus
}
#endif

#endif
