/*
 * tbsym C API.
 *
 * Tight-binding Hamiltonians on periodic n x n square lattices, their
 * simultaneous eigenbasis with the two lattice translations, and the
 * resulting dispersion relation.
 *
 * All functions returning tbsym_status leave a human-readable message
 * retrievable with tbsym_last_error() (per thread) when they fail. Handles are
 * immutable after creation and may be read from several threads.
 */
#ifndef TBSYM_H
#define TBSYM_H

#include <stddef.h>

#if defined(TBSYM_BUILDING_LIBRARY)
#define TBSYM_API __attribute__((visibility("default")))
#else
#define TBSYM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tbsym_status {
  TBSYM_OK = 0,
  TBSYM_ERROR_INVALID_ARGUMENT = 1,
  TBSYM_ERROR_NOT_CONVERGED = 2,
  TBSYM_ERROR_DEGENERATE = 3, /* unresolved subspace or label deficit */
  TBSYM_ERROR_IO = 4,
  TBSYM_ERROR_INTERNAL = 5
} tbsym_status;

typedef enum tbsym_method {
  TBSYM_METHOD_REFINE = 0,
  TBSYM_METHOD_COMBINATION = 1
} tbsym_method;

typedef struct tbsym_params {
  size_t n; /* sites per dimension, >= 3 */
  double alpha;
  double t;
  tbsym_method method;
  int has_gap_tol; /* nonzero: use gap_tol instead of the default */
  double gap_tol;
  int has_filter_tol;
  double filter_tol;
} tbsym_params;

typedef struct tbsym_report {
  double max_residual_h;
  double max_residual_sx;
  double max_residual_sy;
  double max_orthogonality_defect;
  double max_eigenvalue_error;
  double max_entrywise_vector_error;
} tbsym_report;

typedef struct tbsym_band_row {
  size_t r;
  size_t s;
  double kx;
  double ky;
  double energy;
} tbsym_band_row;

typedef struct tbsym_spectrum tbsym_spectrum;
typedef struct tbsym_bands tbsym_bands;

TBSYM_API const char* tbsym_version(void);
TBSYM_API const char* tbsym_last_error(void);

/* Refine method, default tolerances. */
TBSYM_API void tbsym_params_init(tbsym_params* params, size_t n, double alpha,
                                 double t);
TBSYM_API tbsym_status tbsym_params_validate(const tbsym_params* params);

/* Sorted eigenvalues of H. */
TBSYM_API tbsym_status tbsym_spectrum_compute(const tbsym_params* params,
                                              tbsym_spectrum** out);
TBSYM_API size_t tbsym_spectrum_size(const tbsym_spectrum* spectrum);
TBSYM_API const double* tbsym_spectrum_values(const tbsym_spectrum* spectrum);
/* path NULL or "-" writes to stdout. */
TBSYM_API tbsym_status tbsym_spectrum_write_csv(const tbsym_spectrum* spectrum,
                                                const char* path);
TBSYM_API void tbsym_spectrum_free(tbsym_spectrum* spectrum);

/* Numerical dispersion via the selected simultaneous-diagonalization method. */
TBSYM_API tbsym_status tbsym_bands_compute(const tbsym_params* params,
                                           tbsym_bands** out);
/* Closed-form dispersion and eigenvectors, same layout. */
TBSYM_API tbsym_status tbsym_bands_analytic(const tbsym_params* params,
                                            tbsym_bands** out);
TBSYM_API size_t tbsym_bands_size(const tbsym_bands* bands);
TBSYM_API tbsym_status tbsym_bands_row(const tbsym_bands* bands, size_t index,
                                       tbsym_band_row* out);
TBSYM_API tbsym_status tbsym_bands_report(const tbsym_bands* bands,
                                          tbsym_report* out);
/* Eigenvector of row `index` as interleaved re/im pairs; len must be 2 * n^2. */
TBSYM_API tbsym_status tbsym_bands_vector(const tbsym_bands* bands,
                                          size_t index, double* out,
                                          size_t len);
TBSYM_API tbsym_status tbsym_bands_write_csv(const tbsym_bands* bands,
                                             const char* path);
TBSYM_API tbsym_status tbsym_bands_write_vectors_csv(const tbsym_bands* bands,
                                                     const char* path);
TBSYM_API void tbsym_bands_free(tbsym_bands* bands);

/* Thresholds used by the `verify` command. */
TBSYM_API void tbsym_acceptance_thresholds(tbsym_report* out);
/* Nonzero iff every metric is at or below its threshold. */
TBSYM_API int tbsym_report_within_thresholds(const tbsym_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TBSYM_H */
