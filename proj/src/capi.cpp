#include "tbsym/tbsym.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "tbsym/bands.hpp"
#include "tbsym/csv.hpp"
#include "tbsym/error.hpp"

struct tbsym_spectrum {
  tbsym::SpectrumData data;
};

struct tbsym_bands {
  tbsym::Dispersion dispersion;
};

namespace {

thread_local std::string last_error;

// Acceptance thresholds for `verify`, taken from the n = 25 reference run with
// a 100x margin. Symmetry residuals share the H residual bound.
constexpr tbsym_report kThresholds{
    1.9e-11,  // max_residual_h
    1.9e-11,  // max_residual_sx
    1.9e-11,  // max_residual_sy
    3.8e-11,  // max_orthogonality_defect
    1.1e-13,  // max_eigenvalue_error
    3.5e-12,  // max_entrywise_vector_error
};

tbsym_status fail(tbsym_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
tbsym_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const tbsym::InvalidArgument& e) {
    return fail(TBSYM_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const tbsym::NotConverged& e) {
    return fail(TBSYM_ERROR_NOT_CONVERGED, e.what());
  } catch (const tbsym::DegenerateSubspace& e) {
    return fail(TBSYM_ERROR_DEGENERATE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TBSYM_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TBSYM_ERROR_INTERNAL, e.what());
  }
}

tbsym::LatticeSpec to_spec(const tbsym_params& p) {
  return {p.n, p.alpha, p.t};
}

tbsym::SolveOptions to_options(const tbsym_params& p) {
  tbsym::SolveOptions options;
  switch (p.method) {
    case TBSYM_METHOD_REFINE:
      options.method = tbsym::Method::refine;
      break;
    case TBSYM_METHOD_COMBINATION:
      options.method = tbsym::Method::combination;
      break;
    default:
      throw tbsym::InvalidArgument("unknown method");
  }
  if (p.has_gap_tol) options.gap_tol = p.gap_tol;
  if (p.has_filter_tol) options.filter_tol = p.filter_tol;
  return options;
}

void check_params(const tbsym_params* p) {
  if (!p) throw tbsym::InvalidArgument("params is null");
  tbsym::validate(to_spec(*p));
  if (p->has_gap_tol && !(p->gap_tol > 0.0))
    throw tbsym::InvalidArgument("gap tolerance must be > 0");
  if (p->has_filter_tol && !(p->filter_tol > 0.0))
    throw tbsym::InvalidArgument("filter tolerance must be > 0");
  to_options(*p);
}

template <typename Writer>
tbsym_status write_to(const char* path, Writer&& writer) {
  if (!path || std::strcmp(path, "-") == 0) {
    writer(std::cout);
    std::cout.flush();
    return std::cout ? TBSYM_OK : fail(TBSYM_ERROR_IO, "failed writing to stdout");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return fail(TBSYM_ERROR_IO, std::string("cannot open ") + path);
  writer(out);
  out.close();
  if (!out) return fail(TBSYM_ERROR_IO, std::string("failed writing ") + path);
  return TBSYM_OK;
}

tbsym_report to_c(const tbsym::VerificationReport& r) {
  return {r.max_residual_h,           r.max_residual_sx,
          r.max_residual_sy,          r.max_orthogonality_defect,
          r.max_eigenvalue_error,     r.max_entrywise_vector_error};
}

}  // namespace

extern "C" {

const char* tbsym_version(void) { return "0.1.0"; }

const char* tbsym_last_error(void) { return last_error.c_str(); }

void tbsym_params_init(tbsym_params* params, size_t n, double alpha, double t) {
  if (!params) return;
  *params = tbsym_params{};
  params->n = n;
  params->alpha = alpha;
  params->t = t;
  params->method = TBSYM_METHOD_REFINE;
}

tbsym_status tbsym_params_validate(const tbsym_params* params) {
  return guarded([&] {
    check_params(params);
    return TBSYM_OK;
  });
}

tbsym_status tbsym_spectrum_compute(const tbsym_params* params,
                                    tbsym_spectrum** out) {
  return guarded([&] {
    if (!out) throw tbsym::InvalidArgument("out is null");
    *out = nullptr;
    check_params(params);
    *out = new tbsym_spectrum{tbsym::compute_spectrum(to_spec(*params))};
    return TBSYM_OK;
  });
}

size_t tbsym_spectrum_size(const tbsym_spectrum* spectrum) {
  return spectrum ? spectrum->data.values.size() : 0;
}

const double* tbsym_spectrum_values(const tbsym_spectrum* spectrum) {
  return spectrum ? spectrum->data.values.data() : nullptr;
}

tbsym_status tbsym_spectrum_write_csv(const tbsym_spectrum* spectrum,
                                      const char* path) {
  return guarded([&] {
    if (!spectrum) throw tbsym::InvalidArgument("spectrum is null");
    return write_to(path, [&](std::ostream& os) {
      tbsym::write_spectrum_csv(os, spectrum->data);
    });
  });
}

void tbsym_spectrum_free(tbsym_spectrum* spectrum) { delete spectrum; }

tbsym_status tbsym_bands_compute(const tbsym_params* params, tbsym_bands** out) {
  return guarded([&] {
    if (!out) throw tbsym::InvalidArgument("out is null");
    *out = nullptr;
    check_params(params);
    *out = new tbsym_bands{
        tbsym::compute_dispersion(to_spec(*params), to_options(*params))};
    return TBSYM_OK;
  });
}

tbsym_status tbsym_bands_analytic(const tbsym_params* params, tbsym_bands** out) {
  return guarded([&] {
    if (!out) throw tbsym::InvalidArgument("out is null");
    *out = nullptr;
    check_params(params);
    *out = new tbsym_bands{tbsym::analytic_dispersion(to_spec(*params))};
    return TBSYM_OK;
  });
}

size_t tbsym_bands_size(const tbsym_bands* bands) {
  return bands ? bands->dispersion.bands.rows.size() : 0;
}

tbsym_status tbsym_bands_row(const tbsym_bands* bands, size_t index,
                             tbsym_band_row* out) {
  return guarded([&] {
    if (!bands || !out) throw tbsym::InvalidArgument("null argument");
    const auto& rows = bands->dispersion.bands.rows;
    if (index >= rows.size()) throw tbsym::InvalidArgument("row index out of range");
    const tbsym::BandRow& row = rows[index];
    *out = {row.r, row.s, row.kx, row.ky, row.energy};
    return TBSYM_OK;
  });
}

tbsym_status tbsym_bands_report(const tbsym_bands* bands, tbsym_report* out) {
  return guarded([&] {
    if (!bands || !out) throw tbsym::InvalidArgument("null argument");
    *out = to_c(bands->dispersion.report);
    return TBSYM_OK;
  });
}

tbsym_status tbsym_bands_vector(const tbsym_bands* bands, size_t index,
                                double* out, size_t len) {
  return guarded([&] {
    if (!bands || !out) throw tbsym::InvalidArgument("null argument");
    const tbsym::ComplexMatrix& v = bands->dispersion.basis.vectors;
    if (index >= v.dim()) throw tbsym::InvalidArgument("row index out of range");
    if (len != 2 * v.dim())
      throw tbsym::InvalidArgument("output length must be 2 * n^2");
    for (std::size_t i = 0; i < v.dim(); ++i) {
      out[2 * i] = v(i, index).real();
      out[2 * i + 1] = v(i, index).imag();
    }
    return TBSYM_OK;
  });
}

tbsym_status tbsym_bands_write_csv(const tbsym_bands* bands, const char* path) {
  return guarded([&] {
    if (!bands) throw tbsym::InvalidArgument("bands is null");
    return write_to(path, [&](std::ostream& os) {
      tbsym::write_bands_csv(os, bands->dispersion.bands);
    });
  });
}

tbsym_status tbsym_bands_write_vectors_csv(const tbsym_bands* bands,
                                           const char* path) {
  return guarded([&] {
    if (!bands) throw tbsym::InvalidArgument("bands is null");
    return write_to(path, [&](std::ostream& os) {
      tbsym::write_vectors_csv(os, bands->dispersion.basis.vectors);
    });
  });
}

void tbsym_bands_free(tbsym_bands* bands) { delete bands; }

void tbsym_acceptance_thresholds(tbsym_report* out) {
  if (out) *out = kThresholds;
}

int tbsym_report_within_thresholds(const tbsym_report* report) {
  if (!report) return 0;
  return report->max_residual_h <= kThresholds.max_residual_h &&
         report->max_residual_sx <= kThresholds.max_residual_sx &&
         report->max_residual_sy <= kThresholds.max_residual_sy &&
         report->max_orthogonality_defect <=
             kThresholds.max_orthogonality_defect &&
         report->max_eigenvalue_error <= kThresholds.max_eigenvalue_error &&
         report->max_entrywise_vector_error <=
             kThresholds.max_entrywise_vector_error;
}

}  // extern "C"
