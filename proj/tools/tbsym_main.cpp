// tbsym command-line tool. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 1 computational failure, 2 usage error,
// 3 verification threshold exceeded.

#include <cstdio>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tbsym/tbsym.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitThreshold = 3;

struct Options {
  std::size_t n = 0;
  double alpha = 1.0;
  double t = 0.2;
  tbsym_method method = TBSYM_METHOD_REFINE;
  std::optional<double> gap_tol;
  std::optional<double> filter_tol;
  std::string out = "-";
  std::string vectors;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--n", opt.n, "Lattice sites per dimension (>= 3)")->required();
  cmd->add_option("--alpha", opt.alpha, "On-site energy")->capture_default_str();
  cmd->add_option("--t", opt.t, "Nearest-neighbour hopping")->capture_default_str();
  const std::map<std::string, tbsym_method> methods{
      {"refine", TBSYM_METHOD_REFINE}, {"combination", TBSYM_METHOD_COMBINATION}};
  cmd->add_option("--method", opt.method, "Simultaneous diagonalization method")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case))
      ->default_str("refine");
  cmd->add_option("--gap-tol", opt.gap_tol, "Eigenvalue clustering tolerance");
  cmd->add_option("--filter-tol", opt.filter_tol,
                  "Residual tolerance for the combination candidate filter");
}

tbsym_params to_params(const Options& opt) {
  tbsym_params p;
  tbsym_params_init(&p, opt.n, opt.alpha, opt.t);
  p.method = opt.method;
  if (opt.gap_tol) {
    p.has_gap_tol = 1;
    p.gap_tol = *opt.gap_tol;
  }
  if (opt.filter_tol) {
    p.has_filter_tol = 1;
    p.filter_tol = *opt.filter_tol;
  }
  return p;
}

int report_failure(tbsym_status status, const char* what) {
  std::fprintf(stderr, "tbsym %s: %s\n", what, tbsym_last_error());
  return status == TBSYM_ERROR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
}

const char* method_name(tbsym_method m) {
  return m == TBSYM_METHOD_COMBINATION ? "combination" : "refine";
}

int run_spectrum(const Options& opt) {
  const tbsym_params p = to_params(opt);
  tbsym_spectrum* spectrum = nullptr;
  if (tbsym_status st = tbsym_spectrum_compute(&p, &spectrum); st != TBSYM_OK)
    return report_failure(st, "spectrum");
  const tbsym_status st = tbsym_spectrum_write_csv(spectrum, opt.out.c_str());
  tbsym_spectrum_free(spectrum);
  return st == TBSYM_OK ? kExitOk : report_failure(st, "spectrum");
}

int write_bands(const Options& opt, tbsym_bands* bands, const char* what) {
  tbsym_status st = tbsym_bands_write_csv(bands, opt.out.c_str());
  if (st == TBSYM_OK && !opt.vectors.empty())
    st = tbsym_bands_write_vectors_csv(bands, opt.vectors.c_str());
  tbsym_bands_free(bands);
  return st == TBSYM_OK ? kExitOk : report_failure(st, what);
}

int run_bands(const Options& opt) {
  const tbsym_params p = to_params(opt);
  tbsym_bands* bands = nullptr;
  if (tbsym_status st = tbsym_bands_compute(&p, &bands); st != TBSYM_OK) {
    std::fprintf(stderr, "tbsym bands (method %s): %s\n", method_name(opt.method),
                 tbsym_last_error());
    return st == TBSYM_ERROR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
  }
  return write_bands(opt, bands, "bands");
}

int run_analytic(const Options& opt) {
  const tbsym_params p = to_params(opt);
  tbsym_bands* bands = nullptr;
  if (tbsym_status st = tbsym_bands_analytic(&p, &bands); st != TBSYM_OK)
    return report_failure(st, "analytic");
  return write_bands(opt, bands, "analytic");
}

int run_verify(const Options& opt) {
  const tbsym_params p = to_params(opt);
  tbsym_bands* bands = nullptr;
  if (tbsym_status st = tbsym_bands_compute(&p, &bands); st != TBSYM_OK) {
    std::fprintf(stderr, "tbsym verify (method %s): %s\n", method_name(opt.method),
                 tbsym_last_error());
    return st == TBSYM_ERROR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
  }
  tbsym_report report;
  tbsym_bands_report(bands, &report);
  tbsym_bands_free(bands);

  tbsym_report limit;
  tbsym_acceptance_thresholds(&limit);
  const struct {
    const char* key;
    double value;
    double limit;
  } metrics[] = {
      {"max_residual_h", report.max_residual_h, limit.max_residual_h},
      {"max_residual_sx", report.max_residual_sx, limit.max_residual_sx},
      {"max_residual_sy", report.max_residual_sy, limit.max_residual_sy},
      {"max_orthogonality_defect", report.max_orthogonality_defect,
       limit.max_orthogonality_defect},
      {"max_eigenvalue_error", report.max_eigenvalue_error,
       limit.max_eigenvalue_error},
      {"max_entrywise_vector_error", report.max_entrywise_vector_error,
       limit.max_entrywise_vector_error},
  };
  for (const auto& m : metrics) std::printf("%s=%.17g\n", m.key, m.value);
  std::fflush(stdout);

  if (tbsym_report_within_thresholds(&report)) return kExitOk;
  for (const auto& m : metrics)
    if (!(m.value <= m.limit))
      std::fprintf(stderr, "tbsym verify: %s=%.3e exceeds %.1e\n", m.key, m.value,
                   m.limit);
  return kExitThreshold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight-binding square lattice: spectrum, symmetry-adapted "
               "eigenbasis and dispersion relation"};
  app.require_subcommand(1);

  Options opt;
  auto* spectrum = app.add_subcommand(
      "spectrum", "Sorted eigenvalues of H as CSV `index,energy`");
  auto* bands = app.add_subcommand(
      "bands", "Numerical dispersion as CSV `r,s,kx,ky,energy`");
  auto* verify = app.add_subcommand(
      "verify",
      "Print residual, orthogonality and accuracy metrics of the computed "
      "basis. Exit 3 unless max_residual_h, max_residual_sx, max_residual_sy "
      "<= 1.9e-11, max_orthogonality_defect <= 3.8e-11, max_eigenvalue_error "
      "<= 1.1e-13 and max_entrywise_vector_error <= 3.5e-12");
  auto* analytic = app.add_subcommand(
      "analytic", "Closed-form dispersion in the same CSV layout as `bands`");

  for (CLI::App* cmd : {spectrum, bands, verify, analytic}) add_common(cmd, opt);
  for (CLI::App* cmd : {spectrum, bands, analytic})
    cmd->add_option("--out", opt.out, "Output CSV path ('-' for stdout)")
        ->capture_default_str();
  for (CLI::App* cmd : {bands, analytic})
    cmd->add_option("--vectors", opt.vectors,
                    "Also write eigenvectors, one per line as interleaved re/im");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n\n%s", e.what(), app.help().c_str());
    return kExitUsage;
  }

  const tbsym_params p = to_params(opt);
  if (tbsym_params_validate(&p) != TBSYM_OK) {
    std::fprintf(stderr, "error: %s\n\n%s", tbsym_last_error(),
                 app.get_subcommands().front()->help().c_str());
    return kExitUsage;
  }

  if (spectrum->parsed()) return run_spectrum(opt);
  if (bands->parsed()) return run_bands(opt);
  if (verify->parsed()) return run_verify(opt);
  return run_analytic(opt);
}
