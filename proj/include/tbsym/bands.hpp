#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tbsym/model.hpp"
#include "tbsym/simdiag.hpp"

namespace tbsym {

enum class Method { refine, combination };

struct BandRow {
  std::size_t r = 0;
  std::size_t s = 0;
  double kx = 0.0;
  double ky = 0.0;
  double energy = 0.0;
};

/// Dispersion relation on the full (r, s) grid, rows in lexicographic order.
struct BandData {
  LatticeSpec spec;
  std::vector<BandRow> rows;
};

struct SpectrumData {
  std::vector<double> values;  // ascending
};

struct SolveOptions {
  Method method = Method::refine;
  std::optional<double> gap_tol;
  std::optional<double> filter_tol;
};

struct Dispersion {
  BandData bands;
  VerificationReport report;
  SymBasis basis;
};

/// Builds the family, computes a simultaneous eigenbasis and tabulates the
/// Rayleigh-quotient energy of each labelled column.
Dispersion compute_dispersion(const LatticeSpec& spec,
                              const SolveOptions& options = {});

/// Band table filled from the closed-form energies.
BandData analytic_bands(const LatticeSpec& spec);

/// Closed-form counterpart of compute_dispersion: analytic eigenvectors as the
/// basis, analytic energies, and the verification report of that basis.
Dispersion analytic_dispersion(const LatticeSpec& spec);

/// Sorted eigenvalues of H.
SpectrumData compute_spectrum(const LatticeSpec& spec);

/// |energy(r, s) - analytic(r, s)| indexed [r][s].
std::vector<std::vector<double>> compare_to_analytic(const BandData& band,
                                                     const LatticeSpec& spec);

}  // namespace tbsym
