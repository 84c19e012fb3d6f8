#include "tbsym/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tbsym/error.hpp"

namespace tbsym {

namespace {

void check_index(const LatticeSpec& spec, MomentumIndex idx) {
  validate(spec);
  if (idx.r >= spec.n || idx.s >= spec.n)
    throw InvalidArgument("momentum index (" + std::to_string(idx.r) + ", " +
                          std::to_string(idx.s) + ") out of range for n = " +
                          std::to_string(spec.n));
}

// cos(2 pi k / n) evaluated at the folded index so that k and n - k give
// bit-identical results.
double cos_turn(std::size_t k, std::size_t n) {
  const std::size_t folded = std::min(k % n, n - k % n);
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(folded) /
                  static_cast<double>(n));
}

}  // namespace

double analytic_eigenvalue(const LatticeSpec& spec, MomentumIndex idx) {
  check_index(spec, idx);
  // summed before scaling so that (r, s) and (s, r) round identically
  return spec.alpha -
         2.0 * spec.t * (cos_turn(idx.r, spec.n) + cos_turn(idx.s, spec.n));
}

ComplexVector analytic_eigenvector(const LatticeSpec& spec,
                                   MomentumIndex idx) {
  check_index(spec, idx);
  const std::size_t n = spec.n;
  const double scale = 1.0 / static_cast<double>(n);
  ComplexVector v(spec.dim());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      // exponent reduced mod n, one exp per entry
      const std::size_t k = (idx.r * p + idx.s * q) % n;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(n);
      v[p * n + q] = std::polar(scale, angle);
    }
  return v;
}

DispersionPoint dispersion_point(const LatticeSpec& spec, MomentumIndex idx) {
  const double n = static_cast<double>(spec.n);
  const double energy = analytic_eigenvalue(spec, idx);
  return {{2.0 * std::numbers::pi * static_cast<double>(idx.r) / n,
           2.0 * std::numbers::pi * static_cast<double>(idx.s) / n},
          energy};
}

ComplexMatrix analytic_basis(const LatticeSpec& spec) {
  validate(spec);
  ComplexMatrix basis(spec.dim());
  for (std::size_t r = 0; r < spec.n; ++r)
    for (std::size_t s = 0; s < spec.n; ++s)
      basis.set_column(r * spec.n + s, analytic_eigenvector(spec, {r, s}));
  return basis;
}

std::vector<EnergyLevel> group_levels(std::vector<double> values, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("clustering tolerance must be > 0");
  std::sort(values.begin(), values.end());
  std::vector<EnergyLevel> levels;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i < values.size() && values[i] - values[i - 1] <= tol) continue;
    double sum = 0.0;
    for (std::size_t k = begin; k < i; ++k) sum += values[k];
    levels.push_back({sum / static_cast<double>(i - begin), i - begin});
    begin = i;
  }
  return levels;
}

std::vector<EnergyLevel> degeneracy_census(const LatticeSpec& spec,
                                           double tol) {
  validate(spec);
  if (!(tol > 0.0)) throw InvalidArgument("census tolerance must be > 0");
  std::vector<double> values;
  values.reserve(spec.dim());
  for (std::size_t r = 0; r < spec.n; ++r)
    for (std::size_t s = 0; s < spec.n; ++s)
      values.push_back(analytic_eigenvalue(spec, {r, s}));
  return group_levels(std::move(values), tol);
}

double default_census_tol(const LatticeSpec& spec) {
  return 1e-9 * std::max(1.0, std::abs(spec.alpha) + 4.0 * std::abs(spec.t));
}

}  // namespace tbsym
