#include "tbsym/bands.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tbsym/analytic.hpp"
#include "tbsym/eigen.hpp"
#include "tbsym/error.hpp"

namespace tbsym {

Dispersion compute_dispersion(const LatticeSpec& spec,
                              const SolveOptions& options) {
  validate(spec);
  const CommutingFamily family = build_family(spec);
  SymBasis basis = options.method == Method::refine
                       ? simultaneous_basis_refine(family, options.gap_tol)
                       : simultaneous_basis_paper(family, options.gap_tol,
                                                  options.filter_tol);

  BandData bands{spec, {}};
  bands.rows.reserve(spec.dim());
  for (std::size_t j = 0; j < basis.labels.size(); ++j) {
    const DispersionPoint point = dispersion_point(spec, basis.labels[j]);
    bands.rows.push_back({basis.labels[j].r, basis.labels[j].s, point.k.kx,
                          point.k.ky, basis.energies[j]});
  }
  VerificationReport report = verify_basis(basis, family, spec);
  return {std::move(bands), report, std::move(basis)};
}

BandData analytic_bands(const LatticeSpec& spec) {
  validate(spec);
  BandData bands{spec, {}};
  bands.rows.reserve(spec.dim());
  for (std::size_t r = 0; r < spec.n; ++r)
    for (std::size_t s = 0; s < spec.n; ++s) {
      const DispersionPoint point = dispersion_point(spec, {r, s});
      bands.rows.push_back({r, s, point.k.kx, point.k.ky, point.energy});
    }
  return bands;
}

Dispersion analytic_dispersion(const LatticeSpec& spec) {
  BandData bands = analytic_bands(spec);
  const double n = static_cast<double>(spec.n);
  SymBasis basis;
  basis.vectors = analytic_basis(spec);
  for (const BandRow& row : bands.rows) {
    basis.energies.push_back(row.energy);
    basis.labels.push_back({row.r, row.s});
    basis.sym_eigs.push_back(
        {std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(row.s) / n),
         std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(row.r) / n)});
    basis.anchors.push_back(0);
  }
  VerificationReport report = verify_basis(basis, build_family(spec), spec);
  return {std::move(bands), report, std::move(basis)};
}

SpectrumData compute_spectrum(const LatticeSpec& spec) {
  return {eig_hermitian(build_hamiltonian(spec)).values};
}

std::vector<std::vector<double>> compare_to_analytic(const BandData& band,
                                                     const LatticeSpec& spec) {
  validate(spec);
  if (band.rows.size() != spec.dim())
    throw InvalidArgument("compare_to_analytic: band table has " +
                          std::to_string(band.rows.size()) + " rows, expected " +
                          std::to_string(spec.dim()));
  std::vector<std::vector<double>> grid(spec.n, std::vector<double>(spec.n, 0.0));
  for (const BandRow& row : band.rows)
    grid.at(row.r).at(row.s) =
        std::abs(row.energy - analytic_eigenvalue(spec, {row.r, row.s}));
  return grid;
}

}  // namespace tbsym
