#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "tbsym/matrix.hpp"
#include "tbsym/model.hpp"

// Closed-form eigenpairs of the square-lattice Hamiltonian. Used as the
// reference every numerical path is checked against.
namespace tbsym {

/// Lattice momentum label (r, s), both in [0, n). r pairs with the outer
/// (block) index p, s with the inner index q.
struct MomentumIndex {
  std::size_t r = 0;
  std::size_t s = 0;

  auto operator<=>(const MomentumIndex&) const = default;
};

struct Momentum {
  double kx = 0.0;
  double ky = 0.0;
};

struct DispersionPoint {
  Momentum k;
  double energy = 0.0;
};

struct EnergyLevel {
  double energy = 0.0;
  std::size_t multiplicity = 0;
};

/// alpha - 2t cos(2 pi r / n) - 2t cos(2 pi s / n)
double analytic_eigenvalue(const LatticeSpec& spec, MomentumIndex idx);

/// Unit vector with entry (1/n) * exp(2 pi i (r p + s q) / n) at p * n + q.
ComplexVector analytic_eigenvector(const LatticeSpec& spec, MomentumIndex idx);

/// kx = 2 pi r / n, ky = 2 pi s / n, energy from analytic_eigenvalue.
DispersionPoint dispersion_point(const LatticeSpec& spec, MomentumIndex idx);

/// All analytic eigenvectors as columns, ordered by (r, s) lexicographically.
ComplexMatrix analytic_basis(const LatticeSpec& spec);

/// Distinct analytic energies (ascending) and their multiplicities. Values are
/// chained into one level while consecutive gaps stay <= tol; the reported
/// energy is the level mean.
std::vector<EnergyLevel> degeneracy_census(const LatticeSpec& spec, double tol);

/// 1e-9 * max(1, |alpha| + 4|t|)
double default_census_tol(const LatticeSpec& spec);

/// Groups sorted values the same way degeneracy_census does.
std::vector<EnergyLevel> group_levels(std::vector<double> values, double tol);

}  // namespace tbsym
