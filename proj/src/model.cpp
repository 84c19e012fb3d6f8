#include "tbsym/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tbsym/error.hpp"

namespace tbsym {

void validate(const LatticeSpec& spec) {
  if (spec.n < 3)
    throw InvalidArgument("lattice size n must be >= 3 (got " +
                          std::to_string(spec.n) + ")");
  if (!std::isfinite(spec.alpha) || !std::isfinite(spec.t))
    throw InvalidArgument("alpha and t must be finite");
  if (spec.n > std::numeric_limits<std::size_t>::max() / spec.n)
    throw InvalidArgument("lattice size overflows the matrix dimension");
}

ComplexMatrix build_shift(std::size_t n) {
  if (n == 0) throw InvalidArgument("build_shift: n must be positive");
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) c(i, (i + n - 1) % n) = 1.0;
  return c;
}

ComplexMatrix build_chain(const LatticeSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  ComplexMatrix c(n);
  for (std::size_t k = 0; k < n; ++k) {
    c(k, k) = spec.alpha;
    c(k, (k + 1) % n) = -spec.t;
    c(k, (k + n - 1) % n) = -spec.t;
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (db != 0 && da > std::numeric_limits<std::size_t>::max() / db)
    throw InvalidArgument("kron: dimension overflow");
  const std::size_t d = da * db;
  if (d != 0 && d > std::numeric_limits<std::size_t>::max() / d)
    throw InvalidArgument("kron: dimension overflow");

  ComplexMatrix out(d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix build_hamiltonian(const LatticeSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  const ComplexMatrix chain = build_chain(spec);
  ComplexMatrix h(spec.dim());
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t l = 0; l < n; ++l) h(p * n + q, p * n + l) = chain(q, l);
    // D = -t * I on the two cyclic neighbour blocks
    for (std::size_t block : {(p + 1) % n, (p + n - 1) % n})
      for (std::size_t q = 0; q < n; ++q) h(p * n + q, block * n + q) = -spec.t;
  }
  return h;
}

ComplexMatrix build_hamiltonian_kron(const LatticeSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix cp = build_shift(n);
  const ComplexMatrix d = Complex{-spec.t, 0.0} * id;
  return kron(id, build_chain(spec)) + kron(cp + transpose(cp), d);
}

Translations build_symmetries(const LatticeSpec& spec) {
  validate(spec);
  const ComplexMatrix id = ComplexMatrix::identity(spec.n);
  const ComplexMatrix cp = build_shift(spec.n);
  return {kron(id, cp), kron(cp, id)};
}

CommutingFamily build_family(const LatticeSpec& spec) {
  auto [sx, sy] = build_symmetries(spec);
  CommutingFamily family{build_hamiltonian(spec), std::move(sx), std::move(sy)};

  const double worst = std::max({max_abs(commutator(family.h, family.sx)),
                                 max_abs(commutator(family.h, family.sy)),
                                 max_abs(commutator(family.sx, family.sy))});
  if (worst != 0.0)
    throw std::logic_error("build_family: commutator is nonzero (" +
                           std::to_string(worst) + ")");
  return family;
}

}  // namespace tbsym
