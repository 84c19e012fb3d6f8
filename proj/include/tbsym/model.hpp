#pragma once

#include <cstddef>

#include "tbsym/matrix.hpp"

namespace tbsym {

/// Equal-atom square lattice of n x n sites with periodic boundaries,
/// on-site energy alpha and nearest-neighbour hopping t.
///
/// Site (p, q) maps to basis index p * n + q: p is the outer (block) index,
/// q the inner one.
struct LatticeSpec {
  std::size_t n = 0;
  double alpha = 0.0;
  double t = 0.0;

  std::size_t dim() const noexcept { return n * n; }
};

/// Throws InvalidArgument unless n >= 3 and alpha, t are finite. For n < 3 the
/// left and right neighbours of a site coincide.
void validate(const LatticeSpec& spec);

/// n x n cyclic shift with first row (0, ..., 0, 1), i.e. (C x)_i = x_{i-1}.
ComplexMatrix build_shift(std::size_t n);

/// One-dimensional periodic chain: alpha on the diagonal, -t at (k, k +- 1 mod n).
ComplexMatrix build_chain(const LatticeSpec& spec);

/// Kronecker product; entry (i*db + k, j*db + l) is a(i, j) * b(k, l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-circulant Hamiltonian assembled block by block: chain blocks on the
/// diagonal, -t * I on the cyclic off-diagonal blocks.
ComplexMatrix build_hamiltonian(const LatticeSpec& spec);

/// Same matrix built as I (x) C + (C_p + C_p^T) (x) D with D = -t * I.
ComplexMatrix build_hamiltonian_kron(const LatticeSpec& spec);

struct Translations {
  ComplexMatrix sx;  // I (x) C_p, shifts the inner index q
  ComplexMatrix sy;  // C_p (x) I, shifts the outer index p
};

Translations build_symmetries(const LatticeSpec& spec);

/// Hamiltonian together with the two lattice translations it commutes with.
struct CommutingFamily {
  ComplexMatrix h;
  ComplexMatrix sx;
  ComplexMatrix sy;

  std::size_t dim() const noexcept { return h.dim(); }
};

/// Builds H, S_x, S_y and checks that all pairwise commutators vanish exactly.
/// A nonzero commutator is a construction bug and raises std::logic_error.
CommutingFamily build_family(const LatticeSpec& spec);

}  // namespace tbsym
