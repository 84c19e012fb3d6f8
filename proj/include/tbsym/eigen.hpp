#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tbsym/matrix.hpp"

namespace tbsym {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j pairs with values[j]
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// The input must be Hermitian to within 1e-12 * ||A||_F; it is symmetrized as
/// (A + A^*) / 2 before rotating. Purely real input is rotated in real
/// arithmetic, so real symmetric matrices produce real eigenvectors.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops to
/// dim * eps * ||A||_F; one further sweep is then applied, which, by quadratic
/// convergence, leaves the off-diagonal part at rounding level. Residuals satisfy
/// ||A v_j - lambda_j v_j|| <= c * eps * ||A||_F with c ~ dim in practice.
/// Throws NotConverged after kMaxJacobiSweeps sweeps, InvalidArgument for
/// non-Hermitian or non-finite input. Ties in the eigenvalues keep the original
/// diagonal order, so results are deterministic.
EigenDecomposition eig_hermitian(const ComplexMatrix& a);

inline constexpr int kMaxJacobiSweeps = 50;

struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool operator==(const IndexRange&) const = default;
};

struct EigenvalueClusters {
  std::vector<IndexRange> clusters;
  double gap_tol = 0.0;
};

/// Greedy partition of ascending values: a new cluster starts wherever the gap
/// to the previous value exceeds gap_tol.
EigenvalueClusters cluster_eigenvalues(std::span<const double> values,
                                       double gap_tol);

/// 1e-9 * ||A||_F / sqrt(dim), or 1e-9 when A is zero.
double default_gap_tol(const ComplexMatrix& a);

}  // namespace tbsym
