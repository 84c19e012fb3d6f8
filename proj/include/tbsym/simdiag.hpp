#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tbsym/analytic.hpp"
#include "tbsym/matrix.hpp"
#include "tbsym/model.hpp"

// Simultaneous eigenbasis of H and the two lattice translations.
//
// Two routes are provided. simultaneous_basis_refine resolves each degenerate
// eigenspace of H by diagonalizing the projections of S_x and S_y; it only
// needs the Hermitian kernel. simultaneous_basis_paper diagonalizes the normal
// products H (S_x - S_y) and S_x (H - S_y) and keeps those eigenvectors that
// are eigenvectors of all three family members.
//
// Both return columns sorted by momentum label (r, s), each phase-fixed so
// that its anchor entry (normally the first) is real and positive.
namespace tbsym {

struct SymmetryEigenvalues {
  Complex x;  // eigenvalue of S_x
  Complex y;  // eigenvalue of S_y
};

struct SymBasis {
  ComplexMatrix vectors;
  std::vector<double> energies;  // Re(v^* H v)
  std::vector<MomentumIndex> labels;
  std::vector<SymmetryEigenvalues> sym_eigs;
  std::vector<std::size_t> anchors;  // entry made real positive by fix_phase
};

struct VerificationReport {
  double max_residual_h = 0.0;
  double max_residual_sx = 0.0;
  double max_residual_sy = 0.0;
  double max_orthogonality_defect = 0.0;
  double max_eigenvalue_error = 0.0;
  double max_entrywise_vector_error = 0.0;
};

struct AcceptedCandidate {
  ComplexVector vector;
  double h_eig = 0.0;
  Complex sx_eig;
  Complex sy_eig;
};

struct PhaseFixed {
  ComplexVector vector;
  std::size_t anchor = 0;
};

inline constexpr double kAnchorFloor = 1e-6;

/// Modulus tolerance on symmetry eigenvalues accepted by momentum_labels.
inline constexpr double kUnitCircleTol = 1e-10;

/// Returns {H (S_x - S_y), S_x (H - S_y)}.
std::pair<ComplexMatrix, ComplexMatrix> combination_matrices(
    const CommutingFamily& family);

/// Subspace refinement: eigendecomposition of H, then within every degenerate
/// cluster the Hermitian and anti-Hermitian parts of the projected S_x, then of
/// the projected S_y. Throws DegenerateSubspace if some subspace is still more
/// than one-dimensional afterwards. gap_tol clusters the spectrum of H and
/// defaults to default_gap_tol(H); the symmetry stages use default_gap_tol of
/// the respective translation.
SymBasis simultaneous_basis_refine(const CommutingFamily& family,
                                   std::optional<double> gap_tol = {});

/// Candidate-and-filter construction from the two combination matrices.
/// Each normal combination matrix is diagonalized by splitting on its
/// Hermitian part and refining clusters with its anti-Hermitian part. One
/// accepted candidate is kept per momentum label; a missing label throws
/// DegenerateSubspace. gap_tol defaults per combination matrix, filter_tol to
/// default_filter_tol(family).
SymBasis simultaneous_basis_paper(const CommutingFamily& family,
                                  std::optional<double> gap_tol = {},
                                  std::optional<double> filter_tol = {});

/// Keeps the unit vectors v with ||M v - (v^* M v) v||_2 <= filter_tol for all
/// M in {H, S_x, S_y}.
std::vector<AcceptedCandidate> filter_simultaneous(
    std::span<const ComplexVector> candidates, const CommutingFamily& family,
    double filter_tol);

/// 1e-8 * ||H||_F (1e-8 if H is zero).
double default_filter_tol(const CommutingFamily& family);

/// Multiplies v by a unit phase so the anchor entry becomes real positive. The
/// anchor is entry 0 unless |v_0| < kAnchorFloor / sqrt(dim), in which case
/// the largest-modulus entry is used.
PhaseFixed fix_phase(std::span<const Complex> v);

/// Momentum label of every column of a simultaneous eigenbasis. S_y carries
/// exp(-2 pi i r / n) and S_x carries exp(-2 pi i s / n), which makes the label
/// of analytic_eigenvector(r, s) exactly (r, s). Throws DegenerateSubspace if
/// an eigenvalue is off the unit circle by more than kUnitCircleTol or off the
/// angular grid by more than 1e-4 of a grid step.
std::vector<MomentumIndex> momentum_labels(const ComplexMatrix& basis_vectors,
                                           const CommutingFamily& family);

/// Residuals, orthogonality, and agreement with the closed-form eigenpairs.
VerificationReport verify_basis(const SymBasis& basis,
                                const CommutingFamily& family,
                                const LatticeSpec& spec);

}  // namespace tbsym
