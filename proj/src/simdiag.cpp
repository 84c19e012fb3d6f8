#include "tbsym/simdiag.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "tbsym/eigen.hpp"
#include "tbsym/error.hpp"

namespace tbsym {

namespace {

using Block = std::vector<ComplexVector>;  // list of columns

// Row-compressed copy of a family member; H and the translations have at most
// five nonzeros per row.
class SparseRows {
 public:
  explicit SparseRows(const ComplexMatrix& m) : dim_(m.dim()) {
    offsets_.reserve(dim_ + 1);
    offsets_.push_back(0);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j)
        if (m(i, j) != Complex{}) {
          cols_.push_back(j);
          vals_.push_back(m(i, j));
        }
      offsets_.push_back(cols_.size());
    }
  }

  ComplexVector apply(std::span<const Complex> x) const {
    ComplexVector y(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      Complex acc{};
      for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k)
        acc += vals_[k] * x[cols_[k]];
      y[i] = acc;
    }
    return y;
  }

 private:
  std::size_t dim_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> cols_;
  std::vector<Complex> vals_;
};

struct FamilyOps {
  explicit FamilyOps(const CommutingFamily& f) : h(f.h), sx(f.sx), sy(f.sy) {}
  SparseRows h;
  SparseRows sx;
  SparseRows sy;
};

// B = V^* M V for the columns V of `block`.
ComplexMatrix project(const Block& block, const SparseRows& op) {
  const std::size_t m = block.size();
  ComplexMatrix b(m);
  for (std::size_t j = 0; j < m; ++j) {
    const ComplexVector mv = op.apply(block[j]);
    for (std::size_t i = 0; i < m; ++i) b(i, j) = inner(block[i], mv);
  }
  return b;
}

ComplexMatrix hermitian_part(const ComplexMatrix& b) {
  return Complex{0.5, 0.0} * (b + adjoint(b));
}

// -i (B - B^*) / 2
ComplexMatrix anti_hermitian_part(const ComplexMatrix& b) {
  return Complex{0.0, -0.5} * (b - adjoint(b));
}

// Columns block * W for the column range of W.
Block rotate(const Block& block, const ComplexMatrix& w, IndexRange range) {
  const std::size_t len = block.empty() ? 0 : block.front().size();
  Block out;
  out.reserve(range.size());
  for (std::size_t j = range.begin; j < range.end; ++j) {
    ComplexVector col(len, Complex{});
    for (std::size_t k = 0; k < block.size(); ++k) {
      const Complex c = w(k, j);
      if (c == Complex{}) continue;
      for (std::size_t i = 0; i < len; ++i) col[i] += block[k][i] * c;
    }
    out.push_back(std::move(col));
  }
  return out;
}

// W_c^* B W_c restricted to the column range of W.
ComplexMatrix restrict_to(const ComplexMatrix& b, const ComplexMatrix& w,
                          IndexRange range) {
  const std::size_t m = b.dim();
  ComplexMatrix out(range.size());
  for (std::size_t i = 0; i < range.size(); ++i)
    for (std::size_t j = 0; j < range.size(); ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < m; ++k) {
        const Complex wk = std::conj(w(k, range.begin + i));
        if (wk == Complex{}) continue;
        for (std::size_t l = 0; l < m; ++l)
          acc += wk * b(k, l) * w(l, range.begin + j);
      }
      out(i, j) = acc;
    }
  return out;
}

struct Piece {
  Block columns;
  ComplexMatrix projected;  // the operator currently being resolved, in this basis
};

// Diagonalizes the Hermitian `part` of the projected operator and splits the
// block into eigen-clusters, carrying the projected operator along.
std::vector<Piece> split(const Piece& piece, const ComplexMatrix& part,
                         double tol) {
  const EigenDecomposition ed = eig_hermitian(part);
  const EigenvalueClusters clusters = cluster_eigenvalues(ed.values, tol);
  std::vector<Piece> out;
  out.reserve(clusters.clusters.size());
  for (const IndexRange& range : clusters.clusters)
    out.push_back({rotate(piece.columns, ed.vectors, range),
                   restrict_to(piece.projected, ed.vectors, range)});
  return out;
}

// Resolves `block` against the normal operator whose projection is B, first
// on (B + B^*)/2 and then on -i (B - B^*)/2 within each cluster.
std::vector<Block> resolve_normal(Block block, const ComplexMatrix& b,
                                  double tol) {
  std::vector<Block> out;
  const Piece whole{std::move(block), b};
  for (const Piece& coarse : split(whole, hermitian_part(whole.projected), tol)) {
    if (coarse.columns.size() == 1) {
      out.push_back(coarse.columns);
      continue;
    }
    for (Piece& fine : split(coarse, anti_hermitian_part(coarse.projected), tol))
      out.push_back(std::move(fine.columns));
  }
  return out;
}

std::vector<Block> refine_with(const std::vector<Block>& blocks,
                               const SparseRows& op, double tol) {
  std::vector<Block> out;
  for (const Block& block : blocks) {
    if (block.size() <= 1) {
      out.push_back(block);
      continue;
    }
    for (Block& piece : resolve_normal(block, project(block, op), tol))
      out.push_back(std::move(piece));
  }
  return out;
}

std::size_t lattice_size(const CommutingFamily& family) {
  const std::size_t dim = family.dim();
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
  if (n * n != dim)
    throw InvalidArgument("family dimension " + std::to_string(dim) +
                          " is not a perfect square");
  return n;
}

double rayleigh(const SparseRows& op, std::span<const Complex> v,
                ComplexVector* mv_out = nullptr) {
  ComplexVector mv = op.apply(v);
  const double value = inner(v, mv).real();
  if (mv_out) *mv_out = std::move(mv);
  return value;
}

Complex rayleigh_complex(const SparseRows& op, std::span<const Complex> v) {
  return inner(v, op.apply(v));
}

std::size_t index_from_eigenvalue(Complex lambda, std::size_t n,
                                  const char* which) {
  if (std::abs(std::abs(lambda) - 1.0) > kUnitCircleTol) {
    std::ostringstream msg;
    msg << "eigenvalue of " << which << " has modulus " << std::abs(lambda)
        << ", not on the unit circle";
    throw DegenerateSubspace(msg.str());
  }
  // lambda = exp(-2 pi i k / n)
  const double steps =
      -static_cast<double>(n) * std::arg(lambda) / (2.0 * std::numbers::pi);
  const double nearest = std::round(steps);
  if (std::abs(steps - nearest) > 1e-4) {
    std::ostringstream msg;
    msg << "eigenvalue of " << which << " has angle " << std::arg(lambda)
        << ", off the 2 pi / " << n << " grid";
    throw DegenerateSubspace(msg.str());
  }
  const auto ni = static_cast<long long>(n);
  return static_cast<std::size_t>(((static_cast<long long>(nearest) % ni) + ni) % ni);
}

MomentumIndex label_of(const SymmetryEigenvalues& eig, std::size_t n) {
  return {index_from_eigenvalue(eig.y, n, "S_y"),
          index_from_eigenvalue(eig.x, n, "S_x")};
}

std::string label_text(MomentumIndex idx) {
  return "(" + std::to_string(idx.r) + ", " + std::to_string(idx.s) + ")";
}

// Phase-fixes the columns, computes Rayleigh quotients and labels, and orders
// everything by label.
SymBasis assemble(const Block& columns, const FamilyOps& ops, std::size_t n) {
  struct Entry {
    MomentumIndex label;
    PhaseFixed fixed;
    double energy;
    SymmetryEigenvalues sym;
  };
  std::vector<Entry> entries;
  entries.reserve(columns.size());
  for (const ComplexVector& column : columns) {
    // rotations accumulate O(eps * sweeps) norm drift, which would otherwise
    // enter the Rayleigh quotients at first order
    ComplexVector unit = column;
    const double norm = norm2(unit);
    for (Complex& z : unit) z /= norm;
    PhaseFixed fixed = fix_phase(unit);
    const SymmetryEigenvalues sym{rayleigh_complex(ops.sx, fixed.vector),
                                  rayleigh_complex(ops.sy, fixed.vector)};
    const double energy = rayleigh(ops.h, fixed.vector);
    entries.push_back({label_of(sym, n), std::move(fixed), energy, sym});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.label < b.label; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].label == entries[i - 1].label)
      throw DegenerateSubspace("momentum label " + label_text(entries[i].label) +
                               " assigned to more than one basis vector");
  if (entries.size() != n * n)
    throw DegenerateSubspace("basis has " + std::to_string(entries.size()) +
                             " columns, expected " + std::to_string(n * n));

  SymBasis basis;
  basis.vectors = ComplexMatrix(n * n);
  for (std::size_t j = 0; j < entries.size(); ++j) {
    Entry& e = entries[j];
    basis.vectors.set_column(j, e.fixed.vector);
    basis.energies.push_back(e.energy);
    basis.labels.push_back(e.label);
    basis.sym_eigs.push_back(e.sym);
    basis.anchors.push_back(e.fixed.anchor);
  }
  return basis;
}

// Eigenvectors of a normal matrix, obtained from its Hermitian and
// anti-Hermitian parts. Degenerate eigenspaces yield an arbitrary basis.
Block normal_eigenvectors(const ComplexMatrix& a, double tol) {
  const EigenDecomposition coarse = eig_hermitian(hermitian_part(a));
  const EigenvalueClusters clusters = cluster_eigenvalues(coarse.values, tol);
  const ComplexMatrix anti = anti_hermitian_part(a);
  Block all;
  for (const IndexRange& range : clusters.clusters) {
    Block cols;
    for (std::size_t j = range.begin; j < range.end; ++j)
      cols.push_back(coarse.vectors.column(j));
    if (cols.size() == 1) {
      all.push_back(std::move(cols.front()));
      continue;
    }
    ComplexMatrix projected(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const ComplexVector av = anti * std::span<const Complex>(cols[j]);
      for (std::size_t i = 0; i < cols.size(); ++i)
        projected(i, j) = inner(cols[i], av);
    }
    const EigenDecomposition fine = eig_hermitian(hermitian_part(projected));
    for (ComplexVector& v : rotate(cols, fine.vectors, {0, cols.size()}))
      all.push_back(std::move(v));
  }
  return all;
}

}  // namespace

std::pair<ComplexMatrix, ComplexMatrix> combination_matrices(
    const CommutingFamily& family) {
  return {family.h * (family.sx - family.sy),
          family.sx * (family.h - family.sy)};
}

SymBasis simultaneous_basis_refine(const CommutingFamily& family,
                                   std::optional<double> gap_tol) {
  const std::size_t n = lattice_size(family);
  const double h_tol = gap_tol.value_or(default_gap_tol(family.h));
  if (!(h_tol > 0.0)) throw InvalidArgument("gap_tol must be > 0");
  const FamilyOps ops(family);

  const EigenDecomposition ed = eig_hermitian(family.h);
  const EigenvalueClusters clusters = cluster_eigenvalues(ed.values, h_tol);

  Block resolved;
  resolved.reserve(family.dim());
  for (const IndexRange& range : clusters.clusters) {
    std::vector<Block> blocks(1);
    for (std::size_t j = range.begin; j < range.end; ++j)
      blocks.front().push_back(ed.vectors.column(j));

    blocks = refine_with(blocks, ops.sx, default_gap_tol(family.sx));
    blocks = refine_with(blocks, ops.sy, default_gap_tol(family.sy));

    for (Block& block : blocks) {
      if (block.size() != 1) {
        std::ostringstream msg;
        msg << "refine: eigenvalue cluster [" << range.begin << ", " << range.end
            << ") of H near energy " << ed.values[range.begin]
            << " still has a " << block.size()
            << "-dimensional subspace after S_x and S_y refinement (gap_tol "
            << h_tol << ")";
        throw DegenerateSubspace(msg.str());
      }
      resolved.push_back(std::move(block.front()));
    }
  }
  return assemble(resolved, ops, n);
}

SymBasis simultaneous_basis_paper(const CommutingFamily& family,
                                  std::optional<double> gap_tol,
                                  std::optional<double> filter_tol) {
  const std::size_t n = lattice_size(family);
  const double ftol = filter_tol.value_or(default_filter_tol(family));
  if (!(ftol > 0.0)) throw InvalidArgument("filter_tol must be > 0");
  if (gap_tol && !(*gap_tol > 0.0)) throw InvalidArgument("gap_tol must be > 0");

  const auto [first, second] = combination_matrices(family);
  Block candidates = normal_eigenvectors(first, gap_tol.value_or(default_gap_tol(first)));
  for (ComplexVector& v :
       normal_eigenvectors(second, gap_tol.value_or(default_gap_tol(second))))
    candidates.push_back(std::move(v));

  std::map<MomentumIndex, ComplexVector> chosen;
  for (AcceptedCandidate& c : filter_simultaneous(candidates, family, ftol)) {
    MomentumIndex label;
    try {
      label = label_of({c.sx_eig, c.sy_eig}, n);
    } catch (const DegenerateSubspace&) {
      continue;
    }
    chosen.try_emplace(label, std::move(c.vector));
  }

  if (chosen.size() != n * n) {
    std::ostringstream msg;
    msg << "combination: accepted " << chosen.size() << " of " << n * n
        << " simultaneous eigenvectors (deficit " << n * n - chosen.size()
        << "); missing labels";
    std::size_t listed = 0;
    for (std::size_t r = 0; r < n && listed < 8; ++r)
      for (std::size_t s = 0; s < n && listed < 8; ++s)
        if (!chosen.contains({r, s})) {
          msg << ' ' << label_text({r, s});
          ++listed;
        }
    throw DegenerateSubspace(msg.str());
  }

  Block columns;
  columns.reserve(chosen.size());
  for (auto& [label, v] : chosen) columns.push_back(std::move(v));
  return assemble(columns, FamilyOps(family), n);
}

std::vector<AcceptedCandidate> filter_simultaneous(
    std::span<const ComplexVector> candidates, const CommutingFamily& family,
    double filter_tol) {
  if (!(filter_tol > 0.0)) throw InvalidArgument("filter_tol must be > 0");
  const FamilyOps ops(family);

  auto residual = [](std::span<const Complex> v, const ComplexVector& mv,
                     Complex lambda) {
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) sum += std::norm(mv[i] - lambda * v[i]);
    return std::sqrt(sum);
  };

  std::vector<AcceptedCandidate> accepted;
  for (const ComplexVector& v : candidates) {
    if (v.size() != family.dim())
      throw InvalidArgument("filter_simultaneous: candidate length mismatch");
    const ComplexVector hv = ops.h.apply(v);
    const Complex h_eig = inner(v, hv);
    if (residual(v, hv, h_eig) > filter_tol) continue;
    const ComplexVector xv = ops.sx.apply(v);
    const Complex x_eig = inner(v, xv);
    if (residual(v, xv, x_eig) > filter_tol) continue;
    const ComplexVector yv = ops.sy.apply(v);
    const Complex y_eig = inner(v, yv);
    if (residual(v, yv, y_eig) > filter_tol) continue;
    accepted.push_back({v, h_eig.real(), x_eig, y_eig});
  }
  return accepted;
}

double default_filter_tol(const CommutingFamily& family) {
  const double norm = frobenius_norm(family.h);
  return norm > 0.0 ? 1e-8 * norm : 1e-8;
}

PhaseFixed fix_phase(std::span<const Complex> v) {
  if (v.empty() || norm2(v) == 0.0)
    throw InvalidArgument("fix_phase: zero vector");

  std::size_t anchor = 0;
  const double floor = kAnchorFloor / std::sqrt(static_cast<double>(v.size()));
  if (std::abs(v[0]) < floor) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (std::abs(v[i]) > std::abs(v[anchor])) anchor = i;
  }

  PhaseFixed out{ComplexVector(v.begin(), v.end()), anchor};
  const Complex a = v[anchor];
  if (a.imag() == 0.0 && a.real() > 0.0) return out;

  const double mag = std::abs(a);
  const Complex rot = std::conj(a) / mag;
  for (Complex& z : out.vector) z *= rot;
  out.vector[anchor] = Complex{mag, 0.0};
  return out;
}

std::vector<MomentumIndex> momentum_labels(const ComplexMatrix& basis_vectors,
                                           const CommutingFamily& family) {
  const std::size_t n = lattice_size(family);
  if (basis_vectors.dim() != family.dim())
    throw InvalidArgument("momentum_labels: basis dimension mismatch");
  const FamilyOps ops(family);
  std::vector<MomentumIndex> labels;
  labels.reserve(basis_vectors.dim());
  for (std::size_t j = 0; j < basis_vectors.dim(); ++j) {
    const ComplexVector v = basis_vectors.column(j);
    labels.push_back(label_of(
        {rayleigh_complex(ops.sx, v), rayleigh_complex(ops.sy, v)}, n));
  }
  return labels;
}

VerificationReport verify_basis(const SymBasis& basis,
                                const CommutingFamily& family,
                                const LatticeSpec& spec) {
  const std::size_t dim = family.dim();
  if (basis.vectors.dim() != dim || basis.labels.size() != dim ||
      basis.energies.size() != dim || basis.sym_eigs.size() != dim)
    throw InvalidArgument("verify_basis: basis is incomplete");
  const FamilyOps ops(family);

  std::vector<ComplexVector> cols;
  cols.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(basis.vectors.column(j));

  auto residual = [](const ComplexVector& v, const ComplexVector& mv,
                     Complex lambda) {
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) sum += std::norm(mv[i] - lambda * v[i]);
    return std::sqrt(sum);
  };

  VerificationReport report;
  for (std::size_t j = 0; j < dim; ++j) {
    const ComplexVector& v = cols[j];
    const ComplexVector hv = ops.h.apply(v);
    report.max_residual_h = std::max(
        report.max_residual_h, residual(v, hv, Complex{basis.energies[j], 0.0}));
    report.max_residual_sx = std::max(
        report.max_residual_sx, residual(v, ops.sx.apply(v), basis.sym_eigs[j].x));
    report.max_residual_sy = std::max(
        report.max_residual_sy, residual(v, ops.sy.apply(v), basis.sym_eigs[j].y));

    const double exact = analytic_eigenvalue(spec, basis.labels[j]);
    report.max_eigenvalue_error =
        std::max(report.max_eigenvalue_error, std::abs(inner(v, hv).real() - exact));

    ComplexVector reference = analytic_eigenvector(spec, basis.labels[j]);
    const std::size_t anchor = j < basis.anchors.size() ? basis.anchors[j] : 0;
    const Complex ref_anchor = reference[anchor];
    const Complex vec_anchor = v[anchor];
    const Complex align = (std::conj(ref_anchor) / std::abs(ref_anchor)) *
                          (vec_anchor / std::abs(vec_anchor));
    for (std::size_t i = 0; i < dim; ++i) {
      const Complex diff = v[i] - align * reference[i];
      report.max_entrywise_vector_error =
          std::max({report.max_entrywise_vector_error, std::abs(diff.real()),
                    std::abs(diff.imag())});
    }
  }

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      const Complex g = inner(cols[i], cols[j]);
      report.max_orthogonality_defect = std::max(
          report.max_orthogonality_defect, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  return report;
}

}  // namespace tbsym
