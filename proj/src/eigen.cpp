#include "tbsym/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <type_traits>

#include "tbsym/error.hpp"

namespace tbsym {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHermitianTol = 1e-12;

inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex& z) { return std::conj(z); }

inline double real_of(double x) { return x; }
inline double real_of(const Complex& z) { return z.real(); }

// Jacobi on a Hermitian matrix stored row-major in `a`. Eigenvectors are
// accumulated as rows of `w` (row j is eigenvector j), which keeps every
// update contiguous.
template <typename T>
int jacobi_sweeps(std::vector<T>& a, std::vector<T>& w, std::size_t n,
                  double norm_f) {
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };

  const double converged_off = static_cast<double>(n) * kEps * norm_f;
  const double skip = 1e-3 * kEps * norm_f / static_cast<double>(n);

  bool polishing = false;
  for (int sweep = 0;; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * std::norm(at(i, j));
    off = std::sqrt(off);

    if (off == 0.0 || (polishing && off <= converged_off)) return sweep;
    if (off <= converged_off) polishing = true;
    if (sweep >= kMaxJacobiSweeps)
      throw NotConverged("Jacobi eigensolver did not converge in " +
                         std::to_string(kMaxJacobiSweeps) +
                         " sweeps (off-diagonal norm " + std::to_string(off) +
                         ", dim " + std::to_string(n) + ")");

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const T apq = at(p, q);
        const double mag = std::abs(apq);
        if (mag <= skip) continue;

        const T u = apq / mag;  // unit phase, +-1 for real data
        const double app = real_of(at(p, p));
        const double aqq = real_of(at(q, q));
        const double theta = (aqq - app) / (2.0 * mag);
        double tan;
        if (std::abs(theta) > 1e150) {
          tan = 0.5 / theta;
        } else {
          tan = (theta >= 0.0 ? 1.0 : -1.0) /
                (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(1.0 + tan * tan);
        const double s = tan * c;
        const T su = s * u;
        const T su_bar = s * conj_of(u);

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const T apk = at(p, k);
          const T aqk = at(q, k);
          const T new_pk = c * apk - su * aqk;
          const T new_qk = su_bar * apk + c * aqk;
          at(p, k) = new_pk;
          at(q, k) = new_qk;
          at(k, p) = conj_of(new_pk);
          at(k, q) = conj_of(new_qk);
        }
        at(p, p) = app - tan * mag;
        at(q, q) = aqq + tan * mag;
        at(p, q) = T{};
        at(q, p) = T{};

        T* wp = w.data() + p * n;
        T* wq = w.data() + q * n;
        for (std::size_t k = 0; k < n; ++k) {
          const T vp = wp[k];
          const T vq = wq[k];
          wp[k] = c * vp - su_bar * vq;
          wq[k] = su * vp + c * vq;
        }
      }
    }
  }
}

template <typename T>
EigenDecomposition solve(const ComplexMatrix& input, double norm_f) {
  const std::size_t n = input.dim();
  std::vector<T> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex sym = 0.5 * (input(i, j) + std::conj(input(j, i)));
      if constexpr (std::is_same_v<T, double>) {
        a[i * n + j] = sym.real();
      } else {
        a[i * n + j] = (i == j) ? Complex{sym.real(), 0.0} : sym;
      }
    }
  std::vector<T> w(n * n, T{});
  for (std::size_t i = 0; i < n; ++i) w[i * n + i] = T{1};

  const int sweeps = jacobi_sweeps(a, w, n, norm_f);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return real_of(a[x * n + x]) < real_of(a[y * n + y]);
  });

  EigenDecomposition out;
  out.sweeps = sweeps;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.values[j] = real_of(a[src * n + src]);
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = w[src * n + k];
  }
  return out;
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& a) {
  if (!all_finite(a))
    throw InvalidArgument("eig_hermitian: matrix has non-finite entries");
  const double norm_f = frobenius_norm(a);

  double asym = 0.0;
  bool real = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      asym = std::max(asym, std::abs(a(i, j) - std::conj(a(j, i))));
      if (a(i, j).imag() != 0.0) real = false;
    }
  if (asym > kHermitianTol * norm_f)
    throw InvalidArgument("eig_hermitian: matrix is not Hermitian (max |A - A^*| = " +
                          std::to_string(asym) + ")");

  if (a.dim() == 0) return {};
  return real ? solve<double>(a, norm_f) : solve<Complex>(a, norm_f);
}

EigenvalueClusters cluster_eigenvalues(std::span<const double> values,
                                       double gap_tol) {
  if (!(gap_tol > 0.0))
    throw InvalidArgument("cluster_eigenvalues: gap_tol must be > 0");
  if (!std::is_sorted(values.begin(), values.end()))
    throw InvalidArgument("cluster_eigenvalues: values must be ascending");

  EigenvalueClusters out;
  out.gap_tol = gap_tol;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i < values.size() && values[i] - values[i - 1] <= gap_tol) continue;
    out.clusters.push_back({begin, i});
    begin = i;
  }
  return out;
}

double default_gap_tol(const ComplexMatrix& a) {
  if (a.dim() == 0) return 1e-9;
  const double scale =
      frobenius_norm(a) / std::sqrt(static_cast<double>(a.dim()));
  return scale > 0.0 ? 1e-9 * scale : 1e-9;
}

}  // namespace tbsym
