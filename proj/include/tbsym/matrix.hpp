#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tbsym {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense square complex matrix, row-major, indexed (row, col) from 0.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<Complex> row(std::size_t i) {
    return {entries_.data() + i * dim_, dim_};
  }
  std::span<const Complex> row(std::size_t i) const {
    return {entries_.data() + i * dim_, dim_};
  }

  ComplexVector column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const Complex> values);

  std::span<const Complex> entries() const noexcept { return entries_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);

// Skips zero entries of the left operand, so products with permutation and
// nearest-neighbour matrices cost O(nnz * dim) and stay exact on integer data.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> x);

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);

// a*b - b*a
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// Largest |(A - I)_{ij}|.
double identity_defect(const ComplexMatrix& a);

/// Largest off-diagonal modulus.
double max_off_diagonal(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

// conj(a) . b
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm2(std::span<const Complex> x);

}  // namespace tbsym
