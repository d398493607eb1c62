#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace symxform {

/// Row-major square-or-rectangular dense matrix. Small and owning; the
/// algorithms here never need views.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

inline constexpr std::size_t kMaxPermanentOrder = 24;

/// Determinant by LU factorisation with partial pivoting, O(n^3).
/// The matrix is taken by value and destroyed in place.
template <class T>
T determinant_lu(DenseMatrix<T> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw ShapeError("determinant of a non-square matrix");
  using std::abs;
  T det{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    auto best = abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      auto v = abs(a(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == decltype(best){0}) return T{0};
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      det = -det;
    }
    const T diag = a(k, k);
    det *= diag;
    for (std::size_t i = k + 1; i < n; ++i) {
      const T factor = a(i, k) / diag;
      if (factor == T{0}) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

/// Permanent by Ryser's inclusion-exclusion formula with Gray-code subset
/// order, O(2^n n):
///   perm(A) = (-1)^n sum_{S subset cols} (-1)^{|S|} prod_i sum_{j in S} a_ij.
template <class T>
T permanent_ryser(const DenseMatrix<T>& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw ShapeError("permanent of a non-square matrix");
  if (n > kMaxPermanentOrder) throw SizeLimitError("permanent order exceeds 24");
  if (n == 0) return T{1};

  std::vector<T> row_sums(n, T{0});
  std::uint64_t gray = 0;
  T total{0};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    if (gray & bit) {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += a(i, col);
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] -= a(i, col);
    }
    T prod = row_sums[0];
    for (std::size_t i = 1; i < n; ++i) prod *= row_sums[i];
    if (std::popcount(gray) % 2 == 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return (n % 2 == 1) ? -total : total;
}

}  // namespace symxform
