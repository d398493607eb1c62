#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "expfun.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "symgroup.hpp"

namespace symxform {

enum class Direction { forward, inverse };

namespace detail {

/// exp(2 pi i r / N) with the integer numerator reduced modulo N first.
inline Complex root_of_unity(long long r, int N) {
  long long k = r % N;
  if (k < 0) k += N;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / N);
}

}  // namespace detail

/// Unitary finite Fourier transform on {1..N} (element n stored at n-1):
///   forward  f~(m) = N^{-1/2} sum_n f(n) exp( 2 pi i m n / N)
///   inverse  f(n)  = N^{-1/2} sum_m f~(m) exp(-2 pi i m n / N)
inline std::vector<Complex> ft1d(std::span<const Complex> f, Direction dir) {
  const int N = static_cast<int>(f.size());
  if (N < 1) throw ShapeError("ft1d needs at least one sample");
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  const long long sgn = dir == Direction::forward ? 1 : -1;
  std::vector<Complex> out(f.size());
  for (int m = 1; m <= N; ++m) {
    Complex acc{};
    for (int n = 1; n <= N; ++n) acc += f[n - 1] * detail::root_of_unity(sgn * m * n, N);
    out[m - 1] = acc * scale;
  }
  return out;
}

enum class GridKind { strict, weak };

/// Points of F^_N^n (strict, s_1 > ... > s_n) or F~_N^n (weak, s_1 >= ... >= s_n)
/// inside F_N^n = {1/N, ..., 1}^n. Stored as integer numerators k with s = k / N.
struct OrderedGrid {
  int N = 0;
  int n = 0;
  GridKind kind = GridKind::strict;
  std::vector<IntWeight> points;

  std::size_t size() const noexcept { return points.size(); }
  Point coordinates(std::size_t i) const {
    Point s(points[i].size());
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = static_cast<double>(points[i][j]) / N;
    return s;
  }
};

/// D^_N^n (N >= m_1 > ... > m_n > 0) or D~_N^n (N >= m_1 >= ... >= m_n >= 1).
struct SpectrumSet {
  int N = 0;
  int n = 0;
  GridKind kind = GridKind::strict;
  std::vector<IntWeight> weights;

  std::size_t size() const noexcept { return weights.size(); }
};

struct DiscreteDomain {
  OrderedGrid grid;
  SpectrumSet spectrum;
};

inline GridKind grid_kind(Symmetry s) { return s == Symmetry::anti ? GridKind::strict : GridKind::weak; }

/// Lexicographically descending enumeration of the ordered grid and its
/// spectrum. Both are the same set of integer tuples; the grid reads them as
/// numerators over N.
inline DiscreteDomain enumerate_ordered(int N, int n, GridKind kind) {
  if (N < 1 || n < 1) throw ShapeError("ordered grid needs N >= 1 and n >= 1");
  if (kind == GridKind::strict && n > N)
    throw EmptyGridError("strict grid with n = " + std::to_string(n) + " > N = " + std::to_string(N));
  const Symmetry sym = kind == GridKind::strict ? Symmetry::anti : Symmetry::sym;
  std::vector<IntWeight> tuples = dominant_weights(n, 1, N, sym);
  DiscreteDomain d;
  d.grid = OrderedGrid{N, n, kind, tuples};
  d.spectrum = SpectrumSet{N, n, kind, std::move(tuples)};
  return d;
}

/// Normalised finite exponential function
///   E~^{+/-}_m(s) = |S_n|^{-1/2} N^{-n/2} E^{+/-}_m(s),   s = k / N,
/// built from exactly reduced roots of unity.
inline Complex eval_discrete(std::span<const int> m, std::span<const int> k, int N, Symmetry symmetry) {
  if (m.size() != k.size() || m.empty()) throw ShapeError("weight and grid point lengths differ");
  if (N < 1) throw ShapeError("N must be positive");
  const std::size_t n = m.size();
  DenseMatrix<Complex> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = detail::root_of_unity(static_cast<long long>(m[i]) * k[j], N);
  const Complex value = symmetry == Symmetry::anti ? determinant_lu(std::move(a)) : permanent_ryser(a);
  const double norm =
      1.0 / std::sqrt(static_cast<double>(factorial(static_cast<int>(n))) * std::pow(static_cast<double>(N), n));
  return value * norm;
}

inline constexpr std::size_t kMaxSpectrumSize = 10000;

/// AMDFT (anti) or SMDFT (sym) on a fixed (N, n): dense basis matrix
/// B(s, m) = E~_m(s), built once and reused.
///
///   anti forward: a_m = |S_n| sum_s f(s) conj(B(s, m))
///   sym  forward: a_m = |S_n| |S_m|^{-1} sum_s |S_s|^{-1} f(s) conj(B(s, m))
///   inverse:      f(s) = sum_m a_m B(s, m)
class DiscreteTransform {
 public:
  DiscreteTransform(int N, int n, Symmetry symmetry)
      : symmetry_(symmetry), domain_(enumerate_ordered(N, n, grid_kind(symmetry))) {
    const std::size_t size = domain_.grid.size();
    if (size > kMaxSpectrumSize) throw SizeLimitError("spectrum larger than 10^4 elements");
    const double group_order = static_cast<double>(factorial(n));

    point_weight_.resize(size);
    spectrum_scale_.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
      point_weight_[i] = symmetry == Symmetry::anti
                             ? group_order
                             : group_order / static_cast<double>(stabilizer_order(domain_.grid.points[i]));
      spectrum_scale_[i] = symmetry == Symmetry::anti
                               ? 1.0
                               : 1.0 / static_cast<double>(stabilizer_order(domain_.spectrum.weights[i]));
    }

    basis_ = DenseMatrix<Complex>(size, size);
    parallel_for(size, [&](std::size_t s) {
      for (std::size_t m = 0; m < size; ++m)
        basis_(s, m) = eval_discrete(domain_.spectrum.weights[m], domain_.grid.points[s], N, symmetry);
    });
  }

  Symmetry symmetry() const noexcept { return symmetry_; }
  const OrderedGrid& grid() const noexcept { return domain_.grid; }
  const SpectrumSet& spectrum() const noexcept { return domain_.spectrum; }
  const DenseMatrix<Complex>& basis() const noexcept { return basis_; }

  std::vector<Complex> forward(std::span<const Complex> values) const {
    if (values.size() != grid().size())
      throw ShapeError("expected " + std::to_string(grid().size()) + " grid values, got " +
                       std::to_string(values.size()));
    const std::size_t size = grid().size();
    std::vector<Complex> coeffs(size);
    for (std::size_t m = 0; m < size; ++m) {
      Complex acc{};
      for (std::size_t s = 0; s < size; ++s) acc += point_weight_[s] * values[s] * std::conj(basis_(s, m));
      coeffs[m] = acc * spectrum_scale_[m];
    }
    return coeffs;
  }

  std::vector<Complex> inverse(std::span<const Complex> coeffs) const {
    if (coeffs.size() != spectrum().size())
      throw ShapeError("expected " + std::to_string(spectrum().size()) + " coefficients, got " +
                       std::to_string(coeffs.size()));
    const std::size_t size = grid().size();
    std::vector<Complex> values(size);
    for (std::size_t s = 0; s < size; ++s) {
      Complex acc{};
      for (std::size_t m = 0; m < size; ++m) acc += coeffs[m] * basis_(s, m);
      values[s] = acc;
    }
    return values;
  }

  /// G(m, m') = sum_s w_s E~_m(s) conj(E~_m'(s)) with w_s = |S_n| (anti) or
  /// |S_n| / |S_s| (sym). Expected: identity (anti), diag(|S_m|) (sym).
  DenseMatrix<Complex> gram() const {
    const std::size_t size = grid().size();
    DenseMatrix<Complex> g(size, size);
    parallel_for(size, [&](std::size_t m) {
      for (std::size_t mp = 0; mp < size; ++mp) {
        Complex acc{};
        for (std::size_t s = 0; s < size; ++s) acc += point_weight_[s] * basis_(s, m) * std::conj(basis_(s, mp));
        g(m, mp) = acc;
      }
    });
    return g;
  }

 private:
  Symmetry symmetry_;
  DiscreteDomain domain_;
  DenseMatrix<Complex> basis_;
  std::vector<double> point_weight_;
  std::vector<double> spectrum_scale_;
};

inline std::vector<Complex> amdft(int N, int n, std::span<const Complex> values, Direction dir) {
  DiscreteTransform t(N, n, Symmetry::anti);
  return dir == Direction::forward ? t.forward(values) : t.inverse(values);
}

inline std::vector<Complex> smdft(int N, int n, std::span<const Complex> values, Direction dir) {
  DiscreteTransform t(N, n, Symmetry::sym);
  return dir == Direction::forward ? t.forward(values) : t.inverse(values);
}

inline DenseMatrix<Complex> gram_matrix(int N, int n, Symmetry symmetry) {
  return DiscreteTransform(N, n, symmetry).gram();
}

}  // namespace symxform
