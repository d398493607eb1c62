#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "expfun.hpp"
#include "quad.hpp"
#include "symgroup.hpp"

namespace symxform {

/// A complex-valued function of a point, evaluated in scalar type Real.
template <class Real = double>
using ScalarField = std::function<complex_t<Real>(std::span<const Real>)>;

/// Centered second-order stencil control.
struct StencilConfig {
  double step = 1e-3;
};

/// sigma_k(y_1, ..., y_n), the k-th elementary symmetric polynomial.
inline double elementary_symmetric(std::span<const double> y, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > y.size()) return 0.0;
  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (double v : y)
    for (int j = k; j >= 1; --j) e[j] += v * e[j - 1];
  return e[k];
}

/// (-4 pi^2)^k sigma_k(lambda_1^2, ..., lambda_n^2).
inline double sigma_k_eigenvalue(std::span<const double> lambda, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > lambda.size())
    throw IndexError("sigma_k order " + std::to_string(k) + " outside 1.." + std::to_string(lambda.size()));
  std::vector<double> squares(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) squares[i] = lambda[i] * lambda[i];
  const double c = -4.0 * std::numbers::pi * std::numbers::pi;
  return std::pow(c, k) * elementary_symmetric(squares, k);
}

/// sigma_k(d^2/dx_1^2, ..., d^2/dx_n^2) f at x by nested centered second
/// differences: for every k-subset of coordinates, the tensor stencil
/// (1, -2, 1)^{(x) k} / h^{2k} is applied and the subset results summed.
/// k = 1 is the Laplacian. Evaluation happens in the field's own scalar type,
/// so precision is chosen by the caller.
template <class Real, class Field>
auto apply_sigma_k(Field&& f, std::span<const Real> x, int k, const Real& step) {
  using Value = std::decay_t<decltype(f(x))>;
  const std::size_t n = x.size();
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw IndexError("sigma_k order " + std::to_string(k) + " outside 1.." + std::to_string(n));
  if (!(step > Real(0))) throw RangeError("stencil step must be positive");

  std::vector<Real> y(x.begin(), x.end());
  std::vector<std::size_t> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[i] = static_cast<std::size_t>(i);

  std::size_t stencil_points = 1;
  for (int i = 0; i < k; ++i) stencil_points *= 3;

  Value total{};
  while (true) {
    for (std::size_t code = 0; code < stencil_points; ++code) {
      std::size_t rest = code;
      int coef = 1;
      for (std::size_t t = 0; t < subset.size(); ++t) {
        const int offset = static_cast<int>(rest % 3) - 1;
        rest /= 3;
        if (offset == 0) coef *= -2;
        y[subset[t]] = x[subset[t]] + Real(offset) * step;
      }
      total += f(std::span<const Real>(y)) * Real(coef);
    }
    for (std::size_t idx : subset) y[idx] = x[idx];

    // next k-subset in lexicographic order
    int pos = k - 1;
    while (pos >= 0 && subset[pos] == n - static_cast<std::size_t>(k) + static_cast<std::size_t>(pos)) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int j = pos + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }

  Real scale(1);
  for (int i = 0; i < 2 * k; ++i) scale *= step;
  return Value(total / scale);
}

inline Complex apply_sigma_k(const ScalarField<double>& f, std::span<const double> x, int k,
                             const StencilConfig& cfg = {}) {
  return apply_sigma_k<double>(f, x, k, cfg.step);
}

/// Centered first difference along the wall normal (e_i - e_j)/sqrt(2).
inline Complex normal_derivative(const ScalarField<double>& f, std::span<const double> x, std::size_t i,
                                 std::size_t j, double step) {
  if (i >= x.size() || j >= x.size() || i == j) throw IndexError("wall normal needs two distinct coordinates");
  const double d = step / std::numbers::sqrt2;
  std::vector<double> plus(x.begin(), x.end()), minus(x.begin(), x.end());
  plus[i] += d;
  plus[j] -= d;
  minus[i] -= d;
  minus[j] += d;
  return (f(plus) - f(minus)) / (2.0 * step);
}

/// Relative deviation |sigma_k E - mu_k E| / |mu_k E| of the stencil from the
/// eigenrelation for f = E^{+/-}_lambda at x. The field and stencil run in quad
/// precision so that rounding stays far below the O(h^2) truncation error
/// (the stencil divides by h^{2k}).
inline double sigma_k_relative_error(Symmetry symmetry, std::span<const double> lambda, std::span<const double> x,
                                     int k, double step) {
  const std::vector<quad> lq = to_quad(lambda);
  const std::vector<quad> xq = to_quad(x);
  const bool alternating = symmetry == Symmetry::anti;
  auto field = [&](std::span<const quad> y) {
    return exponential_sum<quad>(std::span<const quad>(lq), y, alternating);
  };
  const quad_complex fd = apply_sigma_k<quad>(field, std::span<const quad>(xq), k, quad(step));
  const quad_complex fx = field(std::span<const quad>(xq));
  const quad mu = quad(sigma_k_eigenvalue(lambda, k));
  const quad_complex expected = fx * mu;
  return static_cast<double>(abs(fd - expected) / abs(expected));
}

}  // namespace symxform
