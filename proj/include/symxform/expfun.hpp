#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "symgroup.hpp"

namespace symxform {

using Complex = std::complex<double>;

/// Complex type paired with a real scalar. Specialised for multiprecision
/// scalars in quad.hpp.
template <class Real>
struct complex_of {
  using type = std::complex<Real>;
};
template <class Real>
using complex_t = typename complex_of<Real>::type;

template <class Real>
Real two_pi() {
  if constexpr (std::is_floating_point_v<Real>) {
    return 2 * std::numbers::pi_v<Real>;
  } else {
    using std::atan;
    return Real(8) * atan(Real(1));
  }
}

enum class EvalMethod { naive_sum, fast };


namespace detail {

inline void check_shapes(std::size_t nl, std::size_t nx) {
  if (nl != nx)
    throw ShapeError("weight and point have different lengths (" + std::to_string(nl) + " vs " +
                     std::to_string(nx) + ")");
  if (nl == 0) throw ShapeError("empty weight");
}

}  // namespace detail

/// Direct n!-term sum  sum_w s(w) exp(2 pi i <lambda, w x>), with s(w) = det w
/// when `alternating` and 1 otherwise. Permutations are visited in Heap's
/// order, each differing from the previous one by a transposition.
///
/// Works for any real scalar with ADL-visible sin/cos; this is the oracle for
/// the fast paths and the high-precision evaluator for finite differences.
template <class Real>
complex_t<Real> exponential_sum(std::span<const Real> lambda, std::span<const Real> x, bool alternating) {
  detail::check_shapes(lambda.size(), x.size());
  const std::size_t n = lambda.size();
  if (n > static_cast<std::size_t>(kMaxEnumeratedOrder))
    throw SizeLimitError("naive permutation sum limited to n <= 10");
  using std::cos;
  using std::sin;
  const Real tau = two_pi<Real>();

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> counter(n, 0);
  int sign = 1;
  Real re(0), im(0);

  auto visit = [&] {
    Real dot(0);
    for (std::size_t j = 0; j < n; ++j) dot += lambda[j] * x[perm[j]];
    const Real theta = tau * dot;
    if (alternating && sign < 0) {
      re -= cos(theta);
      im -= sin(theta);
    } else {
      re += cos(theta);
      im += sin(theta);
    }
  };

  visit();
  std::size_t i = 1;
  while (i < n) {
    if (counter[i] < i) {
      if (i % 2 == 0) {
        std::swap(perm[0], perm[i]);
      } else {
        std::swap(perm[counter[i]], perm[i]);
      }
      sign = -sign;
      visit();
      ++counter[i];
      i = 1;
    } else {
      counter[i] = 0;
      ++i;
    }
  }
  return complex_t<Real>(re, im);
}

/// The matrix (exp(2 pi i lambda_i x_j))_{i,j}.
inline DenseMatrix<Complex> exponential_matrix(std::span<const double> lambda, std::span<const double> x) {
  detail::check_shapes(lambda.size(), x.size());
  const std::size_t n = lambda.size();
  const double tau = two_pi<double>();
  DenseMatrix<Complex> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = std::polar(1.0, tau * (lambda[i] * x[j]));
  return a;
}

/// E^-_lambda(x) = det(exp(2 pi i lambda_i x_j)).
inline Complex eval_antisym(std::span<const double> lambda, std::span<const double> x,
                            EvalMethod method = EvalMethod::fast) {
  if (method == EvalMethod::naive_sum) return exponential_sum<double>(lambda, x, true);
  return determinant_lu(exponential_matrix(lambda, x));
}

/// E^+_lambda(x) = det^+(exp(2 pi i lambda_i x_j)), the permanent.
inline Complex eval_sym(std::span<const double> lambda, std::span<const double> x,
                        EvalMethod method = EvalMethod::fast) {
  if (method == EvalMethod::naive_sum) return exponential_sum<double>(lambda, x, false);
  detail::check_shapes(lambda.size(), x.size());
  if (lambda.size() > kMaxPermanentOrder) throw SizeLimitError("Ryser permanent limited to n <= 24");
  return permanent_ryser(exponential_matrix(lambda, x));
}

inline Complex eval_antisym(const Weight& lambda, std::span<const double> x, EvalMethod method = EvalMethod::fast) {
  return eval_antisym(std::span<const double>(lambda.entries()), x, method);
}
inline Complex eval_sym(const Weight& lambda, std::span<const double> x, EvalMethod method = EvalMethod::fast) {
  return eval_sym(std::span<const double>(lambda.entries()), x, method);
}

inline Complex eval(Symmetry symmetry, std::span<const double> lambda, std::span<const double> x,
                    EvalMethod method = EvalMethod::fast) {
  return symmetry == Symmetry::anti ? eval_antisym(lambda, x, method) : eval_sym(lambda, x, method);
}

/// E^+_m or E^-_m at an integer weight.
inline Complex eval_integer(Symmetry symmetry, std::span<const int> m, std::span<const double> x) {
  Vector lambda(m.begin(), m.end());
  return eval(symmetry, lambda, x);
}

/// rho = (n-1, n-3, ..., -n+1) / 2.
inline Vector rho(int n) {
  Vector r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[i] = 0.5 * (n - 1 - 2 * i);
  return r;
}

/// rho' = (n-1, ..., 1, 0).
inline Vector rho_prime(int n) {
  Vector r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
  return r;
}

enum class SpecialKind { rho_minus, rho_plus, rho_prime };

/// Closed product forms:
///   rho_minus: (2i)^{n(n-1)/2} prod_{i<j} sin pi(x_i - x_j)       (= E^-_rho)
///   rho_plus:  2^{n(n-1)/2}    prod_{i<j} cos pi(x_i - x_j)       (= E^+_rho for n = 2 only)
///   rho_prime: prod_{k<l} (e^{2 pi i x_k} - e^{2 pi i x_l})      (= E^-_{rho'}, Vandermonde)
/// For n >= 3 the cosine product differs from E^+_rho; e.g. at n = 3 it equals
/// E^+_rho + 2.
inline Complex eval_special(std::span<const double> x, SpecialKind kind) {
  const std::size_t n = x.size();
  if (n < 2) throw ShapeError("special forms need n >= 2");
  const double pi = std::numbers::pi;
  Complex prod(1.0, 0.0);
  switch (kind) {
    case SpecialKind::rho_minus:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) prod *= Complex(0.0, 2.0) * std::sin(pi * (x[i] - x[j]));
      break;
    case SpecialKind::rho_plus:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) prod *= 2.0 * std::cos(pi * (x[i] - x[j]));
      break;
    case SpecialKind::rho_prime: {
      std::vector<Complex> z(n);
      for (std::size_t i = 0; i < n; ++i) z[i] = std::polar(1.0, 2.0 * pi * x[i]);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) prod *= z[k] - z[l];
      break;
    }
  }
  return prod;
}

}  // namespace symxform
