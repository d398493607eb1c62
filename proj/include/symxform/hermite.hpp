#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "expfun.hpp"
#include "linalg.hpp"
#include "symgroup.hpp"

namespace symxform {

inline constexpr int kMaxHermiteDegree = 60;

/// Physicists' Hermite polynomial H_m(y) by the three-term recurrence.
inline double hermite_eval(int m, double y) {
  if (m < 0 || m > kMaxHermiteDegree)
    throw RangeError("Hermite degree " + std::to_string(m) + " outside 0..60");
  if (m == 0) return 1.0;
  double prev = 1.0, cur = 2.0 * y;
  for (int k = 1; k < m; ++k) {
    const double next = 2.0 * y * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Multi-index m of a (symmetrised or antisymmetrised) Hermite polynomial.
/// sym: m_1 >= ... >= m_n >= 0; anti: m_1 > ... > m_n >= 0.
class HermiteIndex {
 public:
  HermiteIndex(std::vector<int> m, Symmetry symmetry) : m_(std::move(m)), symmetry_(symmetry) {
    if (m_.empty()) throw ShapeError("empty Hermite index");
    for (int v : m_)
      if (v < 0 || v > kMaxHermiteDegree) throw RangeError("Hermite index entries must lie in 0..60");
    require_dominant(m_, symmetry_);
  }

  const std::vector<int>& m() const noexcept { return m_; }
  Symmetry symmetry() const noexcept { return symmetry_; }
  std::size_t size() const noexcept { return m_.size(); }
  int total_degree() const noexcept {
    int t = 0;
    for (int v : m_) t += v;
    return t;
  }

 private:
  std::vector<int> m_;
  Symmetry symmetry_;
};

/// Half-width L and nodes per axis M of a tensor trapezoid rule on [-L, L]^n.
struct TruncationBox {
  double half_width = 6.0;
  int points_per_axis = 2000;

  void validate() const {
    if (!(half_width > 0.0)) throw RangeError("truncation half-width must be positive");
    if (points_per_axis < 2) throw RangeError("truncation box needs at least two nodes per axis");
  }
};

namespace detail {

inline DenseMatrix<double> hermite_matrix(std::span<const int> m, std::span<const double> y) {
  const std::size_t n = m.size();
  DenseMatrix<double> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = hermite_eval(m[i], y[j]);
  return a;
}

}  // namespace detail

/// H^sym_m(lambda) = det^+(H_{m_i}(lambda_j)), H^anti_m(lambda) = det(H_{m_i}(lambda_j)).
inline double hermite_det_eval(const HermiteIndex& idx, std::span<const double> lambda) {
  if (lambda.size() != idx.size()) throw ShapeError("Hermite index and argument lengths differ");
  auto a = detail::hermite_matrix(idx.m(), lambda);
  return idx.symmetry() == Symmetry::anti ? determinant_lu(std::move(a)) : permanent_ryser(a);
}

/// Trapezoid approximation of  int exp(2 pi i p x) exp(-pi p^2) H_m(sqrt(2 pi) p) dp.
inline Complex hermite_transform_1d_quadrature(int m, double x, const TruncationBox& box = {}) {
  box.validate();
  const double L = box.half_width;
  const int M = box.points_per_axis;
  const double h = 2.0 * L / (M - 1);
  const double root = std::sqrt(2.0 * std::numbers::pi);
  Complex acc{};
  for (int k = 0; k < M; ++k) {
    const double p = -L + k * h;
    const double w = (k == 0 || k == M - 1) ? 0.5 * h : h;
    acc += w * std::polar(std::exp(-std::numbers::pi * p * p) * hermite_eval(m, root * p),
                          2.0 * std::numbers::pi * p * x);
  }
  return acc;
}

/// Eigenvalues of the one-dimensional transform on Hermite functions, fixed by
/// quadrature: phase[m] is the fourth root of unity nearest to
/// quadrature(m, x) / (exp(-pi x^2) H_m(sqrt(2 pi) x)).
struct PhaseCalibration {
  std::array<Complex, 4> phase{};
  std::array<double, 4> residual{};
  double probe = 0.0;
};

inline PhaseCalibration calibrate_phase(double probe = 0.3, const TruncationBox& box = {6.0, 2000}) {
  static const std::array<Complex, 4> roots = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  PhaseCalibration cal;
  cal.probe = probe;
  const double root = std::sqrt(2.0 * std::numbers::pi);
  for (int m = 0; m < 4; ++m) {
    const double reference = std::exp(-std::numbers::pi * probe * probe) * hermite_eval(m, root * probe);
    if (std::abs(reference) < 1e-3) throw RangeError("phase probe sits near a Hermite zero");
    const Complex ratio = hermite_transform_1d_quadrature(m, probe, box) / reference;
    std::size_t best = 0;
    for (std::size_t r = 1; r < roots.size(); ++r)
      if (std::abs(ratio - roots[r]) < std::abs(ratio - roots[best])) best = r;
    cal.phase[m] = roots[best];
    cal.residual[m] = std::abs(ratio - roots[best]);
  }
  return cal;
}

/// Calibration computed on first use and then shared read-only.
inline const PhaseCalibration& phase_calibration() {
  static const PhaseCalibration cal = calibrate_phase();
  return cal;
}

/// phase(k) for k >= 0; periodic with period 4.
inline Complex hermite_phase(int k) {
  if (k < 0) throw RangeError("phase index must be non-negative");
  return phase_calibration().phase[static_cast<std::size_t>(k % 4)];
}

namespace detail {

/// int E^{+/-}_lambda(x) exp(-pi |x|^2) prod_k H_{m_k}(sqrt(2 pi) x_k) dx.
/// Every permutation term factorises into one-dimensional transforms
/// phi_{m_k}(lambda_j) = phase(m_k) exp(-pi lambda_j^2) H_{m_k}(sqrt(2 pi) lambda_j),
/// so the integral is det (anti) or det^+ (sym) of the matrix of those values.
inline Complex factorized_transform(std::span<const int> m, std::span<const double> lambda, Symmetry symmetry) {
  if (m.size() != lambda.size()) throw ShapeError("Hermite index and weight lengths differ");
  const std::size_t n = m.size();
  const double root = std::sqrt(2.0 * std::numbers::pi);
  DenseMatrix<Complex> a(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      a(k, j) = hermite_phase(m[k]) * std::exp(-std::numbers::pi * lambda[j] * lambda[j]) *
                hermite_eval(m[k], root * lambda[j]);
  return symmetry == Symmetry::anti ? determinant_lu(std::move(a)) : permanent_ryser(a);
}

}  // namespace detail

/// int_{R^n} E^{+/-}_lambda(x) exp(-pi |x|^2) H_m(sqrt(2 pi) x) dx by exact
/// one-dimensional factorisation; the class of idx selects E^+ or E^-.
inline Complex transform_hermite_analytic(const HermiteIndex& idx, std::span<const double> lambda) {
  return detail::factorized_transform(idx.m(), lambda, idx.symmetry());
}

/// phase(|m|) exp(-pi |lambda|^2) H^{sym/anti}_m(sqrt(2 pi) lambda), with the
/// Gaussian factor exp(-pi lambda_j^2) carried in column j of the matrix.
inline Complex hermite_eigen_reference(const HermiteIndex& idx, std::span<const double> lambda) {
  if (lambda.size() != idx.size()) throw ShapeError("Hermite index and weight lengths differ");
  const std::size_t n = idx.size();
  const double root = std::sqrt(2.0 * std::numbers::pi);
  DenseMatrix<Complex> b(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      b(k, j) = Complex(std::exp(-std::numbers::pi * lambda[j] * lambda[j]), 0.0) * hermite_eval(idx.m()[k], root * lambda[j]);
  const Complex value = idx.symmetry() == Symmetry::anti ? determinant_lu(std::move(b)) : permanent_ryser(b);
  return hermite_phase(idx.total_degree()) * value;
}

/// e^{-pi |x|^2} H^{sym/anti}_m(sqrt(2 pi) x), the candidate eigenfunction.
inline Complex hermite_eigenfunction(const HermiteIndex& idx, std::span<const double> x) {
  std::vector<double> scaled(x.begin(), x.end());
  double norm2 = 0.0;
  for (double& v : scaled) {
    norm2 += v * v;
    v *= std::sqrt(2.0 * std::numbers::pi);
  }
  return std::exp(-std::numbers::pi * norm2) * hermite_det_eval(idx, scaled);
}

inline constexpr double kTruncationThreshold = 1e-14;

/// (1/|S_n|) int_{[-L,L]^n} f(x) E^{+/-}_lambda(x) dx by the tensor trapezoid
/// rule, i.e. the transform over D_+ for (anti)symmetric f. Throws
/// TruncationWarning when |f| exceeds 1e-14 on the box boundary.
template <class Field>
Complex transform_numeric(Field&& f, std::span<const double> lambda, Symmetry symmetry, const TruncationBox& box) {
  box.validate();
  const std::size_t n = lambda.size();
  if (n == 0) throw ShapeError("empty weight");
  const int M = box.points_per_axis;
  const double L = box.half_width;
  const double h = 2.0 * L / (M - 1);

  std::vector<int> idx(n, 0);
  std::vector<double> x(n, -L);
  Complex acc{};
  double boundary_max = 0.0;
  while (true) {
    double w = 1.0;
    bool on_boundary = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (idx[i] == 0 || idx[i] == M - 1) {
        w *= 0.5 * h;
        on_boundary = true;
      } else {
        w *= h;
      }
    }
    const Complex fx = f(std::span<const double>(x));
    if (on_boundary) boundary_max = std::max(boundary_max, std::abs(fx));
    acc += w * fx * eval(symmetry, lambda, x);

    std::size_t d = n;
    while (d > 0) {
      --d;
      if (++idx[d] < M) {
        x[d] = -L + idx[d] * h;
        break;
      }
      idx[d] = 0;
      x[d] = -L;
      if (d == 0) {
        d = n + 1;
        break;
      }
    }
    if (d == n + 1) break;
  }
  if (boundary_max > kTruncationThreshold)
    throw TruncationWarning("integrand reaches " + std::to_string(boundary_max) + " on the truncation boundary");
  return acc / static_cast<double>(factorial(static_cast<int>(n)));
}

/// Largest relative deviation, over the sample, between the transform of the
/// (anti)symmetrised eigenfunction e^{-pi|x|^2} H^{.}_m(sqrt(2 pi) x), divided
/// by |S_n|, and phase(|m|) e^{-pi|lambda|^2} H^{.}_m(sqrt(2 pi) lambda).
/// The left side expands H^{.}_m into its n! permuted products and
/// transforms each one by 1D factorisation.
inline double eigen_check(const HermiteIndex& idx, const std::vector<Vector>& sample) {
  const int n = static_cast<int>(idx.size());
  const auto& perms = permutations(n);
  double worst = 0.0;
  for (const Vector& lambda : sample) {
    if (lambda.size() != idx.size()) throw ShapeError("sample weight length differs from index");
    const Dominance d = Weight::classify(lambda);
    if (d == Dominance::none || (idx.symmetry() == Symmetry::anti && d != Dominance::strict))
      throw DominanceError("sample weight is not dominant for the index class");

    Complex total{};
    std::vector<int> permuted(idx.size());
    for (const Permutation& v : perms) {
      for (std::size_t i = 0; i < idx.size(); ++i) permuted[v(i)] = idx.m()[i];
      const double s = idx.symmetry() == Symmetry::anti ? v.sign() : 1.0;
      total += s * detail::factorized_transform(permuted, lambda, idx.symmetry());
    }
    total /= static_cast<double>(perms.size());

    const Complex reference = hermite_eigen_reference(idx, lambda);
    const double scale = std::abs(reference);
    const double dev = scale > 0.0 ? std::abs(total - reference) / scale : std::abs(total - reference);
    worst = std::max(worst, dev);
  }
  return worst;
}

struct QuadratureRule {
  Vector nodes;
  Vector weights;
};

/// K-point Gauss-Hermite rule for the weight e^{-y^2}; exact for polynomials of
/// degree <= 2K - 1. Newton iteration on the orthonormal recurrence.
inline QuadratureRule gauss_hermite_rule(int K) {
  if (K < 1 || K > 200) throw RangeError("Gauss-Hermite order must lie in 1..200");
  QuadratureRule rule;
  rule.nodes.assign(static_cast<std::size_t>(K), 0.0);
  rule.weights.assign(static_cast<std::size_t>(K), 0.0);
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  const int half = (K + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * K + 1) - 1.85575 * std::pow(2.0 * K + 1, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(K), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 1; j <= K; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt(static_cast<double>(j - 1) / j) * p3;
      }
      pp = std::sqrt(2.0 * K) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    rule.nodes[i] = z;
    rule.nodes[K - 1 - i] = -z;
    rule.weights[i] = rule.weights[K - 1 - i] = 2.0 / (pp * pp);
  }
  return rule;
}

/// int_{R^n} e^{-2 pi |x|^2} H_a(sqrt(2 pi) x) H_b(sqrt(2 pi) x) dx for product
/// Hermite functions, by a tensor Gauss-Hermite rule in y = sqrt(2 pi) x.
inline double hermite_function_inner_product(std::span<const int> a, std::span<const int> b, int K = 16) {
  if (a.size() != b.size()) throw ShapeError("multi-index lengths differ");
  const QuadratureRule rule = gauss_hermite_rule(K);
  const double jacobian = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  double total = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q)
      acc += rule.weights[q] * hermite_eval(a[i], rule.nodes[q]) * hermite_eval(b[i], rule.nodes[q]);
    total *= acc * jacobian;
  }
  return total;
}

}  // namespace symxform
