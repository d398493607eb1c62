#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diffops.hpp"
#include "errors.hpp"
#include "expfun.hpp"
#include "parallel.hpp"
#include "symgroup.hpp"

namespace symxform {

/// Uniform tensor grid {0, 1/M, ..., (M-1)/M}^n on the unit torus, each node
/// weighted M^{-n}. Integrates exp(2 pi i <k, x>) exactly unless k = 0 mod M,
/// so band-limited integrands with frequencies below M are integrated exactly.
class TorusGrid {
 public:
  TorusGrid(int points_per_axis, int dimension) : m_(points_per_axis), n_(dimension) {
    if (m_ < 1) throw RangeError("torus grid needs at least one point per axis");
    if (n_ < 1) throw ShapeError("torus grid dimension must be positive");
    size_ = 1;
    for (int i = 0; i < n_; ++i) size_ *= static_cast<std::size_t>(m_);
  }

  int points_per_axis() const noexcept { return m_; }
  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }
  double weight() const noexcept { return 1.0 / static_cast<double>(size_); }

  /// Node with mixed-radix index `index`; the first coordinate varies slowest.
  Point point(std::size_t index) const {
    Point x(static_cast<std::size_t>(n_));
    for (int i = n_ - 1; i >= 0; --i) {
      x[i] = static_cast<double>(index % m_) / m_;
      index /= m_;
    }
    return x;
  }

 private:
  int m_;
  int n_;
  std::size_t size_ = 1;
};

/// Grid with M = 2 * max_frequency + 2.
inline TorusGrid default_torus_grid(int dimension, int max_frequency) {
  return TorusGrid(2 * max_frequency + 2, dimension);
}

enum class Pairing { sym, anti, mixed };

/// Spectral data c_m of an expansion in E^+_m (keys in P_+, non-increasing)
/// or E^-_m (keys in P_+^+, strictly decreasing). Non-canonical keys are
/// rejected.
class CoefficientMap {
 public:
  using Storage = std::map<IntWeight, Complex, std::greater<>>;

  explicit CoefficientMap(Symmetry symmetry) : symmetry_(symmetry) {}

  Symmetry symmetry() const noexcept { return symmetry_; }

  void set(IntWeight m, Complex c) {
    if (m.empty()) throw ShapeError("empty coefficient key");
    if (!entries_.empty() && entries_.begin()->first.size() != m.size())
      throw ShapeError("coefficient keys of different lengths");
    require_dominant(m, symmetry_);
    entries_[std::move(m)] = c;
  }

  Complex at(const IntWeight& m) const {
    auto it = entries_.find(m);
    return it == entries_.end() ? Complex{} : it->second;
  }

  bool contains(const IntWeight& m) const { return entries_.count(m) != 0; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Storage::const_iterator begin() const { return entries_.begin(); }
  Storage::const_iterator end() const { return entries_.end(); }

 private:
  Symmetry symmetry_;
  Storage entries_;
};

namespace detail {

/// Deterministic probe points with pairwise distinct, irregular coordinates.
inline std::vector<Point> probe_points(int n) {
  std::vector<Point> pts;
  for (int p = 0; p < 3; ++p) {
    Point x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      x[i] = fractional_part(0.1234 + 0.6180339887498949 * (i + 1) * (p + 1) + 0.0731 * i * i);
    pts.push_back(std::move(x));
  }
  return pts;
}

/// +1 if f(s x) = f(x) for every adjacent swap s at every probe, -1 if
/// f(s x) = -f(x), 0 otherwise.
inline int symmetry_class(const ScalarField<double>& f, int n) {
  if (n < 2) return 0;
  bool symmetric = true, alternating = true;
  for (const Point& x : probe_points(n)) {
    const Complex fx = f(x);
    const double tol = 1e-9 * (1.0 + std::abs(fx));
    for (int i = 0; i + 1 < n; ++i) {
      Point y = x;
      std::swap(y[i], y[i + 1]);
      const Complex fy = f(y);
      if (std::abs(fy - fx) > tol) symmetric = false;
      if (std::abs(fy + fx) > tol) alternating = false;
    }
  }
  if (symmetric && !alternating) return 1;
  if (alternating && !symmetric) return -1;
  if (symmetric && alternating) return 2;  // f vanishes at every probe
  return 0;
}

inline void require_class(const ScalarField<double>& f, int n, Symmetry want, const char* what) {
  if (n < 2) return;
  const int c = symmetry_class(f, n);
  const bool ok = c == 2 || (want == Symmetry::sym ? c == 1 : c == -1);
  if (!ok)
    throw SymmetryError(std::string(what) + " is not " +
                        (want == Symmetry::sym ? "symmetric" : "antisymmetric"));
}

inline std::vector<Complex> sample(const ScalarField<double>& f, const TorusGrid& grid) {
  std::vector<Complex> values(grid.size());
  for (std::size_t idx = 0; idx < grid.size(); ++idx) values[idx] = f(grid.point(idx));
  return values;
}

}  // namespace detail

/// M^{-n} sum_grid f(x) conj(g(x)); equals the torus integral for
/// band-limited integrands.
inline Complex inner_product_torus(const ScalarField<double>& f, const ScalarField<double>& g,
                                   const TorusGrid& grid) {
  Complex sum{};
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const Point x = grid.point(idx);
    sum += f(x) * std::conj(g(x));
  }
  return sum * grid.weight();
}

/// Inner product over F(S_n^aff) (|torus| = 1, so |F| = 1/|S_n|).
///
/// sym / anti: both functions must carry that class; the integrand is then
/// S_n-invariant and the result is the torus integral divided by |S_n|.
///
/// mixed: one function symmetric, the other antisymmetric, integrated over
/// F^ext = F u w_1 F (w_1 swaps the first two coordinates). Each torus node is
/// folded into F and the integrand evaluated at the folded point and at its
/// w_1 image.
inline Complex inner_product_fundamental(const ScalarField<double>& f, const ScalarField<double>& g,
                                         const TorusGrid& grid, Pairing pairing) {
  const int n = grid.dimension();
  const double group_order = static_cast<double>(factorial(n));
  switch (pairing) {
    case Pairing::sym:
      detail::require_class(f, n, Symmetry::sym, "first function");
      detail::require_class(g, n, Symmetry::sym, "second function");
      return inner_product_torus(f, g, grid) / group_order;
    case Pairing::anti:
      detail::require_class(f, n, Symmetry::anti, "first function");
      detail::require_class(g, n, Symmetry::anti, "second function");
      return inner_product_torus(f, g, grid) / group_order;
    case Pairing::mixed:
      break;
  }
  if (n < 2) throw ShapeError("mixed pairing needs n >= 2");
  const int cf = detail::symmetry_class(f, n);
  const int cg = detail::symmetry_class(g, n);
  const bool one_of_each = cf == 2 || cg == 2 || cf * cg == -1;
  if (!one_of_each) throw SymmetryError("mixed pairing needs one symmetric and one antisymmetric function");

  Complex sum{};
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const Point x = grid.point(idx);
    Point y = reduce_to_affine_fundamental(x).first;
    sum += f(y) * std::conj(g(y));
    std::swap(y[0], y[1]);
    sum += f(y) * std::conj(g(y));
  }
  return sum * grid.weight() / group_order;
}

/// Expansion coefficients from values of f at the nodes of `grid` (in
/// TorusGrid::point order). The class of f is not checked.
inline CoefficientMap analyze_samples(std::span<const Complex> values, Symmetry symmetry,
                                      const std::vector<IntWeight>& spectrum, const TorusGrid& grid) {
  const int n = grid.dimension();
  if (values.size() != grid.size()) throw ShapeError("sample count differs from grid size");
  for (const IntWeight& m : spectrum) {
    if (static_cast<int>(m.size()) != n) throw ShapeError("spectrum weight length differs from grid dimension");
    require_dominant(m, symmetry);
  }
  std::vector<Point> nodes(grid.size());
  for (std::size_t idx = 0; idx < grid.size(); ++idx) nodes[idx] = grid.point(idx);

  const double group_order = static_cast<double>(factorial(n));
  std::vector<Complex> coeffs(spectrum.size());
  parallel_for(spectrum.size(), [&](std::size_t k) {
    const IntWeight& m = spectrum[k];
    Complex acc{};
    for (std::size_t idx = 0; idx < nodes.size(); ++idx)
      acc += values[idx] * std::conj(eval_integer(symmetry, m, nodes[idx]));
    acc *= grid.weight() / group_order;
    if (symmetry == Symmetry::sym) acc /= static_cast<double>(stabilizer_order(m));
    coeffs[k] = acc;
  });

  CoefficientMap out(symmetry);
  for (std::size_t k = 0; k < spectrum.size(); ++k) out.set(spectrum[k], coeffs[k]);
  return out;
}

/// Expansion coefficients of f in E^+_m (c_m = |S_m|^{-1} <f, E^+_m>_F) or
/// E^-_m (c_m = <f, E^-_m>_F) over the given spectrum. f is sampled once.
inline CoefficientMap analyze(const ScalarField<double>& f, Symmetry symmetry, const std::vector<IntWeight>& spectrum,
                              const TorusGrid& grid) {
  detail::require_class(f, grid.dimension(), symmetry, "function");
  const std::vector<Complex> values = detail::sample(f, grid);
  return analyze_samples(values, symmetry, spectrum, grid);
}

/// sum_m c_m E^{+/-}_m(x).
inline Complex synthesize(const CoefficientMap& coeffs, std::span<const double> x) {
  Complex sum{};
  for (const auto& [m, c] : coeffs) sum += c * eval_integer(coeffs.symmetry(), m, x);
  return sum;
}

/// Mixed expansion on F^ext: symmetric series plus antisymmetric series.
inline Complex synthesize(const CoefficientMap& symmetric, const CoefficientMap& antisymmetric,
                          std::span<const double> x) {
  if (symmetric.symmetry() != Symmetry::sym || antisymmetric.symmetry() != Symmetry::anti)
    throw SymmetryError("mixed synthesis needs a symmetric and an antisymmetric map");
  return synthesize(symmetric, x) + synthesize(antisymmetric, x);
}

struct PlancherelSides {
  double lhs = 0.0;  ///< spectral side
  double rhs = 0.0;  ///< integral of |f|^2 over F(S_n^aff)
};

/// Spectral vs. spatial squared norms. Symmetric class: sum |c_m|^2 |S_m|;
/// antisymmetric class: sum |c_m|^2. Both against int_F |f|^2.
inline PlancherelSides plancherel_check(const ScalarField<double>& f, const CoefficientMap& coeffs,
                                        const TorusGrid& grid) {
  PlancherelSides out;
  for (const auto& [m, c] : coeffs) {
    const double w = coeffs.symmetry() == Symmetry::sym ? static_cast<double>(stabilizer_order(m)) : 1.0;
    out.lhs += std::norm(c) * w;
  }
  double sum = 0.0;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) sum += std::norm(f(grid.point(idx)));
  out.rhs = sum * grid.weight() / static_cast<double>(factorial(grid.dimension()));
  return out;
}

}  // namespace symxform
