#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace symxform {

using Vector = std::vector<double>;
using Point = std::vector<double>;
using IntWeight = std::vector<int>;

inline constexpr int kMaxEnumeratedOrder = 10;

/// A permutation w of {0..n-1} acting on tuples by (w v)_j = v_{w(j)}.
/// Indices are zero-based; the printed form adds one.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ShapeError unless `mapping` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
      if (v < 0 || static_cast<std::size_t>(v) >= map_.size() || seen[v])
        throw ShapeError("permutation mapping is not a bijection");
      seen[v] = true;
    }
    sign_ = inversion_parity(map_);
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
  }

  std::size_t size() const noexcept { return map_.size(); }
  int operator()(std::size_t i) const noexcept { return map_[i]; }
  const std::vector<int>& mapping() const noexcept { return map_; }
  int sign() const noexcept { return sign_; }

  /// (w v)_j = v_{w(j)}.
  template <class T>
  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != map_.size()) throw ShapeError("permutation/tuple size mismatch");
    std::vector<T> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[map_[j]];
    return out;
  }
  template <class T>
  std::vector<T> apply(const std::vector<T>& v) const {
    return apply(std::span<const T>(v));
  }

  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const {
    if (other.size() != size()) throw ShapeError("composing permutations of different degree");
    std::vector<int> m(size());
    for (std::size_t i = 0; i < size(); ++i) m[i] = map_[other.map_[i]];
    return Permutation(std::move(m));
  }

  Permutation inverse() const {
    std::vector<int> m(size());
    for (std::size_t i = 0; i < size(); ++i) m[map_[i]] = static_cast<int>(i);
    return Permutation(std::move(m));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.map_ == b.map_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.map_ < b.map_; }

  static int inversion_parity(const std::vector<int>& m) {
    int inv = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (m[i] > m[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
  }

 private:
  std::vector<int> map_;
  int sign_ = 1;
};

enum class Dominance { strict, weak, none };

/// Symmetry class of an exponential function or expansion: E^+ or E^-.
enum class Symmetry { sym, anti };

/// A real n-tuple indexing an exponential function, with its dominance class.
class Weight {
 public:
  Weight() = default;
  explicit Weight(Vector entries) : entries_(std::move(entries)), dominance_(classify(entries_)) {}

  const Vector& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const noexcept { return entries_[i]; }
  Dominance dominance() const noexcept { return dominance_; }

  static Dominance classify(std::span<const double> v) {
    bool strict = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i - 1] < v[i]) return Dominance::none;
      if (v[i - 1] == v[i]) strict = false;
    }
    return strict ? Dominance::strict : Dominance::weak;
  }

 private:
  Vector entries_;
  Dominance dominance_ = Dominance::strict;
};

/// All n! permutations in lexicographic order of their mappings.
inline std::vector<Permutation> enumerate_permutations(int n) {
  if (n < 1 || n > kMaxEnumeratedOrder)
    throw SizeLimitError("enumerate_permutations: n must lie in 1..10, got " + std::to_string(n));
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

/// Cached, immutable copy of enumerate_permutations(n).
inline const std::vector<Permutation>& permutations(int n) {
  if (n < 1 || n > kMaxEnumeratedOrder)
    throw SizeLimitError("permutations: n must lie in 1..10, got " + std::to_string(n));
  static std::array<std::once_flag, kMaxEnumeratedOrder + 1> once;
  static std::array<std::vector<Permutation>, kMaxEnumeratedOrder + 1> table;
  std::call_once(once[n], [n] { table[n] = enumerate_permutations(n); });
  return table[n];
}

/// The order-reversing permutation w_0; sign (-1)^{n(n-1)/2}.
inline Permutation longest_element(int n) {
  if (n < 1) throw ShapeError("longest_element: n must be positive");
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[i] = n - 1 - i;
  return Permutation(std::move(m));
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Sorts v into non-increasing order. Returns the sorted weight and the sign of
/// the sorting permutation w (sorted = w v). Equal entries keep their relative
/// order, so an already sorted tuple has sign +1.
inline std::pair<Weight, int> dominant_sort(std::span<const double> v, bool strict_required = false) {
  std::vector<int> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return v[a] > v[b]; });
  Vector sorted(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sorted[i] = v[order[i]];
  if (strict_required) {
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i - 1] == sorted[i]) throw DegenerateWeightError("weight has repeated entries");
  }
  return {Weight(std::move(sorted)), Permutation::inversion_parity(order)};
}

/// |S_m|: number of permutations fixing m, the product of multiplicity factorials.
template <class T>
std::uint64_t stabilizer_order(std::span<const T> m) {
  std::map<T, int> counts;
  for (const T& v : m) ++counts[v];
  std::uint64_t order = 1;
  for (const auto& [value, count] : counts) order *= factorial(count);
  return order;
}
inline std::uint64_t stabilizer_order(const Weight& m) { return stabilizer_order<double>(m.entries()); }
template <class T>
std::uint64_t stabilizer_order(const std::vector<T>& m) {
  return stabilizer_order<T>(std::span<const T>(m));
}

/// Fractional part in [0, 1); the value 1.0 produced by rounding maps to 0.
inline double fractional_part(double v) {
  double f = v - std::floor(v);
  return f >= 1.0 ? 0.0 : f;
}

/// Folds x into the closure of F(S_n^aff) = {1 > x_1 >= ... >= x_n >= 0}:
/// reduces every coordinate modulo the shift lattice, then sorts. Returns the
/// reduced point and the sorting permutation w (reduced = w frac(x)).
inline std::pair<Point, Permutation> reduce_to_affine_fundamental(std::span<const double> x) {
  Point frac(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) frac[i] = fractional_part(x[i]);
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return frac[a] > frac[b]; });
  Permutation w(std::move(order));
  return {w.apply(frac), std::move(w)};
}

inline void require_dominant(std::span<const int> m, Symmetry symmetry) {
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i - 1] < m[i]) throw DominanceError("weight is not dominant");
    if (symmetry == Symmetry::anti && m[i - 1] == m[i])
      throw DominanceError("weight is not strictly dominant");
  }
}

/// All integer weights with entries in [lo, hi], non-increasing (sym) or
/// strictly decreasing (anti), in lexicographically descending order.
inline std::vector<IntWeight> dominant_weights(int n, int lo, int hi, Symmetry symmetry) {
  std::vector<IntWeight> out;
  IntWeight m(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int pos, int upper) {
    if (pos == n) {
      out.push_back(m);
      return;
    }
    const int floor_value = lo + ((symmetry == Symmetry::anti) ? (n - 1 - pos) : 0);
    for (int v = upper; v >= floor_value; --v) {
      m[pos] = v;
      rec(pos + 1, symmetry == Symmetry::anti ? v - 1 : v);
    }
  };
  if (n >= 1) rec(0, hi);
  return out;
}

}  // namespace symxform
