#pragma once

// 113-bit binary floating point for evaluations whose results are divided by
// large powers of a small step (high-order finite differences).

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <span>
#include <vector>

#include "expfun.hpp"

namespace symxform {

using quad = boost::multiprecision::cpp_bin_float_quad;
using quad_complex = boost::multiprecision::cpp_complex_quad;

template <>
struct complex_of<quad> {
  using type = quad_complex;
};

inline std::vector<quad> to_quad(std::span<const double> v) { return {v.begin(), v.end()}; }

inline Complex to_double(const quad_complex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace symxform
