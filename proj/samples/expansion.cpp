// Expand an antisymmetric trigonometric polynomial in E-_m, rebuild it from
// its coefficients and run it through the discrete transform.

#include <cstdio>
#include <vector>

#include <symxform/symxform.hpp>

using namespace symxform;

int main() {
  const std::vector<int> a{2, 0}, b{3, 1};
  ScalarField<double> f = [&](std::span<const double> x) {
    return 3.0 * eval_integer(Symmetry::anti, a, x) + Complex(0, 1) * eval_integer(Symmetry::anti, b, x);
  };

  const TorusGrid grid = default_torus_grid(2, 3);
  const CoefficientMap c = analyze(f, Symmetry::anti, dominant_weights(2, -3, 3, Symmetry::anti), grid);
  for (const auto& [m, v] : c)
    if (std::abs(v) > 1e-12) std::printf("c(%d,%d) = %+.12f %+.12fi\n", m[0], m[1], v.real(), v.imag());

  const std::vector<double> x{0.61, 0.17};
  const Complex direct = f(x), series = synthesize(c, x);
  std::printf("f(x) = %+.12f %+.12fi, series = %+.12f %+.12fi\n", direct.real(), direct.imag(), series.real(),
              series.imag());

  const DiscreteTransform t(5, 2, Symmetry::anti);
  std::vector<Complex> values(t.grid().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = f(t.grid().coordinates(i));
  const auto back = t.inverse(t.forward(values));
  double err = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) err = std::max(err, std::abs(back[i] - values[i]));
  std::printf("AMDFT N=5 n=2 round trip error %.3e over %zu points\n", err, values.size());
  return 0;
}
