// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <symxform/symxform.hpp>

using namespace symxform;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<double> uniform(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (double& e : v) e = d(rng);
  return v;
}

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

struct Outcome {
  bool pass;
  std::string detail;
};

// 1 ----------------------------------------------------------------------------
Outcome oracle_equivalence() {
  std::mt19937_64 rng(101);
  const auto t0 = Clock::now();
  double worst = 0.0;
  int failures = 0;
  for (int n = 2; n <= 7; ++n)
    for (int t = 0; t < 100; ++t) {
      const auto lambda = uniform(rng, n, -3, 3);
      const auto x = uniform(rng, n, 0, 1);
      for (Symmetry s : {Symmetry::anti, Symmetry::sym}) {
        const Complex naive = eval(s, lambda, x, EvalMethod::naive_sum);
        const Complex fast = eval(s, lambda, x, EvalMethod::fast);
        const double diff = std::abs(fast - naive);
        const double rel = diff / std::max(std::abs(naive), 1e-300);
        if (diff > 1e-12) worst = std::max(worst, rel);
        if (diff > 1e-12 && rel > 1e-10) ++failures;
      }
    }
  const double elapsed = seconds_since(t0);
  return {failures == 0 && elapsed < 5.0,
          format("n=2..7, 1200 pairs: max rel err %.2e (tol 1e-10, 1e-12 abs near zero), %d failures, %.2f s (< 5 s)",
                 worst, failures, elapsed)};
}

double gram_deviation(int N, int n, Symmetry s) {
  const DiscreteTransform t(N, n, s);
  const auto g = t.gram();
  double worst = 0.0;
  for (std::size_t a = 0; a < g.rows(); ++a)
    for (std::size_t b = 0; b < g.cols(); ++b) {
      const double diag = s == Symmetry::anti ? 1.0 : static_cast<double>(stabilizer_order(t.spectrum().weights[a]));
      worst = std::max(worst, std::abs(g(a, b) - (a == b ? diag : 0.0)));
    }
  return worst;
}

// 2 ----------------------------------------------------------------------------
Outcome discrete_antisymmetric_orthogonality() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (auto [N, n] : {std::pair{4, 2}, {5, 2}, {5, 3}, {8, 3}}) worst = std::max(worst, gram_deviation(N, n, Symmetry::anti));
  const double elapsed = seconds_since(t0);
  return {worst <= 1e-12 && elapsed < 2.0,
          format("(4,2),(5,2),(5,3),(8,3): max |G - I| = %.2e (tol 1e-12), %.3f s (< 2 s)", worst, elapsed)};
}

// 3 ----------------------------------------------------------------------------
Outcome discrete_symmetric_orthogonality() {
  double worst = 0.0;
  for (auto [N, n] : {std::pair{3, 2}, {4, 2}, {4, 3}}) worst = std::max(worst, gram_deviation(N, n, Symmetry::sym));
  return {worst <= 1e-12, format("(3,2),(4,2),(4,3): max |G - diag(|S_m|)| = %.2e (tol 1e-12)", worst)};
}

// 4 ----------------------------------------------------------------------------
Outcome discrete_round_trips() {
  std::mt19937_64 rng(103);
  double worst = 0.0;
  for (Symmetry s : {Symmetry::anti, Symmetry::sym})
    for (auto [N, n] : {std::pair{4, 2}, {5, 2}, {5, 3}, {8, 3}, {3, 2}, {4, 3}}) {
      const DiscreteTransform t(N, n, s);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> f(t.grid().size());
        for (auto& v : f) {
          const auto r = uniform(rng, 2, -1, 1);
          v = Complex(r[0], r[1]);
        }
        const auto back = t.inverse(t.forward(f));
        for (std::size_t i = 0; i < f.size(); ++i) worst = std::max(worst, std::abs(back[i] - f[i]));
      }
    }
  return {worst <= 1e-10, format("AMDFT and SMDFT, 6 (N,n) cases x 20 vectors: max error %.2e (tol 1e-10)", worst)};
}

// 5 ----------------------------------------------------------------------------
Outcome continuous_orthogonality() {
  double worst_anti = 0.0, worst_sym = 0.0, worst_mixed = 0.0;
  std::size_t pairs = 0;
  for (int n = 2; n <= 3; ++n) {
    const TorusGrid grid(8, n);
    auto field = [](Symmetry s, IntWeight m) -> ScalarField<double> {
      return [s, m](std::span<const double> x) { return eval_integer(s, m, x); };
    };
    const auto anti = dominant_weights(n, -3, 3, Symmetry::anti);
    const auto sym = dominant_weights(n, -3, 3, Symmetry::sym);
    for (const auto& a : anti)
      for (const auto& b : anti) {
        const Complex v = inner_product_fundamental(field(Symmetry::anti, a), field(Symmetry::anti, b), grid, Pairing::anti);
        worst_anti = std::max(worst_anti, std::abs(v - (a == b ? 1.0 : 0.0)));
        ++pairs;
      }
    for (const auto& a : sym)
      for (const auto& b : sym) {
        const Complex v = inner_product_fundamental(field(Symmetry::sym, a), field(Symmetry::sym, b), grid, Pairing::sym);
        const double diag = static_cast<double>(stabilizer_order(a));
        worst_sym = std::max(worst_sym, std::abs(v - (a == b ? diag : 0.0)));
        ++pairs;
      }
    for (const auto& a : sym)
      for (const auto& b : anti) {
        const Complex v = inner_product_fundamental(field(Symmetry::sym, a), field(Symmetry::anti, b), grid, Pairing::mixed);
        worst_mixed = std::max(worst_mixed, std::abs(v));
        ++pairs;
      }
  }
  const double worst = std::max({worst_anti, worst_sym, worst_mixed});
  return {worst <= 1e-12, format("n=2,3, |m_i|<=3, M=8, %zu pairs: anti %.1e, sym %.1e, mixed %.1e (tol 1e-12)", pairs,
                                 worst_anti, worst_sym, worst_mixed)};
}

// 6 ----------------------------------------------------------------------------
Outcome special_cases() {
  std::mt19937_64 rng(107);
  std::string detail;
  bool pass = true;
  for (int n = 2; n <= 5; ++n) {
    double sine = 0.0, cosine = 0.0, vander = 0.0;
    for (int t = 0; t < 50; ++t) {
      const auto x = uniform(rng, n, 0, 1);
      auto dev = [](Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
      sine = std::max(sine, dev(eval_special(x, SpecialKind::rho_minus), eval_antisym(rho(n), x)));
      cosine = std::max(cosine, dev(eval_special(x, SpecialKind::rho_plus), eval_sym(rho(n), x)));
      vander = std::max(vander, dev(eval_special(x, SpecialKind::rho_prime), eval_antisym(rho_prime(n), x)));
    }
    pass = pass && sine <= 1e-12 && cosine <= 1e-12 && vander <= 1e-12;
    detail += format("%sn=%d sin %.1e cos %.1e vdm %.1e", n == 2 ? "" : "; ", n, sine, cosine, vander);
  }
  return {pass, detail + " (tol 1e-12)"};
}

// 7 ----------------------------------------------------------------------------
Outcome differential_eigenrelations() {
  std::mt19937_64 rng(109);
  const double h = 1e-3;
  double worst_err = 0.0, min_ratio = 1e300, max_ratio = 0.0;
  int cases = 0;
  bool pass = true;
  for (int n = 2; n <= 3; ++n)
    for (Symmetry s : {Symmetry::anti, Symmetry::sym})
      for (int k = 1; k <= n; ++k)
        for (int t = 0; t < 5; ++t) {
          const auto lambda = uniform(rng, n, -2, 2);
          const auto x = uniform(rng, n, 0, 1);
          const double e1 = sigma_k_relative_error(s, lambda, x, k, h);
          const double e2 = sigma_k_relative_error(s, lambda, x, k, h / 2);
          const double ratio = e1 / e2;
          worst_err = std::max(worst_err, e1);
          min_ratio = std::min(min_ratio, ratio);
          max_ratio = std::max(max_ratio, ratio);
          pass = pass && e1 <= 1e-3 && ratio >= 3.5 && ratio <= 4.5;
          ++cases;
        }
  return {pass, format("n=2,3, all k, E+ and E-, %d cases: max rel err %.2e (tol 1e-3), halving ratio in [%.4f, %.4f] "
                       "(need [3.5, 4.5])",
                       cases, worst_err, min_ratio, max_ratio)};
}

// 8 ----------------------------------------------------------------------------
Outcome hermite_eigenfunctions() {
  const PhaseCalibration cal = calibrate_phase(0.3, TruncationBox{6.0, 2000});
  double residual = 0.0;
  bool fourth = true;
  for (int m = 0; m < 4; ++m) {
    residual = std::max(residual, cal.residual[m]);
    const Complex p = cal.phase[m];
    fourth = fourth && p * p * p * p == Complex(1.0, 0.0);
  }

  std::mt19937_64 rng(113);
  std::vector<Vector> sample;
  for (int i = 0; i < 20; ++i) {
    auto l = uniform(rng, 2, -1.5, 1.5);
    std::sort(l.rbegin(), l.rend());
    sample.push_back(l);
  }
  double eigen = 0.0;
  int indices = 0;
  for (Symmetry s : {Symmetry::sym, Symmetry::anti})
    for (const auto& m : dominant_weights(2, 0, 4, s)) {
      eigen = std::max(eigen, eigen_check(HermiteIndex(m, s), sample));
      ++indices;
    }

  double cross = 0.0;
  const TruncationBox box{6.0, 400};
  const std::vector<Vector> probes{{0.7, -0.4}, {0.25, 0.1}};
  for (Symmetry s : {Symmetry::sym, Symmetry::anti})
    for (const auto& m : dominant_weights(2, 0, 3, s)) {
      const HermiteIndex idx(m, s);
      auto f = [&](std::span<const double> x) { return hermite_eigenfunction(idx, x); };
      for (const auto& lambda : probes) {
        const Complex analytic = transform_hermite_analytic(idx, lambda);
        cross = std::max(cross, std::abs(transform_numeric(f, lambda, s, box) - analytic) / std::max(1.0, std::abs(analytic)));
      }
    }
  const bool pass = residual <= 1e-8 && fourth && eigen <= 1e-12 && cross <= 1e-6;
  return {pass, format("phase (1, i, -1, -i) residual %.1e (tol 1e-8), phase^4 = 1 %s, eigen_check over %d indices %.1e "
                       "(tol 1e-12), 2D quadrature vs analytic %.1e (tol 1e-6)",
                       residual, fourth ? "exact" : "FAILED", indices, eigen, cross)};
}

// 9 ----------------------------------------------------------------------------
Outcome symmetry_invariants() {
  std::mt19937_64 rng(127);
  std::uniform_int_distribution<int> pick_n(2, 5);
  int assertions = 0, failures = 0;
  auto check = [&](Complex a, Complex b) {
    ++assertions;
    if (std::abs(a - b) > 1e-10 * std::max(1.0, std::abs(b))) ++failures;
  };
  constexpr double tau = 2 * std::numbers::pi;
  for (int round = 0; assertions < 1000; ++round) {
    const int n = pick_n(rng);
    const auto lambda = uniform(rng, n, -2, 2);
    const auto x = uniform(rng, n, 0, 1);
    const Symmetry s = round % 2 ? Symmetry::sym : Symmetry::anti;
    const double sgn_s = s == Symmetry::anti ? 1.0 : 0.0;
    const Complex base = eval(s, lambda, x);

    const auto& perms = permutations(n);
    const Permutation& w = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
    const double dw = s == Symmetry::anti ? w.sign() : 1.0;
    check(eval(s, lambda, w.apply(x)), dw * base);
    check(eval(s, w.apply(lambda), x), dw * base);

    const double a = uniform(rng, 1, -1, 1)[0];
    double total = 0.0;
    for (double v : lambda) total += v;
    auto xa = x;
    for (double& v : xa) v += a;
    check(eval(s, lambda, xa), std::polar(1.0, tau * total * a) * base);

    auto x0 = x;
    double mean = 0.0;
    for (double v : x0) mean += v / n;
    for (double& v : x0) v -= mean;
    auto shifted = lambda;
    const double nu = uniform(rng, 1, -3, 3)[0];
    for (double& v : shifted) v += nu;
    check(eval(s, shifted, x0), eval(s, lambda, x0));

    const double c = uniform(rng, 1, 0.2, 3)[0];
    auto cl = lambda, cx = x;
    for (double& v : cl) v *= c;
    for (double& v : cx) v *= c;
    check(eval(s, cl, x), eval(s, lambda, cx));
    check(base, eval(s, x, lambda));

    std::vector<double> flipped(lambda.rbegin(), lambda.rend());
    for (double& v : flipped) v = -v;
    const double conj_sign = s == Symmetry::sym ? 1.0 : ((n % 4 == 0 || n % 4 == 1) ? 1.0 : -1.0);
    check(base, conj_sign * std::conj(eval(s, flipped, x)));

    auto wall = x;
    const int i = std::uniform_int_distribution<int>(0, n - 2)(rng);
    wall[i + 1] = wall[i];
    if (sgn_s > 0) check(eval(s, lambda, wall), 0.0);
  }
  return {failures == 0, format("%d assertions (permutation, translation, shift, scaling, duality, conjugation, "
                                "boundary), %d failures at 1e-10",
                                assertions, failures)};
}

// 10 ---------------------------------------------------------------------------
Outcome performance() {
  std::mt19937_64 rng(131);
  const auto lambda = uniform(rng, 8, -2, 2);
  const auto x = uniform(rng, 8, 0, 1);
  auto median = [&](EvalMethod m) {
    std::vector<double> t(100);
    volatile double sink = 0.0;
    for (double& e : t) {
      const auto t0 = Clock::now();
      sink = sink + std::abs(eval_antisym(lambda, x, m));
      e = seconds_since(t0);
    }
    std::sort(t.begin(), t.end());
    return 0.5 * (t[49] + t[50]);
  };
  const double naive = median(EvalMethod::naive_sum);
  const double fast = median(EvalMethod::fast);
  const double ratio = naive / fast;
  return {ratio >= 100.0, format("n=8 E-: naive %.3e s, fast %.3e s, speedup %.0fx (need >= 100x)", naive, fast, ratio)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"discrete antisymmetric orthogonality", discrete_antisymmetric_orthogonality},
      {"discrete symmetric orthogonality", discrete_symmetric_orthogonality},
      {"AMDFT/SMDFT round trips", discrete_round_trips},
      {"continuous orthogonality", continuous_orthogonality},
      {"special cases", special_cases},
      {"differential eigenrelations", differential_eigenrelations},
      {"Hermite phase and eigenfunctions", hermite_eigenfunctions},
      {"symmetry invariants", symmetry_invariants},
      {"performance", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
