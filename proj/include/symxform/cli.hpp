#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffops.hpp"
#include "discrete_ft.hpp"
#include "errors.hpp"
#include "expfun.hpp"
#include "fourier_series.hpp"
#include "hermite.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "symgroup.hpp"

namespace symxform::cli {

enum class ToleranceMode { absolute, relative };

/// One comparison. Relative checks divide by max(|expected|, 1).
struct Check {
  std::string name;
  Complex expected;
  Complex observed;
  double tolerance = 0.0;
  ToleranceMode mode = ToleranceMode::absolute;

  double error() const {
    const double d = std::abs(observed - expected);
    return mode == ToleranceMode::relative ? d / std::max(std::abs(expected), 1.0) : d;
  }
  bool pass() const { return error() <= tolerance; }
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, Complex expected, Complex observed, double tolerance,
           ToleranceMode mode = ToleranceMode::absolute) {
    checks.push_back({std::move(name), expected, observed, tolerance, mode});
  }

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); }));
  }
  bool all_pass() const { return passed() == checks.size(); }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name},
                     {"expected", {{"re", c.expected.real()}, {"im", c.expected.imag()}}},
                     {"observed", {{"re", c.observed.real()}, {"im", c.observed.imag()}}},
                     {"error", c.error()},
                     {"tolerance", c.tolerance},
                     {"mode", c.mode == ToleranceMode::relative ? "relative" : "absolute"},
                     {"pass", c.pass()}});
    return {{"suite", suite}, {"checks", arr}, {"passed", passed()}, {"total", checks.size()}, {"pass", all_pass()}};
  }

  void print(std::ostream& os) const {
    const auto flags = os.flags();
    os << std::setprecision(6);
    for (const auto& c : checks) {
      os << (c.pass() ? "PASS " : "FAIL ") << c.name << "  expected=" << c.expected.real() << (c.expected.imag() < 0 ? "" : "+")
         << c.expected.imag() << "i observed=" << c.observed.real() << (c.observed.imag() < 0 ? "" : "+")
         << c.observed.imag() << "i error=" << c.error() << " tol=" << c.tolerance
         << (c.mode == ToleranceMode::relative ? " (rel)" : " (abs)") << '\n';
    }
    os << suite << ": " << passed() << '/' << checks.size() << " checks passed\n";
    os.flags(flags);
  }
};

struct Options {
  bool sym = false;
  bool anti = false;
  bool json = false;
  bool forward = false;
  bool inverse = false;
  std::vector<double> lambda;
  std::vector<double> x;
  std::string method = "fast";
  std::optional<int> N;
  std::optional<int> n;
  std::optional<int> M;
  std::optional<double> L;
  std::optional<double> tol;
  std::uint64_t seed = 20240601;
  int reps = 11;
  std::string in;
  std::string out;
  std::string suite;
};

/// Bad flag combinations and unreadable files; reported as exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline Symmetry symmetry_of(const Options& o, bool required = true, Symmetry fallback = Symmetry::anti) {
  if (o.sym) return Symmetry::sym;
  if (o.anti) return Symmetry::anti;
  if (required) throw UsageError("one of --sym or --anti is required");
  return fallback;
}

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

inline std::ifstream open_in(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return f;
}

/// Writes to --out when given, otherwise to `fallback`.
template <class Writer>
void emit(const Options& o, std::ostream& fallback, Writer&& write) {
  if (o.out.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  write(f);
}

inline void print_value(std::ostream& out, Complex v, bool json) {
  if (json)
    out << nlohmann::json{{"re", v.real()}, {"im", v.imag()}}.dump() << '\n';
  else
    out << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
}

inline int grid_index(double v, int M) {
  const double scaled = v * M;
  const double r = std::round(scaled);
  if (std::abs(scaled - r) > 1e-9) throw FormatError("coordinate " + format_double(v) + " is not a torus grid node");
  return static_cast<int>(((static_cast<long long>(r) % M) + M) % M);
}

/// Reorders CSV rows to TorusGrid::point order.
inline std::vector<Complex> torus_values(const std::vector<SampleRow>& rows, const TorusGrid& grid) {
  const int n = grid.dimension();
  const int M = grid.points_per_axis();
  std::vector<Complex> values(grid.size());
  std::vector<char> seen(grid.size(), 0);
  for (const auto& r : rows) {
    if (static_cast<int>(r.x.size()) != n) throw ShapeError("sample dimension differs from --n");
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * static_cast<std::size_t>(M) + static_cast<std::size_t>(grid_index(r.x[i], M));
    if (seen[idx]) throw FormatError("duplicate torus node in samples");
    seen[idx] = 1;
    values[idx] = r.value;
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0)
    throw ShapeError("samples do not cover all " + std::to_string(grid.size()) + " torus nodes");
  return values;
}

inline IntWeight integer_point(const Point& x) {
  IntWeight k(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = std::round(x[i]);
    if (r != x[i]) throw FormatError("discrete grid coordinates must be integer numerators");
    k[i] = static_cast<int>(r);
  }
  return k;
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& e : v) e = dist(rng);
  return v;
}

inline std::vector<Complex> random_complex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (Complex& e : v) e = Complex(dist(rng), dist(rng));
  return v;
}

inline std::string weight_name(const IntWeight& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

// ---- verbs -----------------------------------------------------------------

inline int cmd_eval(const Options& o, std::ostream& out) {
  const Symmetry s = symmetry_of(o);
  if (o.lambda.empty() || o.x.empty()) throw UsageError("--lambda and --x are required");
  if (o.method != "fast" && o.method != "naive") throw UsageError("--method must be fast or naive");
  const EvalMethod m = o.method == "naive" ? EvalMethod::naive_sum : EvalMethod::fast;
  print_value(out, eval(s, o.lambda, o.x, m), o.json);
  return 0;
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
  const Symmetry s = symmetry_of(o);
  const int n = require(o.n, "--n");
  const int M = require(o.M, "--M");
  auto in = open_in(o.in);
  const TorusGrid grid(M, n);
  const std::vector<Complex> values = torus_values(read_samples_csv(in), grid);
  const int K = (M - 1) / 2;
  const CoefficientMap coeffs = analyze_samples(values, s, dominant_weights(n, -K, K, s), grid);
  emit(o, out, [&](std::ostream& os) { write_coefficients(os, records_of(coeffs)); });
  return 0;
}

inline int cmd_synthesize(const Options& o, std::ostream& out) {
  const Symmetry s = symmetry_of(o);
  auto in = open_in(o.in);
  const CoefficientMap coeffs = map_of(read_coefficients(in), s);
  if (!o.x.empty()) {
    if (!coeffs.empty() && coeffs.begin()->first.size() != o.x.size())
      throw ShapeError("--x length differs from coefficient key length");
    print_value(out, synthesize(coeffs, o.x), o.json);
    return 0;
  }
  const int M = require(o.M, "--M (or --x)");
  int n = o.n.value_or(0);
  if (!coeffs.empty()) n = static_cast<int>(coeffs.begin()->first.size());
  if (n < 1) throw UsageError("--n is required for an empty coefficient set");
  const TorusGrid grid(M, n);
  std::vector<SampleRow> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rows[i].x = grid.point(i);
    rows[i].value = synthesize(coeffs, rows[i].x);
  }
  emit(o, out, [&](std::ostream& os) { write_samples_csv(os, rows, false); });
  return 0;
}

inline int cmd_dft(const Options& o, std::ostream& out) {
  const Symmetry s = symmetry_of(o);
  if (o.forward == o.inverse) throw UsageError("exactly one of --forward or --inverse is required");
  const int N = require(o.N, "--N");
  const int n = require(o.n, "--n");
  auto in = open_in(o.in);
  const DiscreteTransform t(N, n, s);
  const auto& points = t.grid().points;
  const auto& weights = t.spectrum().weights;

  if (o.forward) {
    std::map<IntWeight, std::size_t> where;
    for (std::size_t i = 0; i < points.size(); ++i) where[points[i]] = i;
    std::vector<Complex> values(points.size());
    std::vector<char> seen(points.size(), 0);
    const auto rows = read_samples_csv(in);
    for (const auto& r : rows) {
      auto it = where.find(integer_point(r.x));
      if (it == where.end()) throw ShapeError("sample point is not on the ordered grid");
      if (seen[it->second]) throw FormatError("duplicate grid point in samples");
      seen[it->second] = 1;
      values[it->second] = r.value;
    }
    if (rows.size() != points.size())
      throw ShapeError("expected " + std::to_string(points.size()) + " samples, got " + std::to_string(rows.size()));
    const auto coeffs = t.forward(values);
    std::vector<CoefficientRecord> records;
    for (std::size_t m = 0; m < weights.size(); ++m) records.push_back({weights[m], coeffs[m]});
    emit(o, out, [&](std::ostream& os) { write_coefficients(os, records); });
    return 0;
  }

  std::map<IntWeight, std::size_t> where;
  for (std::size_t i = 0; i < weights.size(); ++i) where[weights[i]] = i;
  std::vector<Complex> coeffs(weights.size());
  std::vector<char> seen(weights.size(), 0);
  const auto records = read_coefficients(in);
  for (const auto& r : records) {
    auto it = where.find(r.m);
    if (it == where.end()) throw ShapeError("coefficient key " + weight_name(r.m) + " is not in the spectrum");
    if (seen[it->second]) throw FormatError("duplicate coefficient key");
    seen[it->second] = 1;
    coeffs[it->second] = r.value;
  }
  if (records.size() != weights.size())
    throw ShapeError("expected " + std::to_string(weights.size()) + " coefficients, got " +
                     std::to_string(records.size()));
  const auto values = t.inverse(coeffs);
  std::vector<SampleRow> rows(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    rows[i].x.assign(points[i].begin(), points[i].end());
    rows[i].value = values[i];
  }
  emit(o, out, [&](std::ostream& os) { write_samples_csv(os, rows, true); });
  return 0;
}

// ---- verify suites -----------------------------------------------------------

inline Report suite_orthogonality(const Options& o) {
  const Symmetry s = symmetry_of(o, false);
  const int N = o.N.value_or(4);
  const int n = o.n.value_or(2);
  const double tol = o.tol.value_or(1e-12);
  const DiscreteTransform t(N, n, s);
  const auto g = t.gram();
  const auto& w = t.spectrum().weights;
  Report r{"orthogonality", {}};
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < w.size(); ++b) {
      const double diag = s == Symmetry::anti ? 1.0 : static_cast<double>(stabilizer_order(w[a]));
      r.add("G" + weight_name(w[a]) + weight_name(w[b]), a == b ? diag : 0.0, g(a, b), tol);
    }
  return r;
}

inline Report suite_laplace(const Options& o) {
  std::mt19937_64 rng(o.seed);
  const double tol = o.tol.value_or(1e-3);
  std::vector<int> dims;
  if (o.n)
    dims.push_back(*o.n);
  else
    dims = {2, 3};
  std::vector<Symmetry> classes;
  if (o.sym || o.anti)
    classes.push_back(symmetry_of(o));
  else
    classes = {Symmetry::anti, Symmetry::sym};
  const double h = 1e-3;
  Report r{"laplace", {}};
  for (int n : dims) {
    if (n < 1 || n > 4) throw UsageError("laplace suite supports 1 <= n <= 4");
    for (Symmetry s : classes) {
      const auto lambda = random_vector(rng, static_cast<std::size_t>(n), -2.0, 2.0);
      const auto x = random_vector(rng, static_cast<std::size_t>(n), 0.0, 1.0);
      for (int k = 1; k <= n; ++k) {
        const std::string tag = std::string(s == Symmetry::anti ? "anti" : "sym") + " n=" + std::to_string(n) +
                                " k=" + std::to_string(k);
        const double e1 = sigma_k_relative_error(s, lambda, x, k, h);
        const double e2 = sigma_k_relative_error(s, lambda, x, k, h / 2);
        r.add(tag + " relative error", 0.0, e1, tol);
        r.add(tag + " halving ratio", 4.0, e1 / e2, 0.5);
      }
    }
  }
  return r;
}

inline Report suite_hermite(const Options& o) {
  Report r{"hermite", {}};
  const PhaseCalibration& cal = phase_calibration();
  for (int m = 0; m < 4; ++m) {
    r.add("phase(" + std::to_string(m) + ") residual", 0.0, cal.residual[m], 1e-8);
    const Complex p = cal.phase[m];
    r.add("phase(" + std::to_string(m) + ")^4", 1.0, p * p * p * p, 0.0);
  }
  const double tol = o.tol.value_or(1e-12);
  std::mt19937_64 rng(o.seed);
  for (Symmetry s : {Symmetry::sym, Symmetry::anti}) {
    for (const IntWeight& m : dominant_weights(2, 0, 4, s)) {
      std::vector<Vector> sample;
      for (int i = 0; i < 5; ++i) {
        Vector lam = random_vector(rng, 2, -1.5, 1.5);
        std::sort(lam.begin(), lam.end(), std::greater<>());
        sample.push_back(lam);
      }
      const HermiteIndex idx(m, s);
      r.add(std::string(s == Symmetry::sym ? "sym " : "anti ") + weight_name(m) + " eigen_check", 0.0,
            eigen_check(idx, sample), tol);
    }
  }
  const TruncationBox box{o.L.value_or(6.0), o.M.value_or(400)};
  const Vector lambda{0.7, -0.4};
  for (Symmetry s : {Symmetry::sym, Symmetry::anti}) {
    for (const IntWeight& m : dominant_weights(2, 0, 2, s)) {
      const HermiteIndex idx(m, s);
      auto f = [&](std::span<const double> x) { return hermite_eigenfunction(idx, x); };
      const Complex analytic = transform_hermite_analytic(idx, lambda);
      const Complex numeric = transform_numeric(f, lambda, s, box);
      r.add(std::string(s == Symmetry::sym ? "sym " : "anti ") + weight_name(m) + " numeric vs analytic", analytic,
            numeric, 1e-6);
    }
  }
  return r;
}

inline Report suite_roundtrip(const Options& o) {
  std::mt19937_64 rng(o.seed);
  const double tol = o.tol.value_or(1e-10);
  std::vector<std::pair<int, int>> cases;
  if (o.N || o.n)
    cases.emplace_back(o.N.value_or(4), o.n.value_or(2));
  else
    cases = {{4, 2}, {5, 2}, {5, 3}, {8, 3}};
  Report r{"roundtrip", {}};
  for (Symmetry s : {Symmetry::anti, Symmetry::sym}) {
    if ((o.sym || o.anti) && s != symmetry_of(o)) continue;
    for (auto [N, n] : cases) {
      const DiscreteTransform t(N, n, s);
      double worst = 0.0;
      for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_complex(rng, t.grid().size());
        const auto back = t.inverse(t.forward(f));
        for (std::size_t i = 0; i < f.size(); ++i) worst = std::max(worst, std::abs(back[i] - f[i]));
      }
      r.add(std::string(s == Symmetry::anti ? "amdft" : "smdft") + " N=" + std::to_string(N) +
                " n=" + std::to_string(n) + " max error",
            0.0, worst, tol);
    }
  }
  return r;
}

inline Report suite_special(const Options& o) {
  std::mt19937_64 rng(o.seed);
  const double tol = o.tol.value_or(1e-12);
  std::vector<int> dims;
  if (o.n)
    dims.push_back(*o.n);
  else
    dims = {2, 3, 4, 5};
  Report r{"special-cases", {}};
  for (int n : dims) {
    if (n < 2) throw UsageError("special cases need n >= 2");
    const Vector rm = rho(n), rp = rho_prime(n);
    double worst_minus = 0.0, worst_plus = 0.0, worst_prime = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto x = random_vector(rng, static_cast<std::size_t>(n), 0.0, 1.0);
      auto rel = [](Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1.0); };
      worst_minus = std::max(worst_minus, rel(eval_special(x, SpecialKind::rho_minus), eval_antisym(rm, x)));
      worst_plus = std::max(worst_plus, rel(eval_special(x, SpecialKind::rho_plus), eval_sym(rm, x)));
      worst_prime = std::max(worst_prime, rel(eval_special(x, SpecialKind::rho_prime), eval_antisym(rp, x)));
    }
    const std::string tag = "n=" + std::to_string(n);
    r.add(tag + " sine product vs E-_rho, max scaled deviation", 0.0, worst_minus, tol);
    r.add(tag + " cosine product vs E+_rho, max scaled deviation", 0.0, worst_plus, tol);
    r.add(tag + " Vandermonde product vs E-_rho', max scaled deviation", 0.0, worst_prime, tol);
  }
  return r;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  Report r;
  if (o.suite == "orthogonality")
    r = suite_orthogonality(o);
  else if (o.suite == "laplace")
    r = suite_laplace(o);
  else if (o.suite == "hermite")
    r = suite_hermite(o);
  else if (o.suite == "roundtrip")
    r = suite_roundtrip(o);
  else if (o.suite == "special-cases")
    r = suite_special(o);
  else
    throw UsageError("unknown suite '" + o.suite + "'");
  if (o.json)
    out << r.to_json().dump(2) << '\n';
  else
    r.print(out);
  return r.all_pass() ? 0 : 1;
}

// ---- bench -------------------------------------------------------------------

template <class Fn>
double median_seconds(int reps, Fn&& fn) {
  std::vector<double> t(static_cast<std::size_t>(reps));
  volatile double sink = 0.0;
  for (double& e : t) {
    const auto start = std::chrono::steady_clock::now();
    sink = sink + std::abs(fn());
    e = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

inline int cmd_bench(const Options& o, std::ostream& out) {
  if (o.reps < 1) throw UsageError("--reps must be positive");
  std::mt19937_64 rng(o.seed);
  struct Case {
    Symmetry s;
    int n;
  };
  const std::vector<Case> cases = {{Symmetry::anti, 6}, {Symmetry::anti, 8}, {Symmetry::sym, 6},
                                   {Symmetry::sym, 8},  {Symmetry::sym, 10}};
  nlohmann::json rows = nlohmann::json::array();
  for (const Case& c : cases) {
    const auto lambda = random_vector(rng, static_cast<std::size_t>(c.n), -2.0, 2.0);
    const auto x = random_vector(rng, static_cast<std::size_t>(c.n), 0.0, 1.0);
    const double naive = median_seconds(o.reps, [&] { return eval(c.s, lambda, x, EvalMethod::naive_sum); });
    const double fast = median_seconds(o.reps, [&] { return eval(c.s, lambda, x, EvalMethod::fast); });
    rows.push_back({{"function", c.s == Symmetry::anti ? "eval_antisym" : "eval_sym"},
                    {"n", c.n},
                    {"repetitions", o.reps},
                    {"naive_median_s", naive},
                    {"fast_median_s", fast},
                    {"ratio", fast > 0.0 ? naive / fast : 0.0}});
  }
  out << nlohmann::json{{"benchmarks", rows}, {"seed", o.seed}}.dump(2) << '\n';
  return 0;
}

inline void add_symmetry_flags(CLI::App* cmd, Options& o) {
  auto* s = cmd->add_flag("--sym", o.sym, "symmetric class (E+)");
  auto* a = cmd->add_flag("--anti", o.anti, "antisymmetric class (E-)");
  s->excludes(a);
}

}  // namespace detail

/// Entry point shared by the symxform binary and the tests.
/// Exit codes: 0 success, 1 a verification check failed, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric and antisymmetric multivariate exponential functions and transforms", "symxform"};
  app.require_subcommand(1);
  Options o;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate E+ or E- at one point");
  detail::add_symmetry_flags(eval_cmd, o);
  eval_cmd->add_option("--lambda", o.lambda, "weight, comma separated")->delimiter(',');
  eval_cmd->add_option("--x", o.x, "point, comma separated")->delimiter(',');
  eval_cmd->add_option("--method", o.method, "fast or naive");
  eval_cmd->add_flag("--json", o.json, "JSON output");

  auto* analyze_cmd = app.add_subcommand("analyze", "Fourier coefficients of torus-grid samples");
  detail::add_symmetry_flags(analyze_cmd, o);
  analyze_cmd->add_option("--n", o.n, "dimension");
  analyze_cmd->add_option("--M", o.M, "torus points per axis");
  analyze_cmd->add_option("--in", o.in, "sample CSV");
  analyze_cmd->add_option("--out", o.out, "coefficient JSON (default stdout)");

  auto* synth_cmd = app.add_subcommand("synthesize", "evaluate a coefficient series");
  detail::add_symmetry_flags(synth_cmd, o);
  synth_cmd->add_option("--in", o.in, "coefficient JSON");
  synth_cmd->add_option("--x", o.x, "single point, comma separated")->delimiter(',');
  synth_cmd->add_option("--n", o.n, "dimension for an empty series");
  synth_cmd->add_option("--M", o.M, "sample on the torus grid with M points per axis");
  synth_cmd->add_option("--out", o.out, "sample CSV (default stdout)");
  synth_cmd->add_flag("--json", o.json, "JSON output for --x");

  auto* dft_cmd = app.add_subcommand("dft", "AMDFT (--anti) or SMDFT (--sym)");
  detail::add_symmetry_flags(dft_cmd, o);
  auto* fwd = dft_cmd->add_flag("--forward", o.forward, "samples -> coefficients");
  auto* inv = dft_cmd->add_flag("--inverse", o.inverse, "coefficients -> samples");
  fwd->excludes(inv);
  dft_cmd->add_option("--N", o.N, "grid resolution");
  dft_cmd->add_option("--n", o.n, "dimension");
  dft_cmd->add_option("--in", o.in, "input file");
  dft_cmd->add_option("--out", o.out, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  detail::add_symmetry_flags(verify_cmd, o);
  verify_cmd->add_option("--suite", o.suite, "orthogonality, laplace, hermite, roundtrip or special-cases")
      ->required()
      ->check(CLI::IsMember({"orthogonality", "laplace", "hermite", "roundtrip", "special-cases"}));
  verify_cmd->add_option("--N", o.N, "grid resolution");
  verify_cmd->add_option("--n", o.n, "dimension");
  verify_cmd->add_option("--M", o.M, "quadrature points per axis");
  verify_cmd->add_option("--L", o.L, "truncation half-width");
  verify_cmd->add_option("--tol", o.tol, "override the suite tolerance");
  verify_cmd->add_option("--seed", o.seed, "seed for random inputs");
  verify_cmd->add_flag("--json", o.json, "JSON report");

  auto* bench_cmd = app.add_subcommand("bench", "naive vs fast evaluation timings (JSON)");
  bench_cmd->add_option("--seed", o.seed, "seed for random inputs");
  bench_cmd->add_option("--reps", o.reps, "timed evaluations per case");
  bench_cmd->add_flag("--json", o.json, "accepted for symmetry; output is always JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "symxform: " << e.what() << '\n';
    return 2;
  }

  try {
    if (eval_cmd->parsed()) return detail::cmd_eval(o, out);
    if (analyze_cmd->parsed()) return detail::cmd_analyze(o, out);
    if (synth_cmd->parsed()) return detail::cmd_synthesize(o, out);
    if (dft_cmd->parsed()) return detail::cmd_dft(o, out);
    if (verify_cmd->parsed()) return detail::cmd_verify(o, out);
    if (bench_cmd->parsed()) return detail::cmd_bench(o, out);
  } catch (const Error& e) {
    err << "symxform: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace symxform::cli
