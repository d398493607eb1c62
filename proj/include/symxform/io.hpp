#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "expfun.hpp"
#include "fourier_series.hpp"
#include "symgroup.hpp"

namespace symxform {

struct CoefficientRecord {
  IntWeight m;
  Complex value;
};

struct SampleRow {
  Point x;
  Complex value;
};

inline std::vector<CoefficientRecord> records_of(const CoefficientMap& map) {
  std::vector<CoefficientRecord> out;
  out.reserve(map.size());
  for (const auto& [m, c] : map) out.push_back({m, c});
  return out;
}

inline CoefficientMap map_of(const std::vector<CoefficientRecord>& records, Symmetry symmetry) {
  CoefficientMap map(symmetry);
  for (const auto& r : records) map.set(r.m, r.value);
  return map;
}

/// [{"m": [...], "re": x, "im": y}, ...]
inline nlohmann::json coefficients_to_json(const std::vector<CoefficientRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) arr.push_back({{"m", r.m}, {"re", r.value.real()}, {"im", r.value.imag()}});
  return arr;
}

inline std::vector<CoefficientRecord> coefficients_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw FormatError("coefficient file must hold a JSON array");
  std::vector<CoefficientRecord> out;
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("m") || !rec.contains("re") || !rec.contains("im"))
      throw FormatError("coefficient record needs fields m, re, im");
    const auto& m = rec.at("m");
    if (!m.is_array() || m.empty()) throw FormatError("coefficient key m must be a non-empty integer array");
    CoefficientRecord r;
    for (const auto& v : m) {
      if (!v.is_number_integer()) throw FormatError("coefficient key entries must be integers");
      r.m.push_back(v.get<int>());
    }
    if (!rec.at("re").is_number() || !rec.at("im").is_number())
      throw FormatError("re and im must be numbers");
    r.value = Complex(rec.at("re").get<double>(), rec.at("im").get<double>());
    out.push_back(std::move(r));
  }
  return out;
}

inline void write_coefficients(std::ostream& os, const std::vector<CoefficientRecord>& records) {
  os << coefficients_to_json(records).dump(2) << '\n';
}

inline std::vector<CoefficientRecord> read_coefficients(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return coefficients_from_json(j);
}

/// Header x1,...,xn,re,im then one row per sample. With `integer_coordinates`
/// the coordinates are written as integers (numerators over a separate N).
inline void write_samples_csv(std::ostream& os, const std::vector<SampleRow>& rows, bool integer_coordinates) {
  const std::size_t n = rows.empty() ? 0 : rows.front().x.size();
  for (std::size_t i = 0; i < n; ++i) os << 'x' << (i + 1) << ',';
  os << "re,im\n";
  std::ostringstream line;
  line.precision(17);
  for (const auto& r : rows) {
    line.str("");
    for (double v : r.x) {
      if (integer_coordinates)
        line << static_cast<long long>(std::llround(v)) << ',';
      else
        line << v << ',';
    }
    line << r.value.real() << ',' << r.value.imag() << '\n';
    os << line.str();
  }
}

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline double parse_cell(const std::string& cell, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("line " + std::to_string(line_no) + ": not a number: '" + cell + "'");
  }
}

}  // namespace detail

inline std::vector<SampleRow> read_samples_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty sample file");
  const auto header = detail::split_csv(line);
  if (header.size() < 3 || header[header.size() - 2] != "re" || header.back() != "im")
    throw FormatError("sample header must read x1,...,xn,re,im");
  const std::size_t n = header.size() - 2;
  for (std::size_t i = 0; i < n; ++i)
    if (header[i] != "x" + std::to_string(i + 1)) throw FormatError("sample header must read x1,...,xn,re,im");

  std::vector<SampleRow> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = detail::split_csv(line);
    if (cells.size() != n + 2) throw FormatError("line " + std::to_string(line_no) + ": expected " +
                                                 std::to_string(n + 2) + " columns");
    SampleRow r;
    r.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.x[i] = detail::parse_cell(cells[i], line_no);
    r.value = Complex(detail::parse_cell(cells[n], line_no), detail::parse_cell(cells[n + 1], line_no));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace symxform
