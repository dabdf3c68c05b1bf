#include "abh/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "abh/errors.hpp"

namespace abh {

namespace {

bool parse_double(std::string_view s, double& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

json number_or_inf(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

json array_of(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number_or_inf(x));
  return a;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

BoundaryFunction read_boundary_csv(std::istream& in) {
  std::vector<double> thetas;
  std::vector<cdouble> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto fields = split(line, ',');
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 2 or 3 fields");
    }
    double vals[3] = {0.0, 0.0, 0.0};
    bool ok = true;
    for (std::size_t i = 0; i < fields.size(); ++i) ok = ok && parse_double(fields[i], vals[i]);
    if (!ok) {
      if (thetas.empty() && values.empty() && lineno == 1) continue;  // header
      throw ParseError("line " + std::to_string(lineno) + ": malformed number");
    }
    thetas.push_back(vals[0]);
    values.emplace_back(vals[1], vals[2]);
  }
  const std::size_t n = values.size();
  if (n < 4 || (n & (n - 1)) != 0) {
    throw ParseError("boundary CSV needs a power-of-two number (>= 4) of rows");
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double expected = 2.0 * std::numbers::pi * static_cast<double>(j) /
                            static_cast<double>(n);
    if (!(std::abs(thetas[j] - expected) <= 1e-9)) {
      throw ParseError("boundary CSV: theta must be the uniform grid 2 pi j / N (row " +
                       std::to_string(j) + ")");
    }
  }
  return BoundaryFunction::from_samples(std::move(values));
}

TrigPolynomial trig_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("coefficient map must be a JSON object");
  TrigPolynomial out;
  for (const auto& [key, val] : j.items()) {
    int k = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      throw ParseError("coefficient key '" + key + "' is not an integer");
    }
    if (val.is_number()) {
      out.set(k, val.get<double>());
    } else if (val.is_array() && val.size() == 2 && val[0].is_number() &&
               val[1].is_number()) {
      out.set(k, {val[0].get<double>(), val[1].get<double>()});
    } else {
      throw ParseError("coefficient '" + key + "' must be a number or [re, im]");
    }
  }
  return out;
}

json trig_to_json(const TrigPolynomial& p) {
  json j = json::object();
  for (const auto& [k, c] : p.coefficients()) {
    j[std::to_string(k)] = json::array({c.real(), c.imag()});
  }
  return j;
}

BoundaryFunction read_boundary_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (!is_json) return read_boundary_csv(in);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const json& coeffs = j.contains("coeffs") ? j.at("coeffs") : j;
  TrigPolynomial poly = trig_from_json(coeffs);
  while (static_cast<std::size_t>(2 * poly.max_frequency()) >= n) n *= 2;
  return BoundaryFunction::from_polynomial(std::move(poly), n);
}

json expansion_to_json(const Expansion& e) {
  return {{"alpha", e.params.alpha()},
          {"beta", e.params.beta()},
          {"coeffs", trig_to_json(e.coeffs)}};
}

Expansion expansion_from_json(const json& j) {
  try {
    return {Params(j.at("alpha").get<double>(), j.at("beta").get<double>()),
            trig_from_json(j.at("coeffs"))};
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid expansion JSON: ") + e.what());
  }
}

json report_to_json(const BoundReport& r) {
  return {{"case", r.case_name},
          {"params", {{"alpha", r.params.alpha()}, {"beta", r.params.beta()}}},
          {"p", number_or_inf(r.p)},
          {"radii", array_of(r.radii)},
          {"lhs", array_of(r.lhs)},
          {"rhs", array_of(r.rhs)},
          {"slack", array_of(r.slack)},
          {"pass", r.pass}};
}

void write_csv_row(std::ostream& out, const std::vector<double>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << format_double(row[i]);
  }
  out << '\n';
}

void write_csv_header(std::ostream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ',';
    out << names[i];
  }
  out << '\n';
}

}  // namespace abh
