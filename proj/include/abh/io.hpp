#pragma once

// File formats: boundary data as CSV (theta, Re f[, Im f]) or as a JSON
// coefficient map, Expansion and report JSON, and locale-free CSV output.

#include <iosfwd>
#include <string>
#include <vector>

#include "abh/boundary.hpp"
#include "abh/extension.hpp"
#include "abh/hardy.hpp"
#include "json.hpp"

namespace abh {

using json = nlohmann::json;

/// "%.17g"; infinities print as "inf"/"-inf", NaN as "nan".
std::string format_double(double x);

/// CSV rows of (theta, Re[, Im]); an optional non-numeric header line is
/// skipped. theta must be the uniform grid 2 pi j / N (to 1e-9) with N a
/// power of two >= 4. ParseError on malformed input.
BoundaryFunction read_boundary_csv(std::istream& in);

/// {"k": [re, im], ...}; plain numbers are accepted as real coefficients.
TrigPolynomial trig_from_json(const json& j);
json trig_to_json(const TrigPolynomial& p);

/// .json files hold a coefficient map (exact data), anything else is CSV.
/// n is the sample count used for exact data.
BoundaryFunction read_boundary_file(const std::string& path,
                                    std::size_t n = kDefaultSamples);

json expansion_to_json(const Expansion& e);
Expansion expansion_from_json(const json& j);

/// {case, params, p, radii, lhs, rhs, slack, pass}; infinities become
/// the string "inf".
json report_to_json(const BoundReport& r);

/// Comma-separated line of 17-digit numbers terminated by '\n'.
void write_csv_row(std::ostream& out, const std::vector<double>& row);
void write_csv_header(std::ostream& out, const std::vector<std::string>& names);

}  // namespace abh
