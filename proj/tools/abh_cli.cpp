// abh: evaluate (alpha,beta)-harmonic extensions, Hardy scans and the theorem
// suite from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abh/boundary.hpp"
#include "abh/corpus.hpp"
#include "abh/errors.hpp"
#include "abh/extension.hpp"
#include "abh/hardy.hpp"
#include "abh/io.hpp"
#include "abh/kernels.hpp"
#include "abh/special_fn.hpp"
#include "abh/verify.hpp"

namespace {

using namespace abh;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  double alpha = 0.0;
  double beta = 0.0;
  bool params_given = false;
  double p = 2.0;
  std::size_t n = kDefaultSamples;
  std::vector<double> radii;
  std::optional<std::string> in;
  std::optional<std::string> out;
  std::string format = "csv";
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> a, b, c;
  std::size_t angles = 8;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_p(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return kInfinity;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("--p must be a number >= 1 or 'inf'");
  }
  if (pos != s.size() || !(v >= 1.0)) throw UsageError("--p must be a number >= 1 or 'inf'");
  return v;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("--radii: '" + item + "' is not a number");
    }
    if (pos != item.size()) throw UsageError("--radii: '" + item + "' is not a number");
    out.push_back(v);
  }
  return out;
}

// Output is assembled in memory and written once all computation is done.
void emit(const RunConfig& cfg, const std::string& text) {
  if (!cfg.out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + *cfg.out + "'");
  f << text;
}

BoundaryFunction boundary_or_default(const RunConfig& cfg) {
  if (cfg.in) return read_boundary_file(*cfg.in, cfg.n);
  return BoundaryFunction::from_polynomial({{1, 1.0}}, cfg.n);
}

int cmd_hypergeom(const RunConfig& cfg) {
  if (cfg.n == 0) throw UsageError("--n must be positive for the hypergeom grid");
  const HypParams hp{cfg.a.value_or(-cfg.alpha), cfg.b.value_or(-cfg.beta), cfg.c.value_or(1.0)};
  const double limit =
      hp.c - hp.a - hp.b > 0.0 ? hyp2f1_at_one(hp) : std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<double>> rows;
  for (std::size_t j = 0; j < cfg.n; ++j) {
    const double x = static_cast<double>(j) / static_cast<double>(cfg.n);
    rows.push_back({x, hyp2f1(hp, x), hyp2f1_derivative(hp, x), euler_transform(hp, x), limit});
  }
  std::ostringstream os;
  if (cfg.format == "json") {
    json j = {{"a", hp.a}, {"b", hp.b}, {"c", hp.c}, {"rows", json::array()}};
    for (const auto& r : rows) {
      j["rows"].push_back({{"x", r[0]}, {"F", r[1]}, {"dF", r[2]}, {"euler", r[3]},
                           {"limit", std::isnan(r[4]) ? json(nullptr) : json(r[4])}});
    }
    os << j.dump(2) << '\n';
  } else {
    write_csv_header(os, {"x", "F", "dF", "euler", "limit"});
    for (const auto& r : rows) write_csv_row(os, r);
  }
  emit(cfg, os.str());
  return kExitPass;
}

int cmd_extend(const RunConfig& cfg) {
  if (!cfg.in) throw UsageError("extend requires --in");
  const Params p(cfg.alpha, cfg.beta);
  p.require_poisson();
  const BoundaryFunction f = read_boundary_file(*cfg.in, cfg.n);
  const Expansion e = coeffs_from_boundary(p, f);
  const std::vector<double> radii = cfg.radii.empty() ? std::vector<double>{0.5, 0.9} : cfg.radii;
  if (cfg.angles == 0) throw UsageError("--angles must be positive");

  std::vector<DiskPoint> points;
  for (double r : radii) {
    for (std::size_t j = 0; j < cfg.angles; ++j) {
      points.push_back(DiskPoint::polar(
          r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(cfg.angles)));
    }
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const DiskPoint& z = points[i];
    const cdouble series = eval_series(e, z);
    const cdouble quad = poisson_extend(p, f, z);
    const cdouble dz = dz_series(e, z);
    const cdouble dzbar = dzbar_series(e, z);
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i % cfg.angles) /
                         static_cast<double>(cfg.angles);
    rows.push_back({radii[i / cfg.angles], theta, series.real(), series.imag(), dz.real(),
                    dz.imag(), dzbar.real(), dzbar.imag(), std::abs(quad - series)});
  }
  const std::vector<std::string> names = {"r", "theta", "re_u", "im_u", "re_dz", "im_dz",
                                          "re_dzbar", "im_dzbar", "disagreement"};
  std::ostringstream os;
  if (cfg.format == "json") {
    json j = {{"expansion", expansion_to_json(e)}, {"points", json::array()}};
    for (const auto& r : rows) {
      json row = json::object();
      for (std::size_t k = 0; k < names.size(); ++k) row[names[k]] = r[k];
      j["points"].push_back(row);
    }
    os << j.dump(2) << '\n';
  } else {
    write_csv_header(os, names);
    for (const auto& r : rows) write_csv_row(os, r);
  }
  emit(cfg, os.str());
  return kExitPass;
}

int cmd_hardy_scan(const RunConfig& cfg) {
  const Params p(cfg.alpha, cfg.beta);
  p.require_poisson();
  const BoundaryFunction f = boundary_or_default(cfg);
  const Expansion e = coeffs_from_boundary(p, f);
  const std::vector<double> radii =
      cfg.radii.empty() ? std::vector<double>{0.5, 0.9, 0.95, 0.99, 0.995, 0.999} : cfg.radii;
  const std::vector<std::pair<std::string, Quantity>> quantities = {
      {"u", Quantity::Value}, {"dz", Quantity::Dz}, {"dzbar", Quantity::Dzbar},
      {"dtheta", Quantity::Dtheta}};
  std::vector<std::pair<std::string, HardyProfile>> profiles;
  for (const auto& [name, q] : quantities) {
    profiles.emplace_back(name, hardy_profile(series_evaluator(e, q), cfg.p, radii, cfg.n));
  }
  std::ostringstream os;
  if (cfg.format == "json") {
    json j = {{"alpha", p.alpha()}, {"beta", p.beta()},
              {"p", std::isinf(cfg.p) ? json("inf") : json(cfg.p)}, {"profiles", json::object()}};
    for (const auto& [name, prof] : profiles) {
      json pj = {{"radii", prof.radii}, {"means", prof.means}};
      if (prof.fit) {
        pj["gamma"] = prof.fit->gamma;
        pj["residual"] = prof.fit->residual;
      }
      j["profiles"][name] = pj;
    }
    os << j.dump(2) << '\n';
  } else {
    write_csv_header(os, {"quantity", "r", "mean", "gamma", "residual"});
    for (const auto& [name, prof] : profiles) {
      const std::string gamma = prof.fit ? format_double(prof.fit->gamma) : "";
      const std::string resid = prof.fit ? format_double(prof.fit->residual) : "";
      for (std::size_t i = 0; i < prof.radii.size(); ++i) {
        os << name << ',' << format_double(prof.radii[i]) << ','
           << format_double(prof.means[i]) << ',' << gamma << ',' << resid << '\n';
      }
    }
  }
  emit(cfg, os.str());
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg) {
  SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.lp = cfg.p;
  if (!cfg.radii.empty()) sc.radii = cfg.radii;
  if (cfg.params_given) {
    sc.params = Params(cfg.alpha, cfg.beta);
    sc.params->require_poisson();
  }
  if (cfg.in) sc.f = read_boundary_file(*cfg.in, cfg.n);
  const SuiteResult res = run_suite(sc);

  std::ostringstream os;
  if (cfg.format == "json") {
    json j = {{"pass", res.all_pass()}, {"checks", json::array()}};
    for (const SuiteLine& l : res.lines) {
      j["checks"].push_back({{"tag", l.tag}, {"name", l.name}, {"status", to_string(l.status)},
                             {"detail", l.detail}, {"data", l.data}});
    }
    os << j.dump(2) << '\n';
  } else {
    for (const SuiteLine& l : res.lines) {
      os << to_string(l.status) << "  [" << l.tag << "] " << l.name << "  " << l.detail << '\n';
    }
    os << (res.all_pass() ? "ALL PASS" : "FAILURES") << '\n';
  }
  emit(cfg, os.str());
  return res.all_pass() ? kExitPass : kExitFail;
}

std::string help_footer() {
  std::string s = "Commands: hypergeom, extend, hardy-scan, verify.\nverify covers:";
  for (const std::string& t : theorem_tags()) s += "\n  " + t;
  s += "\nExit codes: 0 pass, 1 verification failure, 2 usage/domain error.";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(alpha,beta)-harmonic extensions, Hardy means and theorem checks", "abh"};
  app.footer(help_footer());
  RunConfig cfg;
  std::string p_text = "2";
  std::string radii_text;
  std::string in, out;
  double a = 0, b = 0, c = 0;

  app.add_option("--cmd", cfg.command, "hypergeom | extend | hardy-scan | verify")
      ->required()
      ->check(CLI::IsMember({"hypergeom", "extend", "hardy-scan", "verify"}));
  auto* alpha_opt = app.add_option("--alpha", cfg.alpha, "alpha parameter");
  auto* beta_opt = app.add_option("--beta", cfg.beta, "beta parameter");
  app.add_option("--p", p_text, "Lebesgue exponent p >= 1 or 'inf'");
  app.add_option("--n", cfg.n, "boundary samples / circle nodes / grid size");
  app.add_option("--radii", radii_text, "comma-separated radii in [0,1)");
  auto* in_opt = app.add_option("--in", in, "boundary data (.csv samples or .json coefficients)");
  auto* out_opt = app.add_option("--out", out, "output file (default stdout)");
  app.add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", cfg.seed, "seed of the randomized corpus");
  auto* a_opt = app.add_option("--a", a, "hypergeom: a (default -alpha)");
  auto* b_opt = app.add_option("--b", b, "hypergeom: b (default -beta)");
  auto* c_opt = app.add_option("--c", c, "hypergeom: c (default 1)");
  app.add_option("--angles", cfg.angles, "extend: angles per radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.p = parse_p(p_text);
    if (!radii_text.empty()) cfg.radii = parse_list(radii_text);
    cfg.params_given = alpha_opt->count() > 0 || beta_opt->count() > 0;
    if (in_opt->count()) cfg.in = in;
    if (out_opt->count()) cfg.out = out;
    if (a_opt->count()) cfg.a = a;
    if (b_opt->count()) cfg.b = b;
    if (c_opt->count()) cfg.c = c;

    if (cfg.command == "hypergeom") return cmd_hypergeom(cfg);
    if (cfg.command == "extend") return cmd_extend(cfg);
    if (cfg.command == "hardy-scan") return cmd_hardy_scan(cfg);
    return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "abh: " << e.what() << '\n';
  } catch (const abh::Error& e) {
    std::cerr << "abh: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "abh: " << e.what() << '\n';
  }
  return kExitUsage;
}
