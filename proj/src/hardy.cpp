#include "abh/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "abh/errors.hpp"
#include "abh/parallel.hpp"
#include "abh/special_fn.hpp"

namespace abh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_p(double p, const char* who) {
  if (!(p >= 1.0)) throw DomainError(std::string(who) + ": requires p >= 1");
}

// Boundary norms for exact data are taken on a fine grid so that the sup
// norm of a trigonometric polynomial is not underestimated by the sampling.
double boundary_norm(const BoundaryFunction& f, double p) {
  constexpr std::size_t kFine = 16384;
  if (f.exact() && f.size() < kFine) return lp_norm(f.resampled(kFine), p);
  return lp_norm(f, p);
}

// z u_z, zbar u_zbar and d_theta u: closed-form series for exact data,
// kernel quadrature otherwise.
struct Routes {
  DiskEval zdz;
  DiskEval zbar_dzbar;
  DiskEval dtheta;
};

Routes routes(const Params& p, const BoundaryFunction& f) {
  p.require_poisson();
  if (f.exact()) {
    const Expansion e = coeffs_from_boundary(p, *f.exact());
    return {series_evaluator(e, Quantity::ZDz), series_evaluator(e, Quantity::ZbarDzbar),
            series_evaluator(e, Quantity::Dtheta)};
  }
  return {decomposition_evaluator(p, f, false), decomposition_evaluator(p, f, true),
          poisson_evaluator(p, derivative(f))};
}

void require_radii(const std::vector<double>& radii, const char* who) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0 && radii[i] < 1.0)) {
      throw DomainError(std::string(who) + ": radii must lie in [0,1)");
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw DomainError(std::string(who) + ": radii must be strictly increasing");
    }
  }
}

BoundReport make_report(std::string name, const Params& p, double lp,
                        const std::vector<double>& radii, std::vector<double> lhs,
                        std::vector<double> rhs) {
  BoundReport rep{std::move(name), p, lp, radii, std::move(lhs), std::move(rhs), {}, true};
  rep.slack.resize(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    // An infinite RHS is vacuous; inf - inf must not turn into NaN.
    rep.slack[i] = std::isinf(rep.rhs[i]) ? kInf : rep.rhs[i] - rep.lhs[i];
    if (!(rep.slack[i] >= -kSlackTolerance)) rep.pass = false;
  }
  return rep;
}

std::vector<double> means_over(const DiskEval& u, double lp,
                               const std::vector<double>& radii,
                               std::size_t n = kDefaultSamples) {
  std::vector<double> out;
  out.reserve(radii.size());
  for (double r : radii) out.push_back(hardy_mean(u, lp, r, n));
  return out;
}

}  // namespace

double lp_mean(const std::vector<cdouble>& values, double p) {
  require_p(p, "lp_mean");
  if (values.empty()) throw DomainError("lp_mean: no samples");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cdouble& v : values) m = std::max(m, std::abs(v));
    return m;
  }
  double acc = 0.0;
  for (const cdouble& v : values) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(values.size()), 1.0 / p);
}

double hardy_mean(const DiskEval& u, double p, double r, std::size_t n) {
  require_p(p, "hardy_mean");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("hardy_mean: radius must lie in [0,1)");
  if (n == 0) throw DomainError("hardy_mean: needs at least one node");
  return lp_mean(u.on_circle(r, n), p);
}

ExponentFit growth_exponent(const DiskEval& u, double p, const std::vector<double>& radii,
                            std::size_t n) {
  if (radii.size() < 4) throw DomainError("growth_exponent: needs at least 4 radii");
  for (double r : radii) {
    if (!(r > 0.9 && r < 1.0)) {
      throw DomainError("growth_exponent: radii must lie in (0.9, 1)");
    }
  }
  const std::vector<double> means = means_over(u, p, radii, n);
  if (std::all_of(means.begin(), means.end(), [](double m) { return m < 1e-14; })) {
    throw DegenerateFit("growth_exponent: all means vanish");
  }
  const auto m = static_cast<double>(radii.size());
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    xs.push_back(std::log((1.0 - radii[i]) * (1.0 + radii[i])));
    ys.push_back(std::log(std::max(means[i], std::numeric_limits<double>::min())));
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (my + slope * (xs[i] - mx));
    ss += e * e;
  }
  return {slope, std::sqrt(ss / m)};
}

HardyProfile hardy_profile(const DiskEval& u, double p, std::vector<double> radii,
                           std::size_t n) {
  require_p(p, "hardy_profile");
  require_radii(radii, "hardy_profile");
  HardyProfile prof{p, radii, {}, std::nullopt};
  for (double r : radii) prof.means.push_back(hardy_mean(u, p, r, n));
  std::vector<double> outer;
  for (double r : radii) {
    if (r > 0.9) outer.push_back(r);
  }
  if (outer.size() >= 4) {
    try {
      prof.fit = growth_exponent(u, p, outer, n);
    } catch (const DegenerateFit&) {
      // u vanishes near the circle; no exponent to report.
    }
  }
  return prof;
}

double quasiregularity_constant(const DiskEval& u_dz, const DiskEval& u_dzbar,
                                const std::vector<DiskPoint>& grid) {
  const std::vector<double> ratios = parallel::map<double>(grid.size(), [&](std::size_t i) {
    const double a = std::abs(u_dz(grid[i]));
    const double b = std::abs(u_dzbar(grid[i]));
    const double den = a - b;
    return den > 0.0 ? (a + b) / den : kInf;
  });
  double k = 1.0;
  for (double v : ratios) k = std::max(k, v);
  return k;
}

BoundReport verify_dtheta_bound(const Params& p, const BoundaryFunction& f, double lp,
                                const std::vector<double>& radii) {
  require_p(lp, "verify_dtheta_bound");
  require_radii(radii, "verify_dtheta_bound");
  const Routes r = routes(p, f);
  const double rhs = std::abs(c_alpha_beta(p)) * c_lambda(p.sum() + 1.0) *
                     boundary_norm(derivative(f), lp);
  return make_report("dtheta-bound", p, lp, radii, means_over(r.dtheta, lp, radii),
                     std::vector<double>(radii.size(), rhs));
}

std::vector<BoundReport> verify_dz_bounds(const Params& p, const BoundaryFunction& f,
                                          double lp, const std::vector<double>& radii) {
  require_p(lp, "verify_dz_bounds");
  require_radii(radii, "verify_dz_bounds");
  const Routes r = routes(p, f);
  const double c = std::abs(c_alpha_beta(p));
  const double fdot = boundary_norm(derivative(f), lp);
  const double fn = boundary_norm(f, lp);
  const double data_z = fdot + std::abs(p.beta()) * fn;
  const double data_zbar = fdot + std::abs(p.alpha()) * fn;

  const std::vector<double> lhs_z = means_over(r.zdz, lp, radii);
  const std::vector<double> lhs_zbar = means_over(r.zbar_dzbar, lp, radii);
  std::vector<double> rhs_z, rhs_zbar;
  for (double rad : radii) {
    const double il = i_lambda(p.sum(), rad);
    rhs_z.push_back(c * il * data_z);
    rhs_zbar.push_back(c * il * data_zbar);
  }
  std::vector<BoundReport> out;
  out.push_back(make_report("zdz-pointwise", p, lp, radii, lhs_z, rhs_z));
  out.push_back(make_report("zbar-dzbar-pointwise", p, lp, radii, lhs_zbar, rhs_zbar));
  if (p.sum() > 0.0) {
    const double cl = c_lambda(p.sum());
    out.push_back(make_report("zdz-uniform", p, lp, radii, lhs_z,
                              std::vector<double>(radii.size(), c * cl * data_z)));
    out.push_back(make_report("zbar-dzbar-uniform", p, lp, radii, lhs_zbar,
                              std::vector<double>(radii.size(), c * cl * data_zbar)));
  }
  return out;
}

BoundReport verify_quasiregular_bound(const Params& p, const BoundaryFunction& f,
                                      double lp, const std::vector<double>& radii) {
  require_p(lp, "verify_quasiregular_bound");
  require_radii(radii, "verify_quasiregular_bound");
  const Routes r = routes(p, f);
  constexpr int kAngles = 64;
  std::vector<DiskPoint> grid;
  for (double rad : radii) {
    if (rad == 0.0) continue;
    for (int j = 0; j < kAngles; ++j) {
      grid.push_back(DiskPoint::polar(rad, 2.0 * std::numbers::pi * j / kAngles));
    }
  }
  // The ratio is unchanged when both derivatives are multiplied by |z|.
  const double k = quasiregularity_constant(r.zdz, r.zbar_dzbar, grid);
  const double rhs = std::isinf(k) ? kInf
                                   : k * std::abs(c_alpha_beta(p)) * c_lambda(p.sum() + 1.0) *
                                         boundary_norm(derivative(f), lp);
  return make_report("quasiregular-bound", p, lp, radii, means_over(r.zdz, lp, radii),
                     std::vector<double>(radii.size(), rhs));
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::HardyMember: return "HardyMember";
    case Classification::AreaLebesgueOnly: return "AreaLebesgueOnly";
    case Classification::RigidityZero: return "RigidityZero";
    case Classification::RigidityPolyharmonic: return "RigidityPolyharmonic";
    case Classification::Inadmissible: return "Inadmissible";
  }
  return "?";
}

Verdict membership_verdict(double alpha, double beta, double lp) {
  Verdict v;
  v.area_cutoff = kInf;
  if (!Params::admissible(alpha, beta) || !(lp >= 1.0)) {
    v.provenance = "inadmissible parameters";
    return v;
  }
  const Params p(alpha, beta);
  const double s = p.sum();
  if (!(s > -1.0)) {
    v.provenance = "alpha+beta <= -1: no Poisson representation";
    return v;
  }
  if (s > 0.0) {
    v.kind = Classification::HardyMember;
    v.p_min = 1.0;
    v.p_max = kInf;
    v.area_member = true;
    v.provenance = "Thm 2.2(i)";
    return v;
  }
  if (s == 0.0) {
    if (p.alpha() == 0.0) {
      v.kind = Classification::HardyMember;
      v.p_min = 1.0;
      v.p_max = kInf;
      v.p_min_open = true;
      v.p_max_open = true;
      v.area_member = true;
      v.hilbert_condition = lp == 1.0 || std::isinf(lp);
      v.provenance = "classical harmonic (M. Riesz)";
      return v;
    }
    v.kind = Classification::RigidityZero;
    v.area_member = true;
    v.provenance = "alpha+beta=0 rigidity theorem";
    return v;
  }
  // alpha + beta in (-1, 0).
  v.area_cutoff = -1.0 / s;
  v.area_member = lp < v.area_cutoff;
  if (p.alpha_natural()) {
    v.kind = Classification::RigidityPolyharmonic;
    v.polyharmonic_order = static_cast<int>(p.alpha()) + 1;
    v.provenance = "integer-alpha theorem";
  } else if (p.beta_natural()) {
    v.kind = Classification::RigidityPolyharmonic;
    v.polyharmonic_order = static_cast<int>(p.beta()) + 1;
    v.provenance = "integer-alpha theorem (conjugate)";
  } else {
    v.kind = Classification::RigidityZero;
    v.provenance = "Thm 2.3";
  }
  return v;
}

Verdict membership_verdict(const Params& p, double lp) {
  return membership_verdict(p.alpha(), p.beta(), lp);
}

double hilbert_derivative_norm(const BoundaryFunction& f, double lp) {
  return boundary_norm(hilbert_transform(derivative(f)), lp);
}

RigidityWitness rigidity_witness(const Params& p) {
  if (!(p.sum() > -1.0 && p.sum() < 0.0)) {
    throw DomainError("rigidity_witness: requires alpha+beta in (-1,0)");
  }
  const auto circle = [](double r, std::size_t n, double radial, int mode) {
    (void)r;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<cdouble> out(n);
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = radial * std::polar(1.0, mode * step * static_cast<double>(j));
    }
    return out;
  };
  if (p.alpha_natural()) {
    // conj(M_{beta,alpha,k}) is (alpha,beta)-harmonic; its z-derivative is
    // conj of the zbar-derivative of M_{beta,alpha,k}.
    const auto k = static_cast<std::uint32_t>(p.alpha()) + 1;
    const Params q = p.swapped();
    DiskEval eval(
        [q, k](const DiskPoint& z) { return std::conj(m_k_dzbar(q, k, z)); },
        [q, k, circle](double r, std::size_t n) {
          return circle(r, n, m_k_dzbar_radial(q, k, r), -static_cast<int>(k + 1));
        });
    return {std::move(eval), k, true};
  }
  const std::uint32_t k =
      p.beta_natural() ? static_cast<std::uint32_t>(p.beta()) + 1 : 0;
  DiskEval eval([p, k](const DiskPoint& z) { return m_k_dzbar(p, k, z); },
                [p, k, circle](double r, std::size_t n) {
                  return circle(r, n, m_k_dzbar_radial(p, k, r), static_cast<int>(k + 1));
                });
  return {std::move(eval), k, false};
}

}  // namespace abh
