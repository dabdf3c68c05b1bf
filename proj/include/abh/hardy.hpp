#pragma once

// Integral means M_p(r, .), growth-exponent fits, the quasi-regularity
// constant, numeric checks of the derivative bounds, the membership decision
// table and the blow-up witnesses for alpha + beta in (-1, 0).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abh/boundary.hpp"
#include "abh/extension.hpp"
#include "abh/kernels.hpp"

namespace abh {

/// Radii used by growth_exponent when none are given. The subleading
/// (1-r^2)^{-(alpha+beta)} correction of the witnesses is still large at
/// r ~ 0.95, so the fit lives very close to the circle.
inline const std::vector<double> kGrowthRadii = {0.999, 0.9995, 0.9999, 0.99995,
                                                 0.99999};

/// ((1/N) sum |v_j|^p)^{1/p}, or max |v_j| for p = inf. DomainError if p < 1.
double lp_mean(const std::vector<cdouble>& values, double p);

/// M_p(r, u) on n equispaced points.
double hardy_mean(const DiskEval& u, double p, double r,
                  std::size_t n = kDefaultSamples);

struct ExponentFit {
  double gamma;
  double residual;  // RMS of the log-log fit
};

/// Least-squares slope of log M_p(r, u) against log(1 - r^2).
/// Needs at least 4 radii, all above 0.9 (DomainError otherwise);
/// DegenerateFit if every mean is below 1e-14.
ExponentFit growth_exponent(const DiskEval& u, double p,
                            const std::vector<double>& radii = kGrowthRadii,
                            std::size_t n = kDefaultSamples);

struct HardyProfile {
  double p;
  std::vector<double> radii;
  std::vector<double> means;
  std::optional<ExponentFit> fit;  // set when >= 4 radii exceed 0.9
};

/// Radii must be strictly increasing in [0, 1).
HardyProfile hardy_profile(const DiskEval& u, double p, std::vector<double> radii,
                           std::size_t n = kDefaultSamples);

/// max over the grid of (|u_z| + |u_zbar|)/(|u_z| - |u_zbar|); +inf when a
/// denominator is <= 0.
double quasiregularity_constant(const DiskEval& u_dz, const DiskEval& u_dzbar,
                                const std::vector<DiskPoint>& grid);

struct BoundReport {
  std::string case_name;
  Params params;
  double p;
  std::vector<double> radii;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::vector<double> slack;  // rhs - lhs
  bool pass;                  // every slack >= -1e-6
};

inline constexpr double kSlackTolerance = 1e-6;

/// M_p(r, d_theta u) <= |c_{a,b}| c_{a+b+1} ||f'||_p at each radius.
BoundReport verify_dtheta_bound(const Params& p, const BoundaryFunction& f,
                                double lp, const std::vector<double>& radii);

/// Pointwise bounds on M_p(r, z u_z) and M_p(r, zbar u_zbar) with
/// I_{a+b}(r); for a + b > 0 also the uniform ones with c_{a+b}.
std::vector<BoundReport> verify_dz_bounds(const Params& p, const BoundaryFunction& f,
                                          double lp, const std::vector<double>& radii);

/// M_p(r, z u_z) <= K |c_{a,b}| c_{a+b+1} ||f'||_p with K the
/// quasi-regularity constant measured on a polar grid over the radii.
/// An infinite K makes the bound vacuous (reported as passing).
BoundReport verify_quasiregular_bound(const Params& p, const BoundaryFunction& f,
                                      double lp, const std::vector<double>& radii);

enum class Classification {
  HardyMember,
  AreaLebesgueOnly,
  RigidityZero,
  RigidityPolyharmonic,
  Inadmissible,
};

const char* to_string(Classification c);

struct Verdict {
  Classification kind = Classification::Inadmissible;
  /// Range of p for which both derivatives lie in H_G^p.
  double p_min = 0.0;
  double p_max = 0.0;
  bool p_min_open = false;
  bool p_max_open = false;
  /// -1/(alpha+beta) for alpha+beta in (-1,0), else NaN.
  double area_cutoff = 0.0;
  /// Both derivatives are in L^p of the disc (area measure) at the given p.
  bool area_member = false;
  /// alpha+1 (or beta+1 by conjugation) for RigidityPolyharmonic.
  int polyharmonic_order = 0;
  /// alpha = beta = 0 at p in {1, inf}: membership iff H(f') in L^p.
  bool hilbert_condition = false;
  std::string provenance;

  bool operator==(const Verdict&) const = default;
};

/// Pure decision table; never throws.
Verdict membership_verdict(double alpha, double beta, double lp);
Verdict membership_verdict(const Params& p, double lp);

/// ||H(f')||_p on the sample grid, the data-dependent half of the classical
/// alpha = beta = 0 endpoint case.
double hilbert_derivative_norm(const BoundaryFunction& f, double lp);

struct RigidityWitness {
  DiskEval eval;
  std::uint32_t k;
  /// alpha natural: the witness is d/dz of M_{alpha,beta,-k}.
  bool mirrored;
};

/// Derivative of M_{alpha,beta,k} that blows up like (1-|z|^2)^{alpha+beta}.
/// DomainError unless alpha + beta in (-1, 0).
RigidityWitness rigidity_witness(const Params& p);

}  // namespace abh
