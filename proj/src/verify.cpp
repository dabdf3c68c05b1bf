#include "abh/verify.hpp"

#include <cmath>
#include <sstream>

#include "abh/corpus.hpp"
#include "abh/errors.hpp"

namespace abh {

namespace {

SuiteLine from_report(std::string tag, std::string name, const BoundReport& r) {
  double worst = kInfinity;
  for (double s : r.slack) worst = std::min(worst, s);
  return {std::move(tag), std::move(name) + " " + r.case_name,
          r.pass ? Status::Pass : Status::Fail,
          "min slack " + format_double(worst), report_to_json(r)};
}

std::string describe(const Params& p) {
  return "(" + format_double(p.alpha()) + "," + format_double(p.beta()) + ")";
}

void bounds_for(SuiteResult& out, const std::string& name, const Params& p,
                const BoundaryFunction& f, double lp, const std::vector<double>& radii) {
  out.lines.push_back(from_report("Thm 2.1", name, verify_dtheta_bound(p, f, lp, radii)));
  for (const BoundReport& r : verify_dz_bounds(p, f, lp, radii)) {
    out.lines.push_back(from_report("Thm 2.2", name, r));
  }
}

SuiteLine witness_line(const Params& p) {
  const WitnessCheck w = check_witness(p);
  std::ostringstream detail;
  detail << "k=" << w.k << (w.mirrored ? " mirrored" : "") << " gamma="
         << format_double(w.fit.gamma) << " target=" << format_double(p.sum())
         << " M1(0.999)/M1(0.9)=" << format_double(w.ratio);
  json data = {{"alpha", p.alpha()}, {"beta", p.beta()}, {"k", w.k},
               {"mirrored", w.mirrored}, {"gamma", w.fit.gamma},
               {"residual", w.fit.residual}, {"ratio", w.ratio}};
  return {"Thm 2.2(iii)", "witness " + describe(p),
          w.pass ? Status::DivergentAsExpected : Status::Fail, detail.str(), data};
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::DivergentAsExpected: return "DIVERGENT-as-expected";
  }
  return "?";
}

bool SuiteResult::all_pass() const {
  for (const SuiteLine& l : lines) {
    if (l.status == Status::Fail) return false;
  }
  return true;
}

const std::vector<std::string>& theorem_tags() {
  static const std::vector<std::string> tags = {
      "Thm 2.1",       "Thm 2.2",        "Thm 2.2(iii)",         "Thm 2.3",
      "integer-alpha", "alpha+beta=0",   "quasi-regular", "T_alpha corollary"};
  return tags;
}

const std::vector<VerdictCase>& verdict_matrix() {
  using C = Classification;
  static const std::vector<VerdictCase> cases = {
      {1.0, 1.0, 1.0, C::HardyMember, 0, true},
      {0.5, 0.5, kInfinity, C::HardyMember, 0, true},
      {2.0, -0.5, 2.0, C::HardyMember, 0, true},
      {-0.25, -0.25, 1.0, C::RigidityZero, 0, true},
      {-0.25, -0.25, 2.0, C::RigidityZero, 0, false},
      {-0.3, -0.4, 2.0, C::RigidityZero, 0, false},
      {1.0, -1.5, 1.0, C::RigidityPolyharmonic, 2, true},
      {-1.5, 1.0, 3.0, C::RigidityPolyharmonic, 2, false},
      {0.0, -0.5, 1.0, C::RigidityPolyharmonic, 1, true},
      {0.5, -0.5, 2.0, C::RigidityZero, 0, true},
      {0.0, 0.0, 2.0, C::HardyMember, 0, true},
      {-1.0, 0.5, 1.0, C::Inadmissible, 0, false},
  };
  return cases;
}

bool verdict_matches(const VerdictCase& c) {
  const Verdict v = membership_verdict(c.alpha, c.beta, c.lp);
  return v.kind == c.kind && v.polyharmonic_order == c.polyharmonic_order &&
         v.area_member == c.area_member;
}

WitnessCheck check_witness(const Params& p) {
  const RigidityWitness w = rigidity_witness(p);
  const ExponentFit fit = growth_exponent(w.eval, 1.0);
  const double ratio = hardy_mean(w.eval, 1.0, 0.999) / hardy_mean(w.eval, 1.0, 0.9);
  const bool pass = std::abs(fit.gamma - p.sum()) <= 0.05 && ratio >= 2.0;
  return {p, w.k, w.mirrored, fit, ratio, pass};
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  SuiteResult out;

  // Derivative bounds.
  if (cfg.params) {
    const Params& p = *cfg.params;
    p.require_poisson();
    const BoundaryFunction f = cfg.f ? *cfg.f
                                     : BoundaryFunction::from_polynomial({{1, 1.0}});
    bounds_for(out, describe(p), p, f, cfg.lp, cfg.radii);
    if (p.sum() < 0.0) out.lines.push_back(witness_line(p));
  } else {
    for (const CorpusCase& c : default_corpus(cfg.seed, cfg.corpus_size)) {
      bounds_for(out, c.name + " " + describe(c.params), c.params, c.f, cfg.lp, cfg.radii);
    }
  }

  // Tightness of the angular-derivative bound: u = z for (1,1), f = e^{it}.
  {
    const BoundReport r = verify_dtheta_bound(
        Params(1.0, 1.0), BoundaryFunction::from_polynomial({{1, 1.0}}), kInfinity,
        {1.0 - 1e-10});
    SuiteLine line = from_report("Thm 2.1", "tight (1,1) e^{it}", r);
    if (!(std::abs(r.lhs[0] - 1.0) <= 1e-9 && std::abs(r.rhs[0] - 1.0) <= 1e-9)) {
      line.status = Status::Fail;
    }
    out.lines.push_back(std::move(line));
  }

  // Blow-up witnesses.
  if (!cfg.params) {
    for (const Params& p : {Params(-0.25, -0.25), Params(-0.3, -0.4), Params(1.0, -1.5)}) {
      out.lines.push_back(witness_line(p));
    }
  }

  // Membership decision table.
  for (const VerdictCase& c : verdict_matrix()) {
    const Verdict v = membership_verdict(c.alpha, c.beta, c.lp);
    const std::string name = "verdict (" + format_double(c.alpha) + "," +
                             format_double(c.beta) + ") p=" + format_double(c.lp);
    out.lines.push_back({v.provenance.empty() ? "Thm 2.3" : v.provenance, name,
                         verdict_matches(c) ? Status::Pass : Status::Fail,
                         to_string(v.kind),
                         {{"kind", to_string(v.kind)},
                          {"order", v.polyharmonic_order},
                          {"area_member", v.area_member}}});
  }

  // Quasi-regular bound on an analytic extension (alpha = 0).
  {
    const Params p(0.0, 0.5);
    const BoundaryFunction f = BoundaryFunction::from_polynomial({{1, 1.0}, {2, 0.5}});
    out.lines.push_back(from_report("quasi-regular", "analytic (0,0.5)",
                                    verify_quasiregular_bound(p, f, cfg.lp, cfg.radii)));
  }

  // T_alpha corollary.
  for (double alpha : {1.0, -0.5}) {
    const Params p = t_alpha_params(alpha);
    bool ok = true;
    std::string detail;
    if (alpha > 0.0) {
      // (i): both derivatives in H_G^p for every p.
      for (double lp : {1.0, 2.0, kInfinity}) {
        ok = ok && membership_verdict(p, lp).kind == Classification::HardyMember;
      }
      detail = "HardyMember for p in {1,2,inf}";
    } else {
      // (ii) rigidity, (iii) area membership below -1/alpha, (iv) M_alpha
      // blows up at the rate alpha.
      const double cutoff = -1.0 / alpha;
      ok = membership_verdict(p, 1.0).kind == Classification::RigidityZero &&
           membership_verdict(p, 1.0).area_member &&
           !membership_verdict(p, cutoff).area_member;
      const RigidityWitness w = rigidity_witness(p);
      const ExponentFit fit = growth_exponent(w.eval, 1.0);
      ok = ok && w.k == 0 && std::abs(fit.gamma - alpha) <= 0.05;
      detail = "RigidityZero, area cutoff " + format_double(cutoff) + ", gamma " +
               format_double(fit.gamma);
    }
    out.lines.push_back({"T_alpha corollary", "alpha=" + format_double(alpha),
                         ok ? Status::Pass : Status::Fail, detail, json::object()});
  }
  return out;
}

}  // namespace abh
