#pragma once

// The theorem suite behind `abh --cmd verify`: derivative bounds, blow-up
// witnesses, the membership table, the quasi-regular bound and the T_alpha
// corollary, each reduced to PASS / FAIL lines.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abh/boundary.hpp"
#include "abh/hardy.hpp"
#include "abh/io.hpp"
#include "abh/kernels.hpp"

namespace abh {

/// Radii of the bound checks when none are configured.
inline const std::vector<double> kVerifyRadii = {0.5, 0.9, 0.99, 0.999};

enum class Status { Pass, Fail, DivergentAsExpected };

const char* to_string(Status s);

struct SuiteLine {
  std::string tag;   // theorem tag
  std::string name;  // case description
  Status status;
  std::string detail;
  json data;
};

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::optional<Params> params;        // single case instead of the corpus
  std::optional<BoundaryFunction> f;   // boundary data for the single case
  double lp = 2.0;
  std::vector<double> radii = kVerifyRadii;
  std::size_t corpus_size = 6;
};

struct SuiteResult {
  std::vector<SuiteLine> lines;
  bool all_pass() const;
};

/// Theorem tags covered by run_suite, for --help.
const std::vector<std::string>& theorem_tags();

struct VerdictCase {
  double alpha;
  double beta;
  double lp;
  Classification kind;
  int polyharmonic_order;
  bool area_member;
};

/// Twelve parameter points with the classification the theorems dictate.
const std::vector<VerdictCase>& verdict_matrix();

/// True if membership_verdict agrees with the expected row.
bool verdict_matches(const VerdictCase& c);

struct WitnessCheck {
  Params params;
  std::uint32_t k;
  bool mirrored;
  ExponentFit fit;
  double ratio;  // M_1(0.999) / M_1(0.9)
  bool pass;     // |gamma - (alpha+beta)| <= 0.05 and ratio >= 2
};

WitnessCheck check_witness(const Params& p);

SuiteResult run_suite(const SuiteConfig& cfg);

}  // namespace abh
