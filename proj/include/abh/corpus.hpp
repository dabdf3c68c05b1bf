#pragma once

// Seeded random corpora shared by the CLI, the tests and the acceptance suite.
// Everything is driven by a 64-bit Mersenne twister so a seed reproduces a
// corpus bit for bit on every platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "abh/boundary.hpp"
#include "abh/kernels.hpp"
#include "abh/special_fn.hpp"

namespace abh {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform in [0, 1) from the top 53 bits (distribution objects are not
  /// portable across standard libraries).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// alpha + beta > 0 with alpha, beta in [0.05, 2].
Params random_positive_params(Rng& rng);
/// alpha + beta in [-0.9, -0.1], neither parameter within 0.05 of an integer.
Params random_negative_params(Rng& rng);
/// Either of the above with equal probability.
Params random_params(Rng& rng);

/// Random trigonometric polynomial with support in [-degree, degree];
/// coefficients uniform in the unit square, roughly half the modes kept.
TrigPolynomial random_trig(Rng& rng, int degree);

/// Triples with c in [0.5, 5], a, b in [-5, 5] and c - a - b > -1, so that
/// F stays O(1) on [0, 0.9].
HypParams random_hyp_triple(Rng& rng);

struct CorpusCase {
  std::string name;
  Params params;
  BoundaryFunction f;
};

/// count cases mixing both parameter regimes, degree <= 8 data.
std::vector<CorpusCase> default_corpus(std::uint64_t seed, std::size_t count);

/// Random point with |z| <= rmax.
DiskPoint random_point(Rng& rng, double rmax);

}  // namespace abh
