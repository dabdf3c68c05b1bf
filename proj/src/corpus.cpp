#include "abh/corpus.hpp"

#include <cmath>
#include <numbers>

namespace abh {

namespace {

bool near_integer(double x, double tol) {
  return std::abs(x - std::nearbyint(x)) < tol;
}

}  // namespace

Params random_positive_params(Rng& rng) {
  const double a = rng.uniform(0.05, 2.0);
  const double b = rng.uniform(0.05, 2.0);
  return Params(a, b);
}

Params random_negative_params(Rng& rng) {
  for (;;) {
    const double s = rng.uniform(-0.9, -0.1);
    const double a = rng.uniform(-0.8, 0.8);
    const double b = s - a;
    if (near_integer(a, 0.05) || near_integer(b, 0.05)) continue;
    return Params(a, b);
  }
}

Params random_params(Rng& rng) {
  return rng.uniform() < 0.5 ? random_positive_params(rng) : random_negative_params(rng);
}

TrigPolynomial random_trig(Rng& rng, int degree) {
  TrigPolynomial out;
  for (int k = -degree; k <= degree; ++k) {
    const double keep = rng.uniform();
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    if (keep < 0.5 || k == 0) out.set(k, {re, im});
  }
  if (out.empty()) out.set(0, 1.0);
  return out;
}

HypParams random_hyp_triple(Rng& rng) {
  for (;;) {
    const double a = rng.uniform(-5.0, 5.0);
    const double b = rng.uniform(-5.0, 5.0);
    const double c = rng.uniform(0.5, 5.0);
    if (c - a - b > -1.0) return {a, b, c};
  }
}

std::vector<CorpusCase> default_corpus(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<CorpusCase> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Params p = i % 2 == 0 ? random_positive_params(rng) : random_negative_params(rng);
    const int degree = rng.integer(1, 8);
    out.push_back({"corpus-" + std::to_string(i), p,
                   BoundaryFunction::from_polynomial(random_trig(rng, degree))});
  }
  return out;
}

DiskPoint random_point(Rng& rng, double rmax) {
  // Area-uniform radius.
  const double r = rmax * std::sqrt(rng.uniform());
  const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return DiskPoint::polar(r, t);
}

}  // namespace abh
