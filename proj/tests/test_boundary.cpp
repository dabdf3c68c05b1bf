#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "abh/boundary.hpp"
#include "abh/corpus.hpp"
#include "abh/errors.hpp"
#include "abh/fft.hpp"

namespace {

using namespace abh;

BoundaryFunction cosine() { return BoundaryFunction::from_polynomial({{1, 0.5}, {-1, 0.5}}); }

// Samples-only copy of an exact function.
BoundaryFunction sampled(const BoundaryFunction& f) {
  return BoundaryFunction::from_samples(f.samples());
}

double max_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TEST(Fft, MatchesNaiveDft) {
  Rng rng(21);
  std::vector<cdouble> x(64);
  for (auto& v : x) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  std::vector<cdouble> y = x;
  fft(y);
  for (std::size_t k = 0; k < x.size(); ++k) {
    cdouble acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      acc += x[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * k) / 64.0);
    }
    EXPECT_LT(std::abs(acc - y[k]), 1e-12);
  }
  fft(y, true);
  for (std::size_t j = 0; j < x.size(); ++j) EXPECT_LT(std::abs(y[j] / 64.0 - x[j]), 1e-14);
}

TEST(BoundaryFunction, Construction) {
  EXPECT_THROW(BoundaryFunction::from_polynomial({{1, 1.0}}, 100), DomainError);
  EXPECT_THROW(BoundaryFunction::from_polynomial({{4, 1.0}}, 8), DomainError);
  EXPECT_THROW(BoundaryFunction::from_samples(std::vector<cdouble>(2)), DomainError);
  const BoundaryFunction f = BoundaryFunction::from_polynomial({{1, 1.0}}, 8);
  EXPECT_NEAR(std::abs(f.samples()[2] - cdouble(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(f.theta(4), std::numbers::pi, 1e-15);
}

TEST(FourierCoefficients, Examples) {
  const TrigPolynomial e2 =
      fourier_coefficients(sampled(BoundaryFunction::from_polynomial({{2, 1.0}})), 5);
  EXPECT_NEAR(std::abs(e2[2] - 1.0), 0.0, 1e-14);
  for (int k = -5; k <= 5; ++k) {
    if (k != 2) EXPECT_LT(std::abs(e2[k]), 1e-14);
  }
  const TrigPolynomial c = fourier_coefficients(sampled(cosine()), 3);
  EXPECT_NEAR(c[1].real(), 0.5, 1e-14);
  EXPECT_NEAR(c[-1].real(), 0.5, 1e-14);
  EXPECT_EQ(fourier_coefficients(BoundaryFunction::from_polynomial({{0, 1.0}}), 4).size(), 1u);
  EXPECT_THROW(fourier_coefficients(cosine(), 1024), DomainError);
}

TEST(Derivative, Examples) {
  const BoundaryFunction d = derivative(BoundaryFunction::from_polynomial({{3, 1.0}}));
  EXPECT_EQ((*d.exact())[3], cdouble(0, 3));
  EXPECT_TRUE(derivative(BoundaryFunction::from_polynomial({{0, 1.0}})).exact()->empty());
  const BoundaryFunction ds = derivative(sampled(cosine()));
  for (std::size_t j = 0; j < ds.size(); j += 97) {
    EXPECT_NEAR(ds.samples()[j].real(), -std::sin(ds.theta(j)), 1e-12);
  }
}

TEST(TimesEit, Examples) {
  const BoundaryFunction one = BoundaryFunction::from_polynomial({{0, 1.0}});
  EXPECT_EQ(*times_eit(one).exact(), TrigPolynomial({{1, 1.0}}));
  EXPECT_EQ(*times_eit(BoundaryFunction::from_polynomial({{-1, 1.0}})).exact(),
            TrigPolynomial({{0, 1.0}}));
  const TrigPolynomial shifted =
      *times_eit(BoundaryFunction::from_polynomial({{0, 2.0}, {1, 3.0}})).exact();
  EXPECT_EQ(shifted, TrigPolynomial({{1, 2.0}, {2, 3.0}}));
  // The grid doubles when the shift would reach Nyquist.
  EXPECT_EQ(times_eit(BoundaryFunction::from_polynomial({{1, 1.0}}, 4)).size(), 8u);
  const BoundaryFunction s = times_eikt(sampled(cosine()), -1);
  const TrigPolynomial spec = s.spectrum();
  EXPECT_NEAR(std::abs(spec[0] - 0.5), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(spec[-2] - 0.5), 0.0, 1e-14);
}

TEST(LpNorm, Examples) {
  const BoundaryFunction e5 = BoundaryFunction::from_polynomial({{5, 1.0}});
  for (double p : {1.0, 2.0, 3.5, kInfinity}) EXPECT_NEAR(lp_norm(e5, p), 1.0, 1e-14);
  EXPECT_NEAR(lp_norm(BoundaryFunction::from_polynomial({{0, cdouble(3, 4)}}), 1.7), 5.0, 1e-13);
  EXPECT_NEAR(lp_norm(cosine(), 2.0), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_THROW(lp_norm(cosine(), 0.5), DomainError);
}

// Property: Jensen monotonicity in p on random data.
TEST(LpNorm, MonotoneInP) {
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    const BoundaryFunction f = BoundaryFunction::from_polynomial(random_trig(rng, 8));
    EXPECT_LE(lp_norm(f, 1), lp_norm(f, 2) + 1e-12);
    EXPECT_LE(lp_norm(f, 2), lp_norm(f, 4) + 1e-12);
    EXPECT_LE(lp_norm(f, 4), lp_norm(f, kInfinity) + 1e-12);
  }
}

TEST(Hilbert, Examples) {
  const BoundaryFunction h = hilbert_transform(sampled(cosine()));
  for (std::size_t j = 0; j < h.size(); j += 101) {
    EXPECT_NEAR(h.samples()[j].real(), std::sin(h.theta(j)), 1e-13);
  }
  EXPECT_TRUE(hilbert_transform(BoundaryFunction::from_polynomial({{0, 1.0}})).exact()->empty());
}

// Property: H^2 = -(I - mean) on random data.
TEST(Hilbert, SquareIsMinusIdentityOffMean) {
  Rng rng(23);
  const TrigPolynomial poly = random_trig(rng, 8);
  const BoundaryFunction f = sampled(BoundaryFunction::from_polynomial(poly));
  const BoundaryFunction hh = hilbert_transform(hilbert_transform(f));
  std::vector<cdouble> want = f.samples();
  for (auto& v : want) v = -(v - poly[0]);
  EXPECT_LT(max_diff(hh.samples(), want), 1e-12);
}

TEST(Riesz, Examples) {
  EXPECT_TRUE(riesz_project(BoundaryFunction::from_polynomial({{-1, 1.0}})).empty());
  const TrigPolynomial p = riesz_project(sampled(BoundaryFunction::from_polynomial({{1, 1.0}, {-1, 1.0}})));
  EXPECT_EQ(p.size(), 1u);
  EXPECT_NEAR(std::abs(p[1] - 1.0), 0.0, 1e-14);
}

TEST(Resample, SampledMatchesExact) {
  Rng rng(24);
  const BoundaryFunction exact = BoundaryFunction::from_polynomial(random_trig(rng, 8), 64);
  const BoundaryFunction fine = sampled(exact).resampled(512);
  EXPECT_LT(max_diff(fine.samples(), exact.resampled(512).samples()), 1e-13);
  EXPECT_THROW(exact.resampled(32), DomainError);
}

TEST(TrigPolynomial, Basics) {
  TrigPolynomial p{{1, 2.0}, {-2, cdouble(0, 1)}};
  EXPECT_EQ(p.max_frequency(), 2);
  p.set(1, 0.0);
  EXPECT_EQ(p.size(), 1u);
  p.add(-2, cdouble(0, -1));
  EXPECT_TRUE(p.empty());
  EXPECT_EQ(TrigPolynomial{}.max_frequency(), 0);
}

}  // namespace
