#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "abh/corpus.hpp"
#include "abh/errors.hpp"
#include "abh/special_fn.hpp"

namespace {

using namespace abh;

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

TEST(Gamma, KnownValues) {
  EXPECT_DOUBLE_EQ(abh::gamma(1.0), 1.0);
  EXPECT_NEAR(abh::gamma(5.0), 24.0, 1e-12);
  EXPECT_LT(rel(abh::gamma(0.5), std::sqrt(std::numbers::pi)), 1e-14);
  EXPECT_LT(rel(abh::gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi)), 1e-14);
  // High-precision reference values.
  EXPECT_LT(rel(abh::gamma(0.1), 9.5135076986687312858), 1e-14);
  EXPECT_LT(rel(abh::gamma(-1.5), 2.3632718012073547031), 1e-14);
  EXPECT_LT(rel(abh::gamma(7.3), 1271.4236336639088399), 1e-13);
  EXPECT_LT(rel(abh::gamma(150.5), 4.6610726270973779184e+261), 1e-11);
}

TEST(Gamma, PolesThrow) {
  EXPECT_THROW(abh::gamma(0.0), PoleError);
  EXPECT_THROW(abh::gamma(-3.0), PoleError);
  EXPECT_THROW(abh::gamma(-2.0 + 1e-13), PoleError);
  EXPECT_EQ(rgamma(-4.0), 0.0);
  EXPECT_THROW(digamma(-1.0), PoleError);
}

TEST(Gamma, LogGammaSign) {
  int sign = 0;
  EXPECT_NEAR(log_abs_gamma(-0.5, &sign), std::log(2.0 * std::sqrt(std::numbers::pi)), 1e-13);
  EXPECT_EQ(sign, -1);
  EXPECT_NEAR(log_abs_gamma(171.5, &sign), 709.143163030928, 1e-9);
  EXPECT_EQ(sign, 1);
}

TEST(Gamma, RecurrenceProperty) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-6.0, 30.0);
    if (std::abs(x - std::nearbyint(x)) < 1e-3 && x < 0.5) continue;
    EXPECT_LT(rel(abh::gamma(x + 1.0), x * abh::gamma(x)), 1e-12) << x;
  }
}

TEST(Digamma, Values) {
  EXPECT_NEAR(digamma(1.0), -0.57721566490153286061, 1e-14);
  EXPECT_NEAR(digamma(0.3), -3.5025242222001331249, 1e-13);
  EXPECT_NEAR(digamma(4.5), 1.3888709263595289015, 1e-13);
  EXPECT_NEAR(digamma(-0.5), 0.036489973978576520559, 1e-13);
}

TEST(Pochhammer, Values) {
  EXPECT_EQ(pochhammer(3.5, 0), 1.0);
  EXPECT_EQ(pochhammer(-1.0, 2), 0.0);
  EXPECT_EQ(pochhammer(2.0, 3), 24.0);
}

TEST(Hyp2f1, ClosedForms) {
  EXPECT_NEAR(hyp2f1({-1, -1, 1}, 0.3), 1.3, 1e-15);
  EXPECT_NEAR(hyp2f1({1, 1, 2}, 0.5), 2.0 * std::log(2.0), 1e-14);
  EXPECT_EQ(hyp2f1({0.3, 0.7, 1.1}, 0.0), 1.0);
  EXPECT_NEAR(hyp2f1({0.5, 0.5, 1.5}, 0.25), std::asin(0.5) / 0.5, 1e-14);
}

TEST(Hyp2f1, ReferenceValues) {
  struct Case {
    HypParams p;
    double x, want, tol;
  };
  const Case cases[] = {
      {{1.3, -2.7, 0.8}, 0.6, -0.21785764249854272978, 1e-12},
      {{2.5, 1.5, 3.2}, 0.95, 21.828365177380136922, 1e-11},
      {{0.3, 0.4, 1.2}, 1.0 - 1e-6, 1.307582651276927142, 1e-9},
      {{1, 1, 2}, 0.999, 6.9146699489310672373, 1e-11},
      {{2, 3, 1.5}, 0.95, 51892.585872793101139, 1e-11},
      {{-3, 2.5, 1.5}, 0.7, -0.099000000000000017319, 1e-12},
      {{0.25, 0.25, 0.5}, 0.995, 1.6990765059156251442, 1e-10},
      {{1.5, 0.5, 1.0}, 0.999, 638.00174073446289096, 1e-10},
  };
  for (const Case& c : cases) {
    EXPECT_LT(rel(hyp2f1(c.p, c.x), c.want), c.tol) << c.p.a << "," << c.p.b << "," << c.p.c;
  }
}

TEST(Hyp2f1, Errors) {
  EXPECT_THROW(hyp2f1({1, 1, 0}, 0.5), DomainError);
  EXPECT_THROW(hyp2f1({1, 1, -2}, 0.5), DomainError);
  EXPECT_THROW(hyp2f1({1, 1, 2}, 1.0), DomainError);
  EXPECT_THROW(hyp2f1({1, 1, 2}, -0.1), DomainError);
}

TEST(Hyp2f1, EulerTransform) {
  EXPECT_NEAR(euler_transform({-1, -1, 1}, 0.5), 1.5, 1e-14);
  EXPECT_NEAR(euler_transform({1, 1, 2}, 0.9), -std::log(0.1) / 0.9, 1e-12);
  EXPECT_LT(rel(euler_transform({0.25, 0.25, 1}, 0.99), hyp2f1({0.25, 0.25, 1}, 0.99)), 1e-10);
}

TEST(Hyp2f1, Derivative) {
  EXPECT_NEAR(hyp2f1_derivative({-1, -1, 1}, 0.2), 1.0, 1e-15);
  // d/dx(-ln(1-x)/x) at 1/2 = 2 - 4 ln 2.
  EXPECT_NEAR(hyp2f1_derivative({1, 1, 2}, 0.5), 4.0 - 4.0 * std::log(2.0), 1e-13);
  EXPECT_EQ(hyp2f1_derivative({0, 3.3, 1.7}, 0.4), 0.0);
}

TEST(Hyp2f1, GaussSummation) {
  EXPECT_NEAR(hyp2f1_at_one({-1, 0.5, 1}), 0.5, 1e-15);
  EXPECT_NEAR(hyp2f1_at_one({0, 2.5, 4}), 1.0, 1e-15);
  EXPECT_NEAR(hyp2f1_at_one({-1, 1, 2}), 0.5, 1e-15);
  // A pole in the denominator means a zero limit, not an error.
  EXPECT_EQ(hyp2f1_at_one({-1, 0.5, 0.5}), 0.0);
  EXPECT_THROW(hyp2f1_at_one({1, 1, 2}), DomainError);
  EXPECT_THROW(hyp2f1_at_one({1, 1, 1.5}), DomainError);
}

TEST(Hyp2f1, GaussLogCoefficient) {
  EXPECT_NEAR(gauss_log_coefficient(1, 1), -1.0, 1e-14);
  EXPECT_NEAR(gauss_log_coefficient(0.5, 0.5), -1.0 / std::numbers::pi, 1e-14);
}

// Property: Euler's transformation and the derivative rule on random triples.
TEST(Hyp2f1, IdentitiesOnRandomTriples) {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const HypParams p = random_hyp_triple(rng);
    for (double x : {0.05, 0.35, 0.65, 0.85}) {
      const double f = hyp2f1(p, x);
      EXPECT_LT(std::abs(f - euler_transform(p, x)), 1e-10 * std::max(1.0, std::abs(f)));
      const double h = 1e-4;
      const double fd = (hyp2f1(p, x + h) - hyp2f1(p, x - h)) / (2 * h);
      EXPECT_LT(std::abs(fd - hyp2f1_derivative(p, x)), 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
}

// Property: the series approaches the Gauss sum as x -> 1.
TEST(Hyp2f1, LimitApproach) {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
    const HypParams p{a, b, a + b + rng.uniform(1.0, 2.5)};
    if (p.c < 0.3) continue;
    const double lim = hyp2f1_at_one(p);
    EXPECT_NEAR(hyp2f1(p, 1.0 - 1e-7), lim, 1e-4 * std::max(1.0, std::abs(lim)));
  }
}

TEST(Snap, Integers) {
  EXPECT_EQ(snap_integer(2.0 + 1e-13), 2.0);
  EXPECT_EQ(snap_integer(2.0 + 1e-9), 2.0 + 1e-9);
  EXPECT_TRUE(is_nonpositive_integer(-3.0));
  EXPECT_FALSE(is_nonpositive_integer(1.0));
  EXPECT_TRUE(is_natural(0.0));
  EXPECT_FALSE(is_natural(-1.0));
}

}  // namespace
