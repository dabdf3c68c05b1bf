#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "abh/corpus.hpp"
#include "abh/kernels.hpp"
#include "abh/parallel.hpp"

namespace {

using namespace abh;

TEST(Parallel, PeriodicMeanMatchesSerial) {
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 5000));
    const double w = rng.uniform(-3, 3);
    auto term = [&](std::size_t j) { return std::complex<double>(std::cos(w * j), std::sin(j)); };
    const auto s = serial::periodic_mean<std::complex<double>>(n, term);
    const auto p = parallel::periodic_mean<std::complex<double>>(n, term);
    EXPECT_LT(std::abs(s - p), 1e-13 * (1 + std::abs(s))) << n;
  }
}

TEST(Parallel, PeriodicMeanIsReproducible) {
  auto term = [](std::size_t j) { return 1.0 / (1.0 + j); };
  const double first = parallel::periodic_mean<double>(100000, term);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(parallel::periodic_mean<double>(100000, term), first);
}

TEST(Parallel, MapMatchesSerial) {
  auto fn = [](std::size_t j) { return std::sqrt(static_cast<double>(j)); };
  EXPECT_EQ(parallel::map<double>(1000, fn), serial::map<double>(1000, fn));
  EXPECT_TRUE(parallel::map<double>(0, fn).empty());
}

TEST(Parallel, ExceptionsPropagate) {
  auto bad = [](std::size_t j) -> double {
    if (j == 37) throw std::runtime_error("boom");
    return 0.0;
  };
  EXPECT_THROW(parallel::map<double>(100, bad), std::runtime_error);
  EXPECT_THROW(parallel::periodic_mean<double>(100, bad), std::runtime_error);
}

// The production I_lambda must agree with a serial trapezoid over the same nodes.
TEST(Parallel, RadialIntegralMatchesSerialReference) {
  for (double lambda : {-0.5, 0.0, 0.7, 2.0}) {
    for (double r : {0.3, 0.9, 0.99}) {
      const std::size_t n = quadrature_nodes(r);
      const double ref = serial::periodic_mean<double>(n, [&](std::size_t j) {
        const double t = 2 * M_PI * j / n;
        return std::pow(1 - r * r, lambda) / std::pow(std::abs(1.0 - std::polar(r, t)), lambda + 1);
      });
      EXPECT_NEAR(i_lambda(lambda, r), ref, 1e-12 * ref);
    }
  }
}

}  // namespace
