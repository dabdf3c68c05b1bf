#include <gtest/gtest.h>

#include <cmath>

#include "abh/boundary.hpp"
#include "abh/corpus.hpp"
#include "abh/errors.hpp"
#include "abh/extension.hpp"
#include "abh/kernels.hpp"

namespace {

using namespace abh;
constexpr cdouble kI(0.0, 1.0);

BoundaryFunction poly(TrigPolynomial p) { return BoundaryFunction::from_polynomial(std::move(p)); }

std::pair<cdouble, cdouble> wirtinger(const DiskEval& u, const DiskPoint& z, double h = 1e-5) {
  const cdouble zz = z.z();
  const cdouble ux = (u(DiskPoint(zz + h)) - u(DiskPoint(zz - h))) / (2 * h);
  const cdouble uy = (u(DiskPoint(zz + kI * h)) - u(DiskPoint(zz - kI * h))) / (2 * h);
  return {0.5 * (ux - kI * uy), 0.5 * (ux + kI * uy)};
}

TEST(PoissonExtend, Examples) {
  const DiskPoint z({0.3, -0.6});
  const Params p(0.5, 0.5);
  EXPECT_LT(std::abs(poisson_extend(p, poly({{0, 1.0}}), z) - m_radial(p, z.r())), 1e-12);
  EXPECT_LT(std::abs(poisson_extend(Params(0, 0), poly({{1, 1.0}}), z) - z.z()), 1e-13);
  const double x = std::norm(z.z());
  EXPECT_LT(std::abs(poisson_extend(Params(1, 0), poly({{1, 1.0}}), z) - (2 - x) * z.z()), 1e-13);
  // Independent quadrature reference for a mixed-mode datum.
  const TrigPolynomial mixed{{1, 1.0}, {-2, 0.5}, {0, 0.25}};
  EXPECT_LT(std::abs(poisson_extend(Params(0.5, -0.75), poly(mixed), DiskPoint({-0.5, 0.2})) -
                     cdouble(-1.070129103897337505803463, 0.7253848074792898926477632)),
            1e-12);
  EXPECT_THROW(poisson_extend(Params(-0.6, -0.6), poly({{0, 1.0}}), z), DomainError);
}

TEST(PoissonExtend, NearCircleUsesBoostedNodes) {
  const DiskPoint z = DiskPoint::polar(0.99, 0.4);
  EXPECT_GE(extension_nodes(2048, z), quadrature_nodes(0.99));
  const Params p(0.5, 0.5);
  const BoundaryFunction f = poly({{2, 1.0}, {-1, cdouble(0, 1)}});
  EXPECT_LT(std::abs(poisson_extend(p, f, z) - eval_series(coeffs_from_boundary(p, f), z)), 1e-7);
}

TEST(Coefficients, Examples) {
  const TrigPolynomial fhat{{2, 1.0}, {-3, cdouble(0.5, 1)}};
  EXPECT_EQ(coeffs_from_boundary(Params(0, 0), fhat).coeffs, fhat);
  EXPECT_NEAR(std::abs(coeffs_from_boundary(Params(1, 0), TrigPolynomial{{1, 1.0}}).coeffs[1] - 2.0),
              0.0, 1e-14);
  EXPECT_TRUE(coeffs_from_boundary(Params(1, 1), TrigPolynomial{}).coeffs.empty());
}

TEST(Series, Examples) {
  const DiskPoint z({0.1, 0.7});
  const double x = std::norm(z.z());
  const Params p(0.3, 0.8);
  const Expansion only0{p, {{0, 2.0}}};
  EXPECT_NEAR(std::abs(eval_series(only0, z) - 2.0 * hyp2f1({-0.3, -0.8, 1}, x)), 0.0, 1e-14);
  const Expansion harmonic{Params(0, 0), {{2, 1.0}, {-1, 3.0}}};
  EXPECT_LT(std::abs(eval_series(harmonic, z) - (z.z() * z.z() + 3.0 * std::conj(z.z()))), 1e-14);
  EXPECT_LT(std::abs(dz_series(harmonic, z) - 2.0 * z.z()), 1e-14);
  EXPECT_LT(std::abs(dzbar_series(harmonic, z) - 3.0), 1e-14);
  // u = (2 - |z|^2) z  =>  u_z = 2 - 2|z|^2.
  const Expansion e{Params(1, 0), {{1, 2.0}}};
  EXPECT_LT(std::abs(dz_series(e, z) - (2 - 2 * x)), 1e-14);
}

TEST(Series, RealSymmetricData) {
  const Params p(0.6, 0.6);
  const Expansion e = coeffs_from_boundary(p, TrigPolynomial{{1, 0.5}, {-1, 0.5}, {3, 0.2}, {-3, 0.2}});
  const DiskPoint z({0.4, 0.3});
  EXPECT_LT(std::abs(dzbar_series(e, z) - std::conj(dz_series(e, z))), 1e-14);
}

// Property: quadrature and series agree, and the derivative triangle closes.
TEST(Series, TwoRoutesAndTriangle) {
  Rng rng(31);
  for (int t = 0; t < 12; ++t) {
    const Params p = random_params(rng);
    const BoundaryFunction f = poly(random_trig(rng, rng.integer(0, 8)));
    const Expansion e = coeffs_from_boundary(p, f);
    const DiskEval u = series_evaluator(e, Quantity::Value);
    for (int s = 0; s < 4; ++s) {
      const DiskPoint z = random_point(rng, 0.8);
      EXPECT_LT(std::abs(poisson_extend(p, f, z) - u(z)), 1e-7);
      const auto [fdz, fdzbar] = wirtinger(u, z);
      const cdouble dz = dz_series(e, z), dzbar = dzbar_series(e, z);
      EXPECT_LT(std::abs(dz - fdz), 1e-5);
      EXPECT_LT(std::abs(dzbar - fdzbar), 1e-5);
      EXPECT_LT(std::abs(zdz_decomposition(p, f, z) - z.z() * dz), 1e-6);
      EXPECT_LT(std::abs(zbar_dzbar_decomposition(p, f, z) - std::conj(z.z()) * dzbar), 1e-6);
      EXPECT_LT(std::abs(dtheta(p, f, z) - kI * (z.z() * dz - std::conj(z.z()) * dzbar)), 1e-6);
      EXPECT_LT(std::abs(series_evaluator(e, Quantity::ZDz)(z) - z.z() * dz), 1e-13);
      EXPECT_LT(std::abs(series_evaluator(e, Quantity::Dtheta)(z) - dtheta(p, f, z)), 1e-9);
    }
  }
}

TEST(Decomposition, Examples) {
  const BoundaryFunction one = poly({{0, 1.0}});
  EXPECT_LT(std::abs(zdz_decomposition(Params(0, 0), one, DiskPoint(0.4))), 1e-15);
  // u = (2 - |z|^2) z, z u_z = z (2 - 2|z|^2) = 0.75 at z = 0.5.
  EXPECT_LT(std::abs(zdz_decomposition(Params(1, 0), poly({{1, 1.0}}), DiskPoint(0.5)) - 0.75),
            1e-12);
  // Conjugate mirror: u = (2 - |z|^2) zbar for (0,1) and e^{-it}.
  EXPECT_LT(std::abs(zbar_dzbar_decomposition(Params(0, 1), poly({{-1, 1.0}}), DiskPoint(0.5)) -
                     0.75),
            1e-12);
  // f = 1: zbar u_zbar is radial.
  const Params p(0.5, 0.7);
  const DiskPoint z = DiskPoint::polar(0.6, 1.3);
  const cdouble w = zbar_dzbar_decomposition(p, one, z);
  EXPECT_LT(std::abs(w - zbar_dzbar_decomposition(p, one, DiskPoint(0.6))), 1e-12);
}

TEST(Dtheta, Examples) {
  const DiskPoint z({0.2, 0.5});
  EXPECT_LT(std::abs(dtheta(Params(0.3, 0.4), poly({{0, 1.0}}), z)), 1e-15);
  EXPECT_LT(std::abs(dtheta(Params(0, 0), poly({{1, 1.0}}), z) - kI * z.z()), 1e-13);
}

TEST(CircleMean, Examples) {
  const DiskEval id([](const DiskPoint& z) { return z.z(); });
  EXPECT_NEAR(std::abs(circle_mean(id, 1, 0.7) - 0.7), 0.0, 1e-14);
  EXPECT_LT(std::abs(circle_mean(id, 0, 0.7)), 1e-15);
  Rng rng(32);
  const Params p = random_negative_params(rng);
  const Expansion e = coeffs_from_boundary(p, random_trig(rng, 5));
  const DiskEval u = series_evaluator(e, Quantity::Value);
  const double r = 0.8;
  for (int n = -5; n <= 5; ++n) {
    const int m = std::abs(n);
    const double f = n >= 0 ? hyp2f1({-p.alpha(), m - p.beta(), m + 1.0}, r * r)
                            : hyp2f1({-p.beta(), m - p.alpha(), m + 1.0}, r * r);
    EXPECT_LT(std::abs(circle_mean(u, n, r) - e.coeffs[n] * f * std::pow(r, m)), 1e-12);
  }
}

TEST(OperatorResidual, Examples) {
  const DiskPoint z({0.3, 0.2});
  const DiskEval sq([](const DiskPoint& w) { return w.z() * w.z(); });
  EXPECT_LT(std::abs(operator_residual(Params(0, 0), sq, z)), 1e-6);
  for (const Params& p : {Params(1, 1), Params(-0.25, -0.25), Params(2, -0.5)}) {
    EXPECT_LT(std::abs(operator_residual(p, DiskEval([p](const DiskPoint& w) { return kernel_K(p, w); }), z)),
              1e-3);
    EXPECT_LT(std::abs(operator_residual(p, DiskEval([p](const DiskPoint& w) { return m_k(p, 2, w); }), z)),
              1e-3);
  }
  // A non-solution is detected.
  EXPECT_GT(std::abs(operator_residual(Params(0, 0), DiskEval([](const DiskPoint& w) {
                                         return cdouble(std::norm(w.z()));
                                       }),
                                       z)),
            0.1);
  EXPECT_THROW(operator_residual(Params(0, 0), sq, DiskPoint(0.9999)), StepTooLarge);
}

TEST(Polyharmonic, Examples) {
  const Params p(1, -1.5);
  const Expansion c0{p, {{0, 1.0}}};
  const PolyharmonicDecomposition d = polyharmonic_decompose(c0);
  ASSERT_EQ(d.analytic.size(), 2u);
  EXPECT_EQ(d.analytic[0], TrigPolynomial({{0, 1.0}}));
  // (-1)_1/1! * (0+1.5)_1/(1)_1 = -1.5.
  EXPECT_NEAR(std::abs(d.analytic[1][0] + 1.5), 0.0, 1e-15);
  const DiskPoint z({0.3, 0.5});
  EXPECT_LT(std::abs(d.evaluate(z) - hyp2f1({-1, 1.5, 1}, std::norm(z.z()))), 1e-14);

  const PolyharmonicDecomposition zero = polyharmonic_decompose(Expansion{p, {}});
  for (const auto& h : zero.analytic) EXPECT_TRUE(h.empty());

  EXPECT_THROW(polyharmonic_decompose(Expansion{Params(0.5, 0.2), {{0, 1.0}}}), PreconditionFailed);
  EXPECT_THROW(polyharmonic_decompose(Expansion{p, {{-2, 1.0}}}), PreconditionFailed);
}

TEST(Polyharmonic, ReconstructionProperty) {
  Rng rng(33);
  for (int alpha : {1, 2, 3}) {
    const Params p(alpha, rng.uniform(0.1, 0.9));
    TrigPolynomial fhat = random_trig(rng, 6);
    TrigPolynomial kept;
    for (const auto& [k, c] : fhat.coefficients()) {
      if (k >= -alpha) kept.set(k, c);
    }
    const Expansion e = coeffs_from_boundary(p, kept);
    const PolyharmonicDecomposition d = polyharmonic_decompose(e);
    EXPECT_EQ(d.analytic.size(), static_cast<std::size_t>(alpha + 1));
    for (int t = 0; t < 10; ++t) {
      const DiskPoint z = random_point(rng, 0.9);
      EXPECT_LT(std::abs(d.evaluate(z) - eval_series(e, z)), 1e-10);
    }
  }
}

TEST(RieszDerivative, Examples) {
  const BoundaryFunction f = poly({{1, 1.0}, {-1, 2.0}, {3, 0.5}});
  EXPECT_EQ(riesz_projected_derivative(f, 0), riesz_project(f));
  EXPECT_EQ(riesz_projected_derivative(poly({{1, 1.0}}), 2), TrigPolynomial({{1, -1.0}}));
  EXPECT_TRUE(riesz_projected_derivative(poly({{-1, 1.0}}), 3).empty());
}

TEST(Conjugated, SwapsParameters) {
  const Expansion e{Params(0.2, 0.9), {{2, cdouble(1, 2)}, {-1, 3.0}}};
  const Expansion c = conjugated(e);
  EXPECT_EQ(c.params.alpha(), 0.9);
  EXPECT_EQ(c.coeffs[-2], cdouble(1, -2));
  const DiskPoint z({-0.3, 0.4});
  EXPECT_LT(std::abs(eval_series(c, z) - std::conj(eval_series(e, z))), 1e-14);
}

}  // namespace
