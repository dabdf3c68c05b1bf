#include "abh/kernels.hpp"

#include <cmath>
#include <string>

#include "abh/errors.hpp"
#include "abh/parallel.hpp"
#include "abh/special_fn.hpp"

namespace abh {

namespace {

bool negative_integer(double x) {
  const double s = snap_integer(x);
  return s < 0.0 && s == std::nearbyint(s);
}

void require_radius(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError(std::string(who) + ": radius must lie in [0,1)");
  }
}

// (a)_n / n! as a running product.
double pochhammer_over_factorial(double a, std::uint32_t n) {
  double r = 1.0;
  for (std::uint32_t j = 0; j < n; ++j) {
    r *= (a + static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return r;
}

// m_k_dzbar(z) = coefficient(|z|) * z^{k+1}.
double m_k_dzbar_coefficient(const Params& p, std::uint32_t k, double x) {
  const double a = p.alpha();
  const double b = p.beta();
  const double dk = static_cast<double>(k);
  const double pref = (dk - b) * pochhammer_over_factorial(a, k + 1);
  if (pref == 0.0) return 0.0;
  const double weight = std::pow(1.0 - x, a + b);
  return -c_alpha_beta(p) * pref * weight *
         hyp2f1({dk + a + 1.0, b + 1.0, dk + 2.0}, x);
}

}  // namespace

Params::Params(double alpha, double beta)
    : alpha_(snap_integer(alpha)), beta_(snap_integer(beta)) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("Params: non-finite parameter");
  }
  if (negative_integer(alpha_) || negative_integer(beta_)) {
    throw DomainError("Params: alpha and beta must not be negative integers");
  }
}

bool Params::alpha_natural() const { return is_natural(alpha_); }
bool Params::beta_natural() const { return is_natural(beta_); }

const Params& Params::require_poisson() const {
  if (!(sum() > -1.0)) {
    throw DomainError("Params: Poisson integral requires alpha + beta > -1");
  }
  return *this;
}

bool Params::admissible(double alpha, double beta) {
  return std::isfinite(alpha) && std::isfinite(beta) &&
         !negative_integer(alpha) && !negative_integer(beta);
}

DiskPoint::DiskPoint(cdouble z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
      !(std::abs(z) < 1.0)) {
    throw DomainError("DiskPoint: point must lie in the open unit disc");
  }
}

DiskPoint DiskPoint::polar(double r, double theta) {
  return DiskPoint(std::polar(r, theta));
}

double DiskPoint::weight() const { return 1.0 - std::norm(z_); }

std::size_t quadrature_nodes(double r) {
  const double needed = std::ceil(64.0 / (1.0 - r));
  return std::max<std::size_t>(1024, static_cast<std::size_t>(needed));
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

double c_alpha_beta(const Params& p) {
  return gamma(p.alpha() + 1.0) * gamma(p.beta() + 1.0) *
         rgamma(p.sum() + 1.0);
}

double c_lambda(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("c_lambda: requires lambda > 0");
  const double g = gamma(0.5 * lambda + 0.5);
  return gamma(lambda) / (g * g);
}

cdouble kernel_K(double a, double b, cdouble z) {
  const double weight = 1.0 - std::norm(z);
  const cdouble log_w = std::log(1.0 - z);
  return std::pow(weight, a + b + 1.0) *
         std::exp(-(a + 1.0) * log_w - (b + 1.0) * std::conj(log_w));
}

cdouble kernel_K(const Params& p, const DiskPoint& z) {
  return kernel_K(p.alpha(), p.beta(), z.z());
}

cdouble poisson_kernel(const Params& p, const DiskPoint& z) {
  return c_alpha_beta(p) * kernel_K(p, z);
}

cdouble kernel_dz(const Params& p, const DiskPoint& z) {
  const double a = p.alpha();
  const double b = p.beta();
  const cdouble log_w = std::log(1.0 - z.z());
  const double weight = std::pow(z.weight(), a + b);
  const cdouble first =
      (a + 1.0) * std::exp(-(a + 2.0) * log_w - b * std::conj(log_w));
  const cdouble second = b * std::conj(z.z()) *
                         std::exp(-(a + 1.0) * log_w - (b + 1.0) * std::conj(log_w));
  return weight * (first - second);
}

cdouble kernel_dzbar(const Params& p, const DiskPoint& z) {
  const double a = p.alpha();
  const double b = p.beta();
  const cdouble log_w = std::log(1.0 - z.z());
  const double weight = std::pow(z.weight(), a + b);
  const cdouble first =
      (b + 1.0) * std::exp(-a * log_w - (b + 2.0) * std::conj(log_w));
  const cdouble second =
      a * z.z() * std::exp(-(a + 1.0) * log_w - (b + 1.0) * std::conj(log_w));
  return weight * (first - second);
}

double i_lambda(double lambda, double r) {
  if (!(lambda > -1.0)) throw DomainError("i_lambda: requires lambda > -1");
  require_radius(r, "i_lambda");
  if (r == 0.0) return 1.0;
  const std::size_t n = quadrature_nodes(r);
  const double numer = std::pow((1.0 - r) * (1.0 + r), lambda);
  const double expo = 0.5 * (lambda + 1.0);
  const double step = 2.0 * M_PI / static_cast<double>(n);
  return parallel::periodic_mean<double>(n, [&](std::size_t j) {
    const double s = std::sin(0.5 * step * static_cast<double>(j));
    // |1 - r e^{-it}|^2 = (1-r)^2 + 4 r sin^2(t/2)
    const double dist2 = (1.0 - r) * (1.0 - r) + 4.0 * r * s * s;
    return numer / std::pow(dist2, expo);
  });
}

double m_radial(const Params& p, double r) {
  require_radius(r, "m_radial");
  return c_alpha_beta(p) * hyp2f1({-p.alpha(), -p.beta(), 1.0}, r * r);
}

cdouble m_k(const Params& p, std::uint32_t k, const DiskPoint& z) {
  const double dk = static_cast<double>(k);
  const double x = std::norm(z.z());
  const double radial = c_alpha_beta(p) *
                        pochhammer_over_factorial(p.alpha() + 1.0, k) *
                        hyp2f1({-p.alpha(), dk - p.beta(), dk + 1.0}, x);
  return radial * std::pow(z.z(), static_cast<int>(k));
}

cdouble m_k_dzbar(const Params& p, std::uint32_t k, const DiskPoint& z) {
  const double coef = m_k_dzbar_coefficient(p, k, std::norm(z.z()));
  if (coef == 0.0) return 0.0;
  return coef * std::pow(z.z(), static_cast<int>(k + 1));
}

double m_k_dzbar_radial(const Params& p, std::uint32_t k, double r) {
  require_radius(r, "m_k_dzbar_radial");
  return m_k_dzbar_coefficient(p, k, r * r) *
         std::pow(r, static_cast<double>(k + 1));
}

Params t_alpha_params(double alpha) {
  if (!(alpha > -1.0)) throw DomainError("t_alpha_params: requires alpha > -1");
  return Params(0.5 * alpha, 0.5 * alpha);
}

}  // namespace abh
