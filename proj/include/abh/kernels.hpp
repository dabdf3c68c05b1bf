#pragma once

// (alpha,beta)-Poisson kernels on the unit disc, their Wirtinger derivatives,
// the radial integrals I_lambda and the radial solutions M_{alpha,beta} and
// M_{alpha,beta,k}.

#include <complex>
#include <cstddef>
#include <cstdint>

namespace abh {

using cdouble = std::complex<double>;

/// Parameter pair (alpha, beta). Neither may be a negative integer; values
/// within 1e-12 of an integer are snapped onto it.
class Params {
 public:
  Params(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double sum() const { return alpha_ + beta_; }

  /// (beta, alpha): the parameters of the conjugate function.
  Params swapped() const { return Params(beta_, alpha_); }

  bool alpha_natural() const;
  bool beta_natural() const;

  /// Throws DomainError unless alpha + beta > -1 (needed by every Poisson
  /// integral).
  const Params& require_poisson() const;

  /// True if (a, b) satisfies the constructor invariants.
  static bool admissible(double alpha, double beta);

 private:
  double alpha_;
  double beta_;
};

/// A point of the open unit disc.
class DiskPoint {
 public:
  explicit DiskPoint(cdouble z);
  static DiskPoint polar(double r, double theta);

  cdouble z() const { return z_; }
  double r() const { return std::abs(z_); }
  double theta() const { return std::arg(z_); }
  /// 1 - |z|^2
  double weight() const;

 private:
  cdouble z_;
};

/// Nodes of the periodic trapezoid rule used for kernel integrals at radius r:
/// max(1024, ceil(64/(1-r))).
std::size_t quadrature_nodes(double r);

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

double c_alpha_beta(const Params& p);

/// Gamma(lambda) / Gamma(lambda/2 + 1/2)^2, the limit of I_lambda(r).
double c_lambda(double lambda);

/// (1-|z|^2)^{a+b+1} / ((1-z)^{a+1} (1-zbar)^{b+1}) for arbitrary real
/// exponents. Principal branch; Re(1-z) > 0 on the disc.
cdouble kernel_K(double a, double b, cdouble z);
cdouble kernel_K(const Params& p, const DiskPoint& z);

/// c_{alpha,beta} K_{alpha,beta}(z).
cdouble poisson_kernel(const Params& p, const DiskPoint& z);

cdouble kernel_dz(const Params& p, const DiskPoint& z);
cdouble kernel_dzbar(const Params& p, const DiskPoint& z);

/// (1/2pi) int (1-r^2)^lambda / |1 - r e^{-it}|^{lambda+1} dt.
double i_lambda(double lambda, double r);

/// M_{alpha,beta}(r) = c_{alpha,beta} F(-alpha, -beta; 1; r^2).
double m_radial(const Params& p, double r);

/// M_{alpha,beta,k}(z) = P_{alpha,beta}[e^{ik theta}](z), k >= 0.
cdouble m_k(const Params& p, std::uint32_t k, const DiskPoint& z);

/// d/dzbar of M_{alpha,beta,k}, Euler-transformed closed form.
cdouble m_k_dzbar(const Params& p, std::uint32_t k, const DiskPoint& z);

/// Radial factor of m_k_dzbar: m_k_dzbar(z) = factor(|z|) * e^{i(k+1) arg z}.
double m_k_dzbar_radial(const Params& p, std::uint32_t k, double r);

/// T_alpha-harmonic functions are the (alpha/2, alpha/2)-harmonic ones.
Params t_alpha_params(double alpha);

}  // namespace abh
