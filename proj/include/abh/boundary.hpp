#pragma once

// Boundary data on the unit circle: uniform samples, optionally backed by an
// exact trigonometric polynomial, plus the spectral operations the theory
// uses (Fourier coefficients, angular derivative, shift by e^{ikt}, L^p norms,
// Hilbert transform, Riesz projection).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace abh {

using cdouble = std::complex<double>;

inline constexpr std::size_t kDefaultSamples = 2048;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Finite Fourier series sum_k c_k e^{ik theta}. Zero coefficients are never
/// stored.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  TrigPolynomial(std::initializer_list<std::pair<const int, cdouble>> init);
  explicit TrigPolynomial(const std::map<int, cdouble>& coeffs);

  /// Sets c_k; a zero value removes the entry.
  void set(int k, cdouble value);
  void add(int k, cdouble value);
  cdouble operator[](int k) const;

  const std::map<int, cdouble>& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  /// max |k| over the support, 0 when empty.
  int max_frequency() const;

  cdouble evaluate(double theta) const;
  /// Values at theta_j = 2 pi j / n.
  std::vector<cdouble> sample(std::size_t n) const;

  friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;

 private:
  std::map<int, cdouble> coeffs_;
};

/// 2pi-periodic boundary function f(e^{i theta}) sampled at theta_j = 2pi j/N.
class BoundaryFunction {
 public:
  /// N must be a power of two >= 4 and exceed twice the top frequency.
  static BoundaryFunction from_polynomial(TrigPolynomial poly,
                                          std::size_t n = kDefaultSamples);
  /// Samples-only function; N must be a power of two >= 4.
  static BoundaryFunction from_samples(std::vector<cdouble> samples);

  std::size_t size() const { return samples_.size(); }
  const std::vector<cdouble>& samples() const { return samples_; }
  const std::optional<TrigPolynomial>& exact() const { return exact_; }
  double theta(std::size_t j) const;

  /// Same function on a finer power-of-two grid. Exact functions are
  /// re-evaluated; sampled ones are trigonometrically interpolated.
  BoundaryFunction resampled(std::size_t n) const;

  /// All coefficients f^(k), |k| < N/2 (exact map when available). Sampled
  /// spectra drop entries below round-off relative to the largest one.
  TrigPolynomial spectrum() const;

 private:
  BoundaryFunction(std::vector<cdouble> samples,
                   std::optional<TrigPolynomial> exact);

  std::vector<cdouble> samples_;
  std::optional<TrigPolynomial> exact_;
};

/// f^(k) = (1/N) sum_j f(theta_j) e^{-ik theta_j} for |k| <= max_k.
/// DomainError if max_k > N/2 - 1.
TrigPolynomial fourier_coefficients(const BoundaryFunction& f, int max_k);

/// Spectral angular derivative d/dtheta f; exact for exact inputs.
BoundaryFunction derivative(const BoundaryFunction& f);

/// e^{ikt} f(e^{it}); spectrally a shift of the coefficients by k.
BoundaryFunction times_eikt(const BoundaryFunction& f, int k);

/// f_1(e^{it}) = e^{it} f(e^{it}).
BoundaryFunction times_eit(const BoundaryFunction& f);

/// Discrete L^p norm on the sample grid; p = kInfinity gives the grid max.
double lp_norm(const BoundaryFunction& f, double p);

/// Fourier multiplier -i sign(n); the mean is annihilated.
BoundaryFunction hilbert_transform(const BoundaryFunction& f);

/// Coefficients with k >= 0.
TrigPolynomial riesz_project(const BoundaryFunction& f);

}  // namespace abh
