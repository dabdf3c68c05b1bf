#include "abh/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "abh/errors.hpp"
#include "abh/fft.hpp"

namespace abh {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Full spectrum of a sample vector, index k in (-N/2, N/2).
std::vector<cdouble> forward_spectrum(const std::vector<cdouble>& samples) {
  std::vector<cdouble> data = samples;
  fft(data);
  const double inv = 1.0 / static_cast<double>(data.size());
  for (cdouble& v : data) v *= inv;
  return data;
}

cdouble spectral_at(const std::vector<cdouble>& spec, int k) {
  const auto n = static_cast<long>(spec.size());
  long idx = k % n;
  if (idx < 0) idx += n;
  return spec[static_cast<std::size_t>(idx)];
}

// Applies a Fourier multiplier m(k) to a sampled function; the Nyquist mode
// is dropped.
template <class Multiplier>
std::vector<cdouble> apply_multiplier(const std::vector<cdouble>& samples,
                                      Multiplier m) {
  std::vector<cdouble> data = forward_spectrum(samples);
  const auto n = static_cast<long>(data.size());
  for (long i = 0; i < n; ++i) {
    long k = i <= n / 2 ? i : i - n;
    if (k == n / 2) {
      data[static_cast<std::size_t>(i)] = 0.0;
      continue;
    }
    data[static_cast<std::size_t>(i)] *= m(static_cast<int>(k));
  }
  fft(data, true);
  return data;
}

template <class Multiplier>
TrigPolynomial apply_multiplier(const TrigPolynomial& p, Multiplier m) {
  TrigPolynomial out;
  for (const auto& [k, c] : p.coefficients()) out.set(k, c * m(k));
  return out;
}

}  // namespace

TrigPolynomial::TrigPolynomial(
    std::initializer_list<std::pair<const int, cdouble>> init) {
  for (const auto& [k, c] : init) set(k, c);
}

TrigPolynomial::TrigPolynomial(const std::map<int, cdouble>& coeffs) {
  for (const auto& [k, c] : coeffs) set(k, c);
}

void TrigPolynomial::set(int k, cdouble value) {
  if (value == cdouble(0.0)) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = value;
  }
}

void TrigPolynomial::add(int k, cdouble value) { set(k, (*this)[k] + value); }

cdouble TrigPolynomial::operator[](int k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? cdouble(0.0) : it->second;
}

int TrigPolynomial::max_frequency() const {
  int m = 0;
  for (const auto& [k, c] : coeffs_) m = std::max(m, std::abs(k));
  return m;
}

cdouble TrigPolynomial::evaluate(double theta) const {
  cdouble acc = 0.0;
  for (const auto& [k, c] : coeffs_) {
    acc += c * std::polar(1.0, static_cast<double>(k) * theta);
  }
  return acc;
}

std::vector<cdouble> TrigPolynomial::sample(std::size_t n) const {
  std::vector<cdouble> out(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = evaluate(step * static_cast<double>(j));
  }
  return out;
}

BoundaryFunction::BoundaryFunction(std::vector<cdouble> samples,
                                   std::optional<TrigPolynomial> exact)
    : samples_(std::move(samples)), exact_(std::move(exact)) {}

BoundaryFunction BoundaryFunction::from_polynomial(TrigPolynomial poly,
                                                   std::size_t n) {
  if (n < 4 || !is_pow2(n)) {
    throw DomainError("BoundaryFunction: N must be a power of two >= 4");
  }
  if (static_cast<std::size_t>(2 * poly.max_frequency()) >= n) {
    throw DomainError("BoundaryFunction: N must exceed twice the top frequency");
  }
  std::vector<cdouble> s = poly.sample(n);
  return BoundaryFunction(std::move(s), std::move(poly));
}

BoundaryFunction BoundaryFunction::from_samples(std::vector<cdouble> samples) {
  if (samples.size() < 4 || !is_pow2(samples.size())) {
    throw DomainError("BoundaryFunction: N must be a power of two >= 4");
  }
  return BoundaryFunction(std::move(samples), std::nullopt);
}

double BoundaryFunction::theta(std::size_t j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) /
         static_cast<double>(samples_.size());
}

BoundaryFunction BoundaryFunction::resampled(std::size_t n) const {
  if (n == size()) return *this;
  if (n < size() || !is_pow2(n)) {
    throw DomainError("resampled: target must be a larger power of two");
  }
  if (exact_) return from_polynomial(*exact_, n);
  // Zero-pad the spectrum; the Nyquist mode is split evenly between +-N/2.
  const std::vector<cdouble> spec = forward_spectrum(samples_);
  const auto old_n = static_cast<long>(size());
  std::vector<cdouble> data(n, 0.0);
  for (long k = -old_n / 2 + 1; k < old_n / 2; ++k) {
    const long dst = k >= 0 ? k : static_cast<long>(n) + k;
    data[static_cast<std::size_t>(dst)] = spectral_at(spec, static_cast<int>(k));
  }
  const cdouble nyq = spectral_at(spec, static_cast<int>(old_n / 2));
  data[static_cast<std::size_t>(old_n / 2)] = 0.5 * nyq;
  data[n - static_cast<std::size_t>(old_n / 2)] = 0.5 * nyq;
  fft(data, true);
  return from_samples(std::move(data));
}

TrigPolynomial BoundaryFunction::spectrum() const {
  if (exact_) return *exact_;
  const std::vector<cdouble> spec = forward_spectrum(samples_);
  double top = 0.0;
  for (const cdouble& c : spec) top = std::max(top, std::abs(c));
  const double floor = 1e-15 * top;
  TrigPolynomial out;
  const int half = static_cast<int>(size() / 2);
  for (int k = -half + 1; k < half; ++k) {
    const cdouble c = spectral_at(spec, k);
    if (std::abs(c) > floor) out.set(k, c);
  }
  return out;
}

TrigPolynomial fourier_coefficients(const BoundaryFunction& f, int max_k) {
  if (max_k < 0 || max_k > static_cast<int>(f.size() / 2) - 1) {
    throw DomainError("fourier_coefficients: K must satisfy 0 <= K <= N/2 - 1");
  }
  TrigPolynomial out;
  if (f.exact()) {
    for (const auto& [k, c] : f.exact()->coefficients()) {
      if (std::abs(k) <= max_k) out.set(k, c);
    }
    return out;
  }
  const std::vector<cdouble> spec = forward_spectrum(f.samples());
  for (int k = -max_k; k <= max_k; ++k) out.set(k, spectral_at(spec, k));
  return out;
}

BoundaryFunction derivative(const BoundaryFunction& f) {
  const auto mult = [](int k) { return cdouble(0.0, static_cast<double>(k)); };
  if (f.exact()) {
    return BoundaryFunction::from_polynomial(apply_multiplier(*f.exact(), mult),
                                             f.size());
  }
  return BoundaryFunction::from_samples(apply_multiplier(f.samples(), mult));
}

BoundaryFunction times_eikt(const BoundaryFunction& f, int k) {
  if (f.exact()) {
    TrigPolynomial shifted;
    for (const auto& [m, c] : f.exact()->coefficients()) shifted.set(m + k, c);
    std::size_t n = f.size();
    while (static_cast<std::size_t>(2 * shifted.max_frequency()) >= n) n *= 2;
    return BoundaryFunction::from_polynomial(std::move(shifted), n);
  }
  std::vector<cdouble> s = f.samples();
  for (std::size_t j = 0; j < s.size(); ++j) {
    s[j] *= std::polar(1.0, static_cast<double>(k) * f.theta(j));
  }
  return BoundaryFunction::from_samples(std::move(s));
}

BoundaryFunction times_eit(const BoundaryFunction& f) { return times_eikt(f, 1); }

double lp_norm(const BoundaryFunction& f, double p) {
  if (!(p >= 1.0)) throw DomainError("lp_norm: requires p >= 1");
  const std::vector<cdouble>& s = f.samples();
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cdouble& v : s) m = std::max(m, std::abs(v));
    return m;
  }
  double acc = 0.0;
  for (const cdouble& v : s) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(s.size()), 1.0 / p);
}

BoundaryFunction hilbert_transform(const BoundaryFunction& f) {
  const auto mult = [](int k) {
    return k > 0 ? cdouble(0.0, -1.0) : k < 0 ? cdouble(0.0, 1.0) : cdouble(0.0);
  };
  if (f.exact()) {
    return BoundaryFunction::from_polynomial(apply_multiplier(*f.exact(), mult),
                                             f.size());
  }
  return BoundaryFunction::from_samples(apply_multiplier(f.samples(), mult));
}

TrigPolynomial riesz_project(const BoundaryFunction& f) {
  TrigPolynomial out;
  const TrigPolynomial spec = f.spectrum();
  for (const auto& [k, c] : spec.coefficients()) {
    if (k >= 0) out.set(k, c);
  }
  return out;
}

}  // namespace abh
