#include "abh/special_fn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "abh/errors.hpp"

namespace abh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint32_t kTermCap = 100000;
constexpr double kSeriesTol = 1e-15;
// Above this argument the 1-x connection formulas replace the direct sum.
constexpr double kNearOne = 0.99;
// Distance from an integer below which c-a-b is treated as an integer gap.
constexpr double kGapSnap = 1e-8;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// sin(pi x) with argument reduction so that integers give exact zeros.
double sin_pi(double x) {
  const double n = std::nearbyint(x);
  const double f = x - n;
  const double s = std::sin(kPi * f);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double cos_pi(double x) {
  const double n = std::nearbyint(x);
  const double f = x - n;
  const double c = std::cos(kPi * f);
  return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

// Lanczos sum for x >= 0.5.
double lanczos_gamma(double x) {
  x -= 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (x + static_cast<double>(i));
  }
  const double t = x + kLanczosG + 0.5;
  // Split the power so t^(x+1/2) does not overflow before e^-t is applied.
  const double half = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * kPi) * (half * std::exp(-t)) * half * acc;
}

double lanczos_log_gamma(double x) {
  x -= 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (x + static_cast<double>(i));
  }
  const double t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t +
         std::log(acc);
}

// prod Gamma(num[i]) / prod Gamma(den[j]). A pole in a denominator makes the
// ratio vanish; a pole in the numerator is an error.
template <std::size_t N, std::size_t M>
double gamma_ratio(const std::array<double, N>& num,
                   const std::array<double, M>& den) {
  for (double d : den) {
    if (is_nonpositive_integer(d)) return 0.0;
  }
  bool large = false;
  for (double v : num) large = large || std::abs(v) > 100.0;
  for (double v : den) large = large || std::abs(v) > 100.0;
  if (!large) {
    double r = 1.0;
    for (double v : num) r *= gamma(v);
    for (double v : den) r *= rgamma(v);
    return r;
  }
  double log_sum = 0.0;
  int sign = 1;
  for (double v : num) {
    if (is_nonpositive_integer(v)) {
      throw PoleError("gamma pole at " + std::to_string(v));
    }
    int s = 1;
    log_sum += log_abs_gamma(v, &s);
    sign *= s;
  }
  for (double v : den) {
    int s = 1;
    log_sum -= log_abs_gamma(v, &s);
    sign *= s;
  }
  return sign * std::exp(log_sum);
}

bool is_valid_c(double c) { return !is_nonpositive_integer(c); }

// Direct Gauss series with the three-small-terms stopping rule.
double gauss_series(double a, double b, double c, double x) {
  double term = 1.0;
  double sum = 1.0;
  int small = 0;
  for (std::uint32_t n = 0; n < kTermCap; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    sum += term;
    if (std::abs(term) < kSeriesTol * std::abs(sum) || term == 0.0) {
      if (++small == 3) return sum;
    } else {
      small = 0;
    }
  }
  throw NoConvergence("hyp2f1 series did not converge within 100000 terms");
}

// Exact terminating sum; m is the number of non-zero terms minus one.
double terminating_sum(double a, double b, double c, double x,
                       std::uint32_t m) {
  double term = 1.0;
  double sum = 1.0;
  for (std::uint32_t n = 0; n < m; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    sum += term;
  }
  return sum;
}

// F(a,b;a+b+m;x) for integer m >= 0, in powers of w = 1-x with log(w).
double degenerate_near_one(double a, double b, std::uint32_t m, double x) {
  const double w = 1.0 - x;
  const double dm = static_cast<double>(m);
  const double c = a + b + dm;

  double finite = 0.0;
  if (m > 0) {
    double term = 1.0;
    for (std::uint32_t n = 0; n < m; ++n) {
      finite += term;
      const double dn = static_cast<double>(n);
      term *= (a + dn) * (b + dn) / ((dn + 1.0) * (1.0 - dm + dn)) * w;
    }
    finite *= gamma_ratio<2, 2>({dm, c}, {a + dm, b + dm});
  }

  const double log_w = std::log(w);
  double psi_n1 = digamma(1.0);
  double psi_nm1 = digamma(dm + 1.0);
  double psi_a = digamma(a + dm);
  double psi_b = digamma(b + dm);
  // coefficient (a+m)_n (b+m)_n / (n! (n+m)!)
  double coef = 1.0;
  for (std::uint32_t j = 1; j <= m; ++j) coef /= static_cast<double>(j);
  double wn = 1.0;
  double sum = 0.0;
  int small = 0;
  for (std::uint32_t n = 0; n < kTermCap; ++n) {
    const double term =
        coef * wn * (log_w - psi_n1 - psi_nm1 + psi_a + psi_b);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++small == 3) break;
    } else {
      small = 0;
    }
    const double dn = static_cast<double>(n);
    coef *= (a + dm + dn) * (b + dm + dn) / ((dn + 1.0) * (dn + dm + 1.0));
    wn *= w;
    psi_n1 += 1.0 / (dn + 1.0);
    psi_nm1 += 1.0 / (dn + dm + 1.0);
    psi_a += 1.0 / (a + dm + dn);
    psi_b += 1.0 / (b + dm + dn);
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double pref = gamma_ratio<1, 2>({c}, {a, b});
  return finite - sign * pref * std::pow(w, dm) * sum;
}

// F(a,b;c;x) for x close to 1 and c-a-b >= 0 (non-terminating a, b).
double near_one(double a, double b, double c, double x) {
  const double gap = c - a - b;
  const double m = std::nearbyint(gap);
  if (std::abs(gap - m) < kGapSnap) {
    return degenerate_near_one(a, b, static_cast<std::uint32_t>(m), x);
  }
  const double w = 1.0 - x;
  const double first =
      gamma_ratio<2, 2>({c, gap}, {c - a, c - b}) *
      hyp2f1({a, b, 1.0 - gap}, w);
  const double second = gamma_ratio<2, 2>({c, -gap}, {a, b}) *
                        std::pow(w, gap) * hyp2f1({c - a, c - b, 1.0 + gap}, w);
  return first + second;
}

}  // namespace

double snap_integer(double x) {
  const double n = std::nearbyint(x);
  return std::abs(x - n) < kIntegerSnap ? n : x;
}

bool is_nonpositive_integer(double x) {
  const double s = snap_integer(x);
  return s <= 0.0 && s == std::nearbyint(s);
}

bool is_natural(double x) {
  const double s = snap_integer(x);
  return s >= 0.0 && s == std::nearbyint(s);
}

double gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma pole at " + std::to_string(x));
  }
  if (x < 0.5) {
    return kPi / (sin_pi(x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma(x);
}

double log_abs_gamma(double x, int* sign) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("log_abs_gamma pole at " + std::to_string(x));
  }
  if (x < 0.5) {
    const double s = sin_pi(x);
    if (sign != nullptr) *sign = s < 0.0 ? -1 : 1;
    return std::log(kPi / std::abs(s)) - lanczos_log_gamma(1.0 - x);
  }
  if (sign != nullptr) *sign = 1;
  return lanczos_log_gamma(x);
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("digamma pole at " + std::to_string(x));
  }
  if (x < 0.5) {
    return digamma(1.0 - x) - kPi * cos_pi(x) / sin_pi(x);
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // Asymptotic series in Bernoulli numbers.
  const double tail =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 -
                                              inv2 * (691.0 / 32760.0))))));
  return acc + std::log(x) - 0.5 / x - tail;
}

double pochhammer(double a, std::uint32_t n) {
  double r = 1.0;
  for (std::uint32_t k = 0; k < n; ++k) r *= a + static_cast<double>(k);
  return r;
}

double hyp2f1(const HypParams& p, double x) {
  if (!is_valid_c(p.c)) {
    throw DomainError("hyp2f1: c must not be a non-positive integer");
  }
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("hyp2f1: argument must lie in [0,1)");
  }
  const double a = snap_integer(p.a);
  const double b = snap_integer(p.b);
  const double c = p.c;
  if (x == 0.0) return 1.0;

  const bool term_a = is_nonpositive_integer(a);
  const bool term_b = is_nonpositive_integer(b);
  if (term_a || term_b) {
    double m = 0.0;
    if (term_a && term_b) {
      m = std::min(-a, -b);
    } else {
      m = term_a ? -a : -b;
    }
    return terminating_sum(a, b, c, x, static_cast<std::uint32_t>(m));
  }

  const double gap = c - a - b;
  if (x > kNearOne) {
    if (gap < -kGapSnap) return euler_transform({a, b, c}, x);
    return near_one(a, b, c, x);
  }
  if (gap < 0.0 && x > 0.9) return euler_transform({a, b, c}, x);
  return gauss_series(a, b, c, x);
}

double euler_transform(const HypParams& p, double x) {
  if (!is_valid_c(p.c)) {
    throw DomainError("euler_transform: c must not be a non-positive integer");
  }
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("euler_transform: argument must lie in [0,1)");
  }
  const double gap = p.c - p.a - p.b;
  return std::pow(1.0 - x, gap) * hyp2f1({p.c - p.a, p.c - p.b, p.c}, x);
}

double hyp2f1_derivative(const HypParams& p, double x) {
  if (!is_valid_c(p.c) || !is_valid_c(p.c + 1.0)) {
    throw DomainError("hyp2f1_derivative: inadmissible c");
  }
  const double pref = p.a * p.b / p.c;
  if (pref == 0.0) {
    if (!(x >= 0.0 && x < 1.0)) {
      throw DomainError("hyp2f1_derivative: argument must lie in [0,1)");
    }
    return 0.0;
  }
  return pref * hyp2f1({p.a + 1.0, p.b + 1.0, p.c + 1.0}, x);
}

double hyp2f1_at_one(const HypParams& p) {
  if (!is_valid_c(p.c)) {
    throw DomainError("hyp2f1_at_one: c must not be a non-positive integer");
  }
  const double gap = p.c - p.a - p.b;
  if (!(gap > 0.0)) {
    throw DomainError("hyp2f1_at_one: requires c - a - b > 0");
  }
  return gamma_ratio<2, 2>({p.c, gap}, {p.c - p.a, p.c - p.b});
}

double gauss_log_coefficient(double a, double b) {
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    throw PoleError("gauss_log_coefficient: a and b must not be poles");
  }
  return -gamma(a + b) / (gamma(a) * gamma(b));
}

}  // namespace abh
