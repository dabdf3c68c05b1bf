#pragma once

// Real-argument Gamma, digamma, Pochhammer and Gauss hypergeometric 2F1.
//
// All functions are pure and reentrant.

#include <cstdint>

namespace abh {

/// Tolerance used to snap a real parameter onto an integer.
inline constexpr double kIntegerSnap = 1e-12;

/// Returns the nearest integer if x lies within kIntegerSnap of it, else x.
double snap_integer(double x);

/// True if x is (after snapping) an integer <= 0.
bool is_nonpositive_integer(double x);

/// True if x is (after snapping) an integer >= 0.
bool is_natural(double x);

/// Gamma function. Lanczos (g=7, 9 terms) with reflection below 0.5.
/// Throws PoleError at non-positive integers.
double gamma(double x);

/// 1/Gamma(x); zero at the poles of Gamma.
double rgamma(double x);

/// log|Gamma(x)|, finite away from poles. sign receives the sign of Gamma(x).
double log_abs_gamma(double x, int* sign = nullptr);

/// Digamma psi(x) = Gamma'(x)/Gamma(x). Throws PoleError at the poles.
double digamma(double x);

/// Rising factorial (a)_n computed by plain product.
double pochhammer(double a, std::uint32_t n);

struct HypParams {
  double a;
  double b;
  double c;
};

/// Gauss series F(a,b;c;x) for 0 <= x < 1.
///
/// Terminating series (a or b a non-positive integer) are summed exactly.
/// Otherwise the series is truncated once three consecutive terms drop below
/// 1e-15 of the partial sum (cap 100000 terms). For x > 0.9 with c-a-b < 0
/// the Euler transformation is used; for x > 0.99 the 1-x connection
/// formulas are used (logarithmic form when c-a-b is an integer).
///
/// Throws DomainError for invalid c or x, NoConvergence if the cap is hit.
double hyp2f1(const HypParams& p, double x);

/// (1-x)^{c-a-b} F(c-a, c-b; c; x).
double euler_transform(const HypParams& p, double x);

/// d/dx F(a,b;c;x) = (ab/c) F(a+1,b+1;c+1;x).
double hyp2f1_derivative(const HypParams& p, double x);

/// Gauss summation F(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)).
/// Requires c-a-b > 0 (DomainError otherwise). Returns exactly 0 when a
/// denominator Gamma sits on a pole.
double hyp2f1_at_one(const HypParams& p);

/// Coefficient of log(1-x) in F(a,b;a+b;x) as x -> 1-, i.e.
/// -Gamma(a+b)/(Gamma(a)Gamma(b)).
double gauss_log_coefficient(double a, double b);

}  // namespace abh
