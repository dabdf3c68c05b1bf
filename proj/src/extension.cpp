#include "abh/extension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "abh/errors.hpp"
#include "abh/parallel.hpp"
#include "abh/special_fn.hpp"

namespace abh {

namespace {

constexpr cdouble kI(0.0, 1.0);

double rpow(double r, int k) { return k == 0 ? 1.0 : std::pow(r, k); }

// F(-a, k-b; k+1; x): radial factor of the z^k term.
double radial_positive(const Params& p, int k, double x) {
  const double dk = static_cast<double>(k);
  return hyp2f1({-p.alpha(), dk - p.beta(), dk + 1.0}, x);
}

// F(-b, k-a; k+1; x): radial factor of the zbar^k term.
double radial_negative(const Params& p, int k, double x) {
  const double dk = static_cast<double>(k);
  return hyp2f1({-p.beta(), dk - p.alpha(), dk + 1.0}, x);
}

TrigPolynomial value_modes(const Expansion& e, double r) {
  const double x = r * r;
  TrigPolynomial out;
  for (const auto& [k, c] : e.coeffs.coefficients()) {
    const int n = std::abs(k);
    const double f = k >= 0 ? radial_positive(e.params, n, x)
                            : radial_negative(e.params, n, x);
    out.add(k, c * f * rpow(r, n));
  }
  return out;
}

TrigPolynomial dz_modes(const Expansion& e, double r) {
  const double a = e.params.alpha();
  const double b = e.params.beta();
  const double x = r * r;
  const double weight = std::pow((1.0 - r) * (1.0 + r), a + b);
  TrigPolynomial out;
  for (const auto& [k, c] : e.coeffs.coefficients()) {
    if (k < 0) {
      // c_{-n} (-b)(n-a)/(n+1) (1-x)^{a+b} F(n+b+1, a+1; n+2; x) zbar^{n+1}
      const int n = -k;
      const double dn = static_cast<double>(n);
      const double pref = -b * (dn - a) / (dn + 1.0);
      if (pref == 0.0) continue;
      const double f = hyp2f1({dn + b + 1.0, a + 1.0, dn + 2.0}, x);
      out.add(-(n + 1), c * pref * weight * f * rpow(r, n + 1));
    } else {
      // c_n (-a)(n-b)/(n+1) (1-x)^{a+b} F(n+a+1, b+1; n+2; x) zbar z^n
      //   + n c_n F(-a, n-b; n+1; x) z^{n-1}
      const int n = k;
      const double dn = static_cast<double>(n);
      const double pref = -a * (dn - b) / (dn + 1.0);
      if (pref != 0.0) {
        const double f = hyp2f1({dn + a + 1.0, b + 1.0, dn + 2.0}, x);
        out.add(n - 1, c * pref * weight * f * rpow(r, n + 1));
      }
      if (n > 0) {
        out.add(n - 1, dn * c * radial_positive(e.params, n, x) * rpow(r, n - 1));
      }
    }
  }
  return out;
}

TrigPolynomial conj_reflect(const TrigPolynomial& m) {
  TrigPolynomial out;
  for (const auto& [k, c] : m.coefficients()) out.set(-k, std::conj(c));
  return out;
}

TrigPolynomial shift_scale(const TrigPolynomial& m, int shift, double scale) {
  TrigPolynomial out;
  for (const auto& [k, c] : m.coefficients()) out.set(k + shift, c * scale);
  return out;
}

std::vector<cdouble> sample_modes(const TrigPolynomial& modes, std::size_t n) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  return parallel::map<cdouble>(n, [&](std::size_t j) {
    return modes.evaluate(step * static_cast<double>(j));
  });
}

}  // namespace

DiskEval::DiskEval(PointFn point, CircleFn circle)
    : point_(std::move(point)), circle_(std::move(circle)) {}

std::vector<cdouble> DiskEval::on_circle(double r, std::size_t n) const {
  if (circle_) return circle_(r, n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  return parallel::map<cdouble>(n, [&](std::size_t j) {
    return point_(DiskPoint::polar(r, step * static_cast<double>(j)));
  });
}

Expansion conjugated(const Expansion& e) {
  Expansion out{e.params.swapped(), {}};
  for (const auto& [k, c] : e.coeffs.coefficients()) out.coeffs.set(-k, std::conj(c));
  return out;
}

TrigPolynomial radial_modes(const Expansion& e, Quantity q, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("radial_modes: radius must lie in [0,1)");
  }
  switch (q) {
    case Quantity::Value:
      return value_modes(e, r);
    case Quantity::Dz:
      return dz_modes(e, r);
    case Quantity::Dzbar:
      return conj_reflect(dz_modes(conjugated(e), r));
    case Quantity::Dtheta: {
      TrigPolynomial out;
      const TrigPolynomial modes = value_modes(e, r);
      for (const auto& [k, c] : modes.coefficients()) {
        out.set(k, kI * static_cast<double>(k) * c);
      }
      return out;
    }
    case Quantity::ZDz:
      return shift_scale(dz_modes(e, r), 1, r);
    case Quantity::ZbarDzbar:
      return shift_scale(conj_reflect(dz_modes(conjugated(e), r)), -1, r);
  }
  throw DomainError("radial_modes: unknown quantity");
}

std::size_t extension_nodes(std::size_t samples, const DiskPoint& z) {
  if (z.r() <= 0.9) return samples;
  return std::max(samples, next_pow2(quadrature_nodes(z.r())));
}

cdouble kernel_integral(double a, double b, const BoundaryFunction& g,
                        const DiskPoint& z) {
  const std::size_t n = extension_nodes(g.size(), z);
  const BoundaryFunction fine = g.resampled(n);
  const std::vector<cdouble>& s = fine.samples();
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  const cdouble zz = z.z();
  return parallel::periodic_mean<cdouble>(n, [&](std::size_t j) {
    const cdouble w = zz * std::polar(1.0, -step * static_cast<double>(j));
    return kernel_K(a, b, w) * s[j];
  });
}

cdouble poisson_extend(const Params& p, const BoundaryFunction& f,
                       const DiskPoint& z) {
  p.require_poisson();
  return c_alpha_beta(p) * kernel_integral(p.alpha(), p.beta(), f, z);
}

Expansion coeffs_from_boundary(const Params& p, const TrigPolynomial& fhat) {
  p.require_poisson();
  Expansion out{p, {}};
  for (const auto& [k, v] : fhat.coefficients()) {
    const int n = std::abs(k);
    const double dn = static_cast<double>(n);
    const double den =
        k >= 0 ? hyp2f1_at_one({-p.alpha(), dn - p.beta(), dn + 1.0})
               : hyp2f1_at_one({-p.beta(), dn - p.alpha(), dn + 1.0});
    if (den == 0.0) {
      if (v != cdouble(0.0)) {
        throw DegenerateCoefficient("coefficient " + std::to_string(k) +
                                    " has a vanishing Gauss denominator");
      }
      continue;
    }
    out.coeffs.set(k, v / den);
  }
  return out;
}

Expansion coeffs_from_boundary(const Params& p, const BoundaryFunction& f) {
  return coeffs_from_boundary(p, f.spectrum());
}

cdouble eval_series(const Expansion& e, const DiskPoint& z) {
  return radial_modes(e, Quantity::Value, z.r()).evaluate(z.theta());
}

cdouble dz_series(const Expansion& e, const DiskPoint& z) {
  return radial_modes(e, Quantity::Dz, z.r()).evaluate(z.theta());
}

cdouble dzbar_series(const Expansion& e, const DiskPoint& z) {
  return radial_modes(e, Quantity::Dzbar, z.r()).evaluate(z.theta());
}

cdouble dtheta(const Params& p, const BoundaryFunction& f, const DiskPoint& z) {
  return poisson_extend(p, derivative(f), z);
}

cdouble zdz_decomposition(const Params& p, const BoundaryFunction& f,
                          const DiskPoint& z) {
  p.require_poisson();
  const double a = p.alpha();
  const double b = p.beta();
  const cdouble first = kernel_integral(a, b - 1.0, derivative(f), z);
  cdouble second = 0.0;
  if (b != 0.0) {
    second = kI * b * std::conj(z.z()) * kernel_integral(a - 1.0, b, times_eit(f), z);
  }
  return -kI * c_alpha_beta(p) * (first + second);
}

cdouble zbar_dzbar_decomposition(const Params& p, const BoundaryFunction& f,
                                 const DiskPoint& z) {
  p.require_poisson();
  const double a = p.alpha();
  const double b = p.beta();
  const cdouble first = kernel_integral(a - 1.0, b, derivative(f), z);
  cdouble second = 0.0;
  if (a != 0.0) {
    second = kI * a * z.z() * kernel_integral(a, b - 1.0, times_eikt(f, -1), z);
  }
  return kI * c_alpha_beta(p) * (first - second);
}

cdouble circle_mean(const DiskEval& u, int n, double r, std::size_t n_nodes) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("circle_mean: radius must lie in [0,1)");
  }
  if (n_nodes == 0) n_nodes = std::max<std::size_t>(2048, quadrature_nodes(r));
  const std::vector<cdouble> vals = u.on_circle(r, n_nodes);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n_nodes);
  return parallel::periodic_mean<cdouble>(n_nodes, [&](std::size_t j) {
    return vals[j] * std::polar(1.0, -static_cast<double>(n) * step * static_cast<double>(j));
  });
}

cdouble operator_residual(const Params& p, const DiskEval& u,
                          const DiskPoint& z, double h) {
  if (!(h > 0.0)) throw DomainError("operator_residual: step must be positive");
  if (z.r() + 2.0 * h >= 1.0) {
    throw StepTooLarge("operator_residual: |z| + 2h must stay below 1");
  }
  const cdouble zz = z.z();
  const cdouble c = u(z);
  const cdouble xp = u(DiskPoint(zz + h));
  const cdouble xm = u(DiskPoint(zz - h));
  const cdouble yp = u(DiskPoint(zz + kI * h));
  const cdouble ym = u(DiskPoint(zz - kI * h));
  const cdouble ux = (xp - xm) / (2.0 * h);
  const cdouble uy = (yp - ym) / (2.0 * h);
  const cdouble dz = 0.5 * (ux - kI * uy);
  const cdouble dzbar = 0.5 * (ux + kI * uy);
  const cdouble lap_quarter = (xp + xm + yp + ym - 4.0 * c) / (4.0 * h * h);
  const double weight = z.weight();
  const double a = p.alpha();
  const double b = p.beta();
  return weight * (weight * lap_quarter + a * zz * dz + b * std::conj(zz) * dzbar -
                   a * b * c);
}

cdouble PolyharmonicDecomposition::evaluate(const DiskPoint& z) const {
  const cdouble zz = z.z();
  const double x = std::norm(zz);
  cdouble acc = 0.0;
  double xk = 1.0;
  for (std::size_t k = 0; k < analytic.size(); ++k) {
    cdouble part = 0.0;
    for (const auto& [n, c] : analytic[k].coefficients()) {
      part += c * std::pow(zz, n);
    }
    if (k < antianalytic.size()) {
      for (const auto& [n, c] : antianalytic[k].coefficients()) {
        part += c * std::pow(std::conj(zz), n);
      }
    }
    acc += part * xk;
    xk *= x;
  }
  return acc;
}

PolyharmonicDecomposition polyharmonic_decompose(const Expansion& e) {
  const double a = e.params.alpha();
  const double b = e.params.beta();
  if (!(a >= 1.0 && a == std::nearbyint(a))) {
    throw PreconditionFailed("polyharmonic_decompose: alpha must be a positive integer");
  }
  const int order = static_cast<int>(a);
  for (const auto& [k, c] : e.coeffs.coefficients()) {
    if (k < -order && std::abs(c) > 1e-10) {
      throw PreconditionFailed("polyharmonic_decompose: c_{-n} must vanish for n > alpha");
    }
  }
  PolyharmonicDecomposition out{e.params, {}, {}};
  out.analytic.resize(static_cast<std::size_t>(order) + 1);
  out.antianalytic.resize(static_cast<std::size_t>(order));
  for (int k = 0; k <= order; ++k) {
    // (-alpha)_k / k!
    const double lead = pochhammer(-a, static_cast<std::uint32_t>(k)) /
                        pochhammer(1.0, static_cast<std::uint32_t>(k));
    for (const auto& [n, c] : e.coeffs.coefficients()) {
      if (n < 0) continue;
      const double dn = static_cast<double>(n);
      const double ratio = pochhammer(dn - b, static_cast<std::uint32_t>(k)) /
                           pochhammer(dn + 1.0, static_cast<std::uint32_t>(k));
      out.analytic[static_cast<std::size_t>(k)].add(n, lead * ratio * c);
    }
  }
  // F(-b, n-a; n+1; x) = sum_j (-b)_j (n-a)_j / ((n+1)_j j!) x^j, a polynomial.
  for (int j = 0; j < order; ++j) {
    const auto uj = static_cast<std::uint32_t>(j);
    for (const auto& [k, c] : e.coeffs.coefficients()) {
      if (k >= 0 || k < -order) continue;
      const int n = -k;
      const double dn = static_cast<double>(n);
      const double coef = pochhammer(-b, uj) * pochhammer(dn - a, uj) /
                          (pochhammer(dn + 1.0, uj) * pochhammer(1.0, uj));
      if (coef != 0.0) out.antianalytic[static_cast<std::size_t>(j)].add(n, coef * c);
    }
  }
  return out;
}

TrigPolynomial riesz_projected_derivative(const BoundaryFunction& f,
                                          std::uint32_t l) {
  TrigPolynomial out;
  const TrigPolynomial spec = f.spectrum();
  for (const auto& [n, c] : spec.coefficients()) {
    if (n < 0) continue;
    out.set(n, std::pow(kI * static_cast<double>(n), static_cast<int>(l)) * c);
  }
  return out;
}

DiskEval series_evaluator(const Expansion& e, Quantity q) {
  return DiskEval(
      [e, q](const DiskPoint& z) {
        return radial_modes(e, q, z.r()).evaluate(z.theta());
      },
      [e, q](double r, std::size_t n) {
        return sample_modes(radial_modes(e, q, r), n);
      });
}

DiskEval poisson_evaluator(const Params& p, const BoundaryFunction& f) {
  p.require_poisson();
  return DiskEval([p, f](const DiskPoint& z) { return poisson_extend(p, f, z); });
}

DiskEval decomposition_evaluator(const Params& p, const BoundaryFunction& f,
                                 bool conjugate_side) {
  p.require_poisson();
  if (conjugate_side) {
    return DiskEval([p, f](const DiskPoint& z) {
      return zbar_dzbar_decomposition(p, f, z);
    });
  }
  return DiskEval([p, f](const DiskPoint& z) { return zdz_decomposition(p, f, z); });
}

DiskEval polyharmonic_evaluator(const PolyharmonicDecomposition& d) {
  return DiskEval([d](const DiskPoint& z) { return d.evaluate(z); });
}

}  // namespace abh
