#pragma once

// u = P_{alpha,beta}[f] built two ways: periodic-trapezoid quadrature of the
// Poisson integral, and the homogeneous hypergeometric series. Closed-form
// Wirtinger derivatives, the kernel decompositions of z du/dz and
// zbar du/dzbar, circle means, the operator residual and the polyharmonic
// decomposition for integer alpha.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "abh/boundary.hpp"
#include "abh/kernels.hpp"

namespace abh {

/// Any map z -> complex on the open disc. An optional batched sampler
/// returns the values at r e^{2 pi i j/n}; when absent, on_circle() evaluates
/// pointwise in parallel.
class DiskEval {
 public:
  using PointFn = std::function<cdouble(const DiskPoint&)>;
  using CircleFn = std::function<std::vector<cdouble>(double, std::size_t)>;

  explicit DiskEval(PointFn point, CircleFn circle = {});

  cdouble operator()(const DiskPoint& z) const { return point_(z); }
  std::vector<cdouble> on_circle(double r, std::size_t n) const;

 private:
  PointFn point_;
  CircleFn circle_;
};

/// Series expansion
///   u = sum_{k>=0} c_k F(-a, k-b; k+1; |z|^2) z^k
///     + sum_{k>=1} c_{-k} F(-b, k-a; k+1; |z|^2) zbar^k.
/// coeffs holds the c_k keyed by k (not Fourier coefficients).
struct Expansion {
  Params params;
  TrigPolynomial coeffs;
};

enum class Quantity { Value, Dz, Dzbar, Dtheta, ZDz, ZbarDzbar };

/// Expansion of conj(u) as a (beta, alpha)-harmonic function.
Expansion conjugated(const Expansion& e);

/// Angular Fourier modes of the chosen quantity on the circle |z| = r.
TrigPolynomial radial_modes(const Expansion& e, Quantity q, double r);

/// (1/2pi) int K_{a,b}(z e^{-it}) g(e^{it}) dt, unnormalised kernel,
/// arbitrary real a, b. Nodes are boosted for |z| > 0.9.
cdouble kernel_integral(double a, double b, const BoundaryFunction& g,
                        const DiskPoint& z);

/// Nodes used for a kernel quadrature at z given N boundary samples.
std::size_t extension_nodes(std::size_t samples, const DiskPoint& z);

cdouble poisson_extend(const Params& p, const BoundaryFunction& f,
                       const DiskPoint& z);

/// c_k = f^(k)/F(-a, k-b; k+1; 1), c_{-k} = f^(-k)/F(-b, k-a; k+1; 1).
/// Throws DegenerateCoefficient when a denominator vanishes under a
/// non-zero datum; 0/0 gives c_k = 0.
Expansion coeffs_from_boundary(const Params& p, const TrigPolynomial& fhat);
Expansion coeffs_from_boundary(const Params& p, const BoundaryFunction& f);

cdouble eval_series(const Expansion& e, const DiskPoint& z);
cdouble dz_series(const Expansion& e, const DiskPoint& z);
cdouble dzbar_series(const Expansion& e, const DiskPoint& z);

/// d/dtheta u = P_{alpha,beta}[f'](z) by quadrature.
cdouble dtheta(const Params& p, const BoundaryFunction& f, const DiskPoint& z);

/// z du/dz = -i c (K_{a,b-1}[f'] + i b zbar K_{a-1,b}[e^{it} f]).
cdouble zdz_decomposition(const Params& p, const BoundaryFunction& f,
                          const DiskPoint& z);

/// zbar du/dzbar = i c (K_{a-1,b}[f'] - i a z K_{a,b-1}[e^{-it} f]).
cdouble zbar_dzbar_decomposition(const Params& p, const BoundaryFunction& f,
                                 const DiskPoint& z);

/// u_n(r) = (1/N) sum_j u(r e^{i theta_j}) e^{-i n theta_j}. n_nodes = 0 picks
/// max(2048, quadrature_nodes(r)).
cdouble circle_mean(const DiskEval& u, int n, double r, std::size_t n_nodes = 0);

/// Central-difference evaluation of Delta_{alpha,beta} u at z with step h.
/// StepTooLarge if |z| + 2h >= 1.
cdouble operator_residual(const Params& p, const DiskEval& u,
                          const DiskPoint& z, double h = 1e-4);

/// u = sum_k (H_k(z) + conj-part_k) |z|^{2k} for alpha a positive integer.
struct PolyharmonicDecomposition {
  Params params;
  /// analytic[k]: n -> coefficient of z^n in H_k, k = 0..alpha.
  std::vector<TrigPolynomial> analytic;
  /// antianalytic[j]: n -> coefficient of zbar^n at |z|^{2j}, j = 0..alpha-1.
  std::vector<TrigPolynomial> antianalytic;

  cdouble evaluate(const DiskPoint& z) const;
};

/// Requires alpha in {1,2,...} and |c_{-n}| <= 1e-10 for n > alpha
/// (PreconditionFailed otherwise).
PolyharmonicDecomposition polyharmonic_decompose(const Expansion& e);

/// Q_l: n -> (in)^l f^(n) for n >= 0.
TrigPolynomial riesz_projected_derivative(const BoundaryFunction& f,
                                          std::uint32_t l);

// Evaluator factories.
DiskEval series_evaluator(const Expansion& e, Quantity q);
DiskEval poisson_evaluator(const Params& p, const BoundaryFunction& f);
DiskEval decomposition_evaluator(const Params& p, const BoundaryFunction& f,
                                 bool conjugate_side);
DiskEval polyharmonic_evaluator(const PolyharmonicDecomposition& d);

}  // namespace abh
