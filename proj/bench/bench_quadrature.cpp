// Serial reference vs OpenMP kernels on the hot loops: circle means, the
// radial integral I_lambda and series evaluation on a circle.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "abh/corpus.hpp"
#include "abh/extension.hpp"
#include "abh/hardy.hpp"
#include "abh/kernels.hpp"
#include "abh/parallel.hpp"

namespace {

using namespace abh;

double kernel_term(double r, std::size_t n, std::size_t j) {
  const double t = 2 * M_PI * static_cast<double>(j) / static_cast<double>(n);
  return std::abs(kernel_K(Params(0.5, 0.25), DiskPoint::polar(r, t)));
}

void BM_MeanSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        serial::periodic_mean<double>(n, [&](std::size_t j) { return kernel_term(0.99, n, j); }));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MeanParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        parallel::periodic_mean<double>(n, [&](std::size_t j) { return kernel_term(0.99, n, j); }));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ILambdaSerial(benchmark::State& state) {
  const double r = 1.0 - std::pow(10.0, -static_cast<double>(state.range(0)));
  const std::size_t n = quadrature_nodes(r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::periodic_mean<double>(n, [&](std::size_t j) {
      // same integrand as i_lambda(0.5, r)
      const double s = std::sin(M_PI * static_cast<double>(j) / static_cast<double>(n));
      const double dist2 = (1 - r) * (1 - r) + 4 * r * s * s;
      return std::sqrt((1 - r) * (1 + r)) / std::pow(dist2, 0.75);
    }));
  }
}

void BM_ILambdaParallel(benchmark::State& state) {
  const double r = 1.0 - std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(i_lambda(0.5, r));
}

void BM_HardyMean(benchmark::State& state) {
  const CorpusCase c = default_corpus(kDefaultSeed, 1).front();
  const DiskEval u = series_evaluator(coeffs_from_boundary(c.params, c.f), Quantity::Dz);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hardy_mean(u, 2.0, 0.99, n));
}

}  // namespace

BENCHMARK(BM_MeanSerial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_MeanParallel)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_ILambdaSerial)->DenseRange(2, 4);
BENCHMARK(BM_ILambdaParallel)->DenseRange(2, 4);
BENCHMARK(BM_HardyMean)->Arg(2048)->Arg(16384);

BENCHMARK_MAIN();
