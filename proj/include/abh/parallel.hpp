#pragma once

// Data-parallel kernels used by every quadrature and circle sweep.
//
// The OpenMP versions split an index range into a fixed number of blocks,
// sum each block serially and add the block partials in index order. The
// result therefore depends only on n, never on the thread count, which keeps
// CLI output byte-identical across machines. The serial versions are the
// reference implementations the tests and the benchmark compare against.

#include <omp.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

namespace abh {

namespace detail {

// Collects the first exception thrown inside a parallel region.
class ExceptionSink {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace detail

namespace serial {

/// (1/n) sum_{j<n} term(j).
template <class T, class F>
T periodic_mean(std::size_t n, F&& term) {
  T acc{};
  for (std::size_t j = 0; j < n; ++j) acc += term(j);
  return acc / static_cast<double>(n);
}

template <class T, class F>
std::vector<T> map(std::size_t n, F&& fn) {
  std::vector<T> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = fn(j);
  return out;
}

}  // namespace serial

namespace parallel {

inline constexpr std::size_t kBlocks = 64;

/// (1/n) sum_{j<n} term(j), blocked and deterministic.
template <class T, class F>
T periodic_mean(std::size_t n, F&& term) {
  std::array<T, kBlocks> partial{};
  detail::ExceptionSink sink;
  const auto blocks = static_cast<long>(kBlocks);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < blocks; ++b) {
    sink.run([&] {
      const std::size_t lo = n * static_cast<std::size_t>(b) / kBlocks;
      const std::size_t hi = n * static_cast<std::size_t>(b + 1) / kBlocks;
      T acc{};
      for (std::size_t j = lo; j < hi; ++j) acc += term(j);
      partial[static_cast<std::size_t>(b)] = acc;
    });
  }
  sink.rethrow();
  T acc{};
  for (const T& v : partial) acc += v;
  return acc / static_cast<double>(n);
}

/// out[j] = fn(j) for j < n; fn must be pure.
template <class T, class F>
std::vector<T> map(std::size_t n, F&& fn) {
  std::vector<T> out(n);
  detail::ExceptionSink sink;
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long j = 0; j < count; ++j) {
    sink.run([&] { out[static_cast<std::size_t>(j)] = fn(static_cast<std::size_t>(j)); });
  }
  sink.rethrow();
  return out;
}

/// Number of OpenMP threads a parallel region would use.
inline int thread_count() { return omp_get_max_threads(); }

}  // namespace parallel

}  // namespace abh
