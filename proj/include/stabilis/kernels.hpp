#pragma once

#include <omp.h>

#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <optional>

namespace stabilis {

// Lowest index k < count with fails(k) true. The OpenMP variant returns the same index as
// the serial one: indices above the current best are skipped, never the ones below.
template <class Fn>
std::optional<std::size_t> first_failure_serial(std::size_t count, Fn&& fails) {
  for (std::size_t k = 0; k < count; ++k)
    if (fails(k)) return k;
  return std::nullopt;
}

template <class Fn>
std::optional<std::size_t> first_failure_omp(std::size_t count, Fn&& fails, int threads = 0) {
  std::atomic<std::size_t> best{count};
  std::exception_ptr error;
  const long n = static_cast<long>(count);
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    bool failed = false;
    try {
      failed = fails(idx);
    } catch (...) {
#pragma omp critical(stabilis_kernel_error)
      if (!error) error = std::current_exception();
    }
    if (failed) {
      std::size_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  if (error) std::rethrow_exception(error);
  if (best.load() == count) return std::nullopt;
  return best.load();
}

template <class Fn>
std::optional<std::size_t> first_failure(std::size_t count, Fn&& fails, int threads) {
  if (threads == 1) return first_failure_serial(count, fails);
  return first_failure_omp(count, fails, threads);
}

// Maximum of value(k) over k < count; -inf when count is zero.
template <class Fn>
double max_over_grid_serial(std::size_t count, Fn&& value) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < count; ++k) {
    double v = value(k);
    if (v > m) m = v;
  }
  return m;
}

template <class Fn>
double max_over_grid_omp(std::size_t count, Fn&& value, int threads = 0) {
  double m = -std::numeric_limits<double>::infinity();
  const long n = static_cast<long>(count);
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for reduction(max : m) schedule(static) num_threads(nt)
  for (long k = 0; k < n; ++k) {
    double v = value(static_cast<std::size_t>(k));
    if (v > m) m = v;
  }
  return m;
}

template <class Fn>
double max_over_grid(std::size_t count, Fn&& value, int threads) {
  if (threads == 1) return max_over_grid_serial(count, value);
  return max_over_grid_omp(count, value, threads);
}

}  // namespace stabilis

namespace stabilis {

// Runs body(k) for every k < count; results must go to per-index slots.
template <class Fn>
void for_each_index(std::size_t count, Fn&& body, int threads) {
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::exception_ptr error;
  const long n = static_cast<long>(count);
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long k = 0; k < n; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(stabilis_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace stabilis
