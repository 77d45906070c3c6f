#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>

namespace octo {

/// Every data-parallel kernel has a serial reference path; tests compare
/// the two and the bench target times them.
enum class Execution { serial, parallel };

/// Smallest index in [0, n) for which `fails(i)` is true. The result does
/// not depend on thread scheduling. `fails` must be safe to call
/// concurrently for distinct indices.
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t n, Pred&& fails, Execution exec = Execution::parallel) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) {
      if (fails(i)) return i;
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> best{none};
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    // Indices past a known failure cannot change the answer.
    if (i >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (fails(i)) {
        std::size_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  const std::size_t b = best.load();
  if (b == none) return std::nullopt;
  return b;
}

/// Calls `body(i)` for every i in [0, n). The first exception thrown by
/// any iteration is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Body&& body, Execution exec = Execution::parallel) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    try {
      body(static_cast<std::size_t>(ii));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace octo
