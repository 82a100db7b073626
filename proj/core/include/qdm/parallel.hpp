#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace qdm {

// Worker count used when a caller passes threads == 0. Starts at the
// hardware concurrency; the CLI overrides it with --threads.
unsigned default_threads();
void set_default_threads(unsigned threads);

inline unsigned resolve_threads(unsigned requested) {
  return requested == 0 ? default_threads() : requested;
}

// Evaluates probe(i) for i in [0, count) and returns the smallest index
// whose probe produced a value, together with that value. Indices are
// dealt round-robin to workers; a worker stops once its next index exceeds
// the best index found so far, so the result is the same for any schedule.
template <class Probe>
auto find_first(std::size_t count, unsigned threads, Probe&& probe)
    -> std::optional<std::pair<std::size_t,
                               typename std::invoke_result_t<Probe&, std::size_t>::value_type>> {
  using Value = typename std::invoke_result_t<Probe&, std::size_t>::value_type;
  using Hit = std::pair<std::size_t, Value>;

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto v = probe(i)) return Hit{i, std::move(*v)};
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::mutex mu;
  std::optional<Hit> result;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) {
          if (i > best.load(std::memory_order_relaxed)) return;
          if (auto v = probe(i)) {
            std::lock_guard<std::mutex> lock(mu);
            if (!result || i < result->first) {
              result = Hit{i, std::move(*v)};
              best.store(i, std::memory_order_relaxed);
            }
            return;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        best.store(0, std::memory_order_relaxed);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return result;
}

// Runs body(i) for every i in [0, count) across workers.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::mutex mu;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace qdm
