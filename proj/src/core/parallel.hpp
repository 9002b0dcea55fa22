#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ap3 {

inline unsigned resolve_threads(unsigned requested, uint64_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned t = requested == 0 ? hw : requested;
  if (jobs < t) t = static_cast<unsigned>(jobs);
  return t == 0 ? 1 : t;
}

/// Runs fn(i) for i in [0, jobs) on up to `requested` threads (0 = auto).
/// Callers own any output slots, indexed by i, so results are identical
/// for every thread count. The first exception is rethrown after join.
template <typename Fn>
void parallel_for_index(unsigned requested, uint64_t jobs, Fn&& fn) {
  const unsigned threads = resolve_threads(requested, jobs);
  if (threads <= 1) {
    for (uint64_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const uint64_t i = next.fetch_add(1);
        if (i >= jobs || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ap3
