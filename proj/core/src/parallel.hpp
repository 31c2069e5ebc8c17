#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eqlines::detail {

// Calls fn(chunk) for every chunk in [0, chunk_count) on up to `jobs` threads.
// The first exception thrown by a worker is rethrown on the calling thread.
template <class Fn>
void run_chunks(std::size_t chunk_count, unsigned jobs, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t chunk = next.fetch_add(1);
      if (chunk >= chunk_count || failed.load()) return;
      try {
        fn(chunk);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(chunk_count)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

// Half-open bounds of chunk `c` when `total` items are split into `chunks` parts.
inline std::pair<std::uint64_t, std::uint64_t> chunk_bounds(std::uint64_t total, std::size_t chunks, std::size_t c) {
  // total < 2^48 for every caller, so the products stay in range.
  return {total * c / chunks, total * (c + 1) / chunks};
}

}  // namespace eqlines::detail
