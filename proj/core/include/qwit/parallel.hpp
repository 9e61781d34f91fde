#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qwit {

/// Worker count from the QWIT_WORKERS environment variable, falling back to
/// std::thread::hardware_concurrency(). Always at least 1.
std::size_t worker_count();

/// splitmix64 mix of (master, stream). Every sampling loop draws sample i
/// from an engine seeded with derive_seed(seed, i), so results do not depend
/// on how work is split across threads.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

/// Calls body(i) for i in [0, count) on up to worker_count() threads. The
/// first exception thrown by any call is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qwit
