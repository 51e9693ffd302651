#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace latkit {

// Runs fn(0..count-1) on a bounded worker pool and rethrows the first
// exception. Callers write results into pre-sized slots so the merge step
// stays deterministic regardless of scheduling.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = std::min(count, static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u)));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace latkit
