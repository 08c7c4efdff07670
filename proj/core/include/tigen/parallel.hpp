#ifndef TIGEN_PARALLEL_HPP
#define TIGEN_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tigen {

/// Hardware concurrency, never less than one.
inline unsigned default_thread_count() noexcept {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for every i in [0, task_count) on up to `threads` workers.
/// Tasks are claimed dynamically in increasing index order. The first
/// exception thrown by any task is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t task_count, unsigned threads, Fn&& fn) {
  if (task_count == 0) return;
  threads = std::max(1u, threads);
  if (threads == 1 || task_count == 1) {
    for (std::size_t i = 0; i < task_count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= task_count || failed.load(std::memory_order_relaxed)) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };

  const auto count = static_cast<unsigned>(std::min<std::size_t>(threads, task_count));
  {
    std::vector<std::jthread> pool;
    pool.reserve(count - 1);
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace tigen

#endif  // TIGEN_PARALLEL_HPP
