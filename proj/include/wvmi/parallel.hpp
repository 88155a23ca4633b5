#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace wvmi {

// Runs fn(i) for i in [0, n) on up to `workers` threads. Results must be
// written to index-addressed slots by the caller; output is then independent
// of the worker count. Exceptions are captured and the first one rethrown.
inline void parallel_for(std::size_t n, unsigned workers,
                         const std::function<void(std::size_t)>& fn) {
  if (workers == 0) workers = std::thread::hardware_concurrency();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex mu;
  std::exception_ptr first_error;
  std::size_t next = 0;
  auto body = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lk(mu);
        if (next >= n || first_error) return;
        i = next++;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  unsigned k = unsigned(std::min<std::size_t>(workers, n));
  pool.reserve(k);
  for (unsigned t = 0; t < k; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

} // namespace wvmi
