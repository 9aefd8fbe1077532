#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vcldim::detail {

// Number of i in [0, n) with pred(i) true. Indices are split across worker
// threads; the count does not depend on scheduling. The first exception
// thrown by any worker is rethrown.
template <typename Pred>
std::size_t parallel_count(std::size_t n, Pred pred) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n));
  if (workers <= 1) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += pred(i) ? 1 : 0;
    return count;
  }
  std::atomic<std::size_t> count{0};
  std::exception_ptr error;
  std::mutex error_mu;
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          std::size_t local = 0;
          for (std::size_t i = w; i < n; i += workers) local += pred(i) ? 1 : 0;
          count += local;
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return count.load();
}

}  // namespace vcldim::detail
