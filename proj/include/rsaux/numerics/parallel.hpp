#ifndef RSAUX_NUMERICS_PARALLEL_HPP
#define RSAUX_NUMERICS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace rsaux {

/// Runs body(i) for i in [0, n) on up to `threads` workers (0: hardware
/// concurrency). Indices are handed out dynamically; body must not throw.
inline void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace rsaux

#endif  // RSAUX_NUMERICS_PARALLEL_HPP
