#include "richwords/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace richwords {

int default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::uint64_t total, int threads,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  if (total == 0) return;
  std::uint64_t n = threads < 1 ? 1 : static_cast<std::uint64_t>(threads);
  n = std::min(n, total);
  if (n == 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(n);
  const std::uint64_t chunk = (total + n - 1) / n;
  for (std::uint64_t c = 0; c < n; ++c) {
    const std::uint64_t lo = chunk * c;
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&fn, c, lo, hi] { fn(static_cast<int>(c), lo, hi); });
  }
  for (auto& t : workers) t.join();
}

}  // namespace richwords
