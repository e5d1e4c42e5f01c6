#include "disc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <vector>

namespace disc {

namespace {

std::atomic<int> g_threads{0};

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(hw == 0 ? 4u : hw, 8u));
}

}  // namespace

int parallel_threads() {
  int n = g_threads.load(std::memory_order_relaxed);
  if (n <= 0) {
    n = default_threads();
    g_threads.store(n, std::memory_order_relaxed);
  }
  return n;
}

void set_parallel_threads(int n) { g_threads.store(std::max(1, n), std::memory_order_relaxed); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  const int threads = parallel_threads();
  if (n == 0) return;
  if (threads <= 1 || n < 512) {
    body(0, n);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  const std::size_t step = (n + chunks - 1) / chunks;
  std::vector<std::future<void>> futures;
  futures.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * step;
    const std::size_t end = std::min(n, begin + step);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, [&body, begin, end] { body(begin, end); }));
  }
  for (auto& f : futures) f.get();
}

}  // namespace disc
