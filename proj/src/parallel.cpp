#include "cbgraph/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace cbg {

static int g_threads = 0;

void set_thread_count(int n) { g_threads = n < 0 ? 0 : n; }

int thread_count() {
  if (g_threads > 0) return g_threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? (int)hc : 1;
}

void parallel_for(size_t begin, size_t end,
                  const std::function<void(size_t)>& fn) {
  size_t total = end > begin ? end - begin : 0;
  int nt = thread_count();
  if (nt <= 1 || total < 2) {
    for (size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next(begin);
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= end) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace cbg
