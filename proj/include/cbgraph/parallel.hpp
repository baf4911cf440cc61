#pragma once

// Minimal deterministic parallel-for used by the scan-heavy checkers.
// Work items are split into contiguous index blocks; reductions performed by
// callers must be order-independent (we use min/max-witness reductions only).

#include <cstddef>
#include <functional>

namespace cbg {

// Global parallelism cap (CLI --threads). 0 = hardware concurrency.
void set_thread_count(int n);
int thread_count();

// Runs fn(i) for i in [begin, end); fn must be thread-safe.
void parallel_for(size_t begin, size_t end,
                  const std::function<void(size_t)>& fn);

}  // namespace cbg
