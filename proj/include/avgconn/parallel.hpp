#pragma once

#include <functional>

namespace avgconn {

// Resolves a thread-count request: positive values pass through, 0 means
// "AVGCONN_THREADS env var if set, else hardware concurrency". Always >= 1.
int resolve_threads(int requested);

// Runs fn(0..count-1) on a pool of `threads` workers pulling indices from a
// shared counter. Callers must write results into disjoint, preallocated
// slots; then the output is identical for any thread count. The first
// exception thrown by any worker is rethrown after the pool drains.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace avgconn
