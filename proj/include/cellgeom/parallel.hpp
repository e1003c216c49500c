#pragma once

#include <cstddef>
#include <functional>

namespace cellgeom {

/// Thread cap: CELLGEOM_THREADS if set and positive, else hardware concurrency.
int default_thread_count();

/// Runs body(i, worker) for i in [0, count) on up to `threads` workers
/// (0 means default_thread_count()). Indices are split into contiguous
/// chunks; the call returns after every index is processed. The first
/// exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t index, int worker)>& body);

int resolve_threads(int requested);

}  // namespace cellgeom
