#pragma once

#include <cstddef>
#include <functional>

namespace phee {

// Worker count used when callers pass 0: PHEE_THREADS env var if set,
// otherwise hardware_concurrency (min 1).
unsigned default_thread_count();

// Runs fn(begin, end, worker) over a static chunking of [0, n). Blocks until
// done. Chunk boundaries depend only on (n, threads), so any writes indexed
// by position are deterministic. num_threads == 0 -> default_thread_count().
// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, unsigned num_threads,
                  const std::function<void(std::size_t, std::size_t, unsigned)>& fn);

} // namespace phee
