#pragma once

#include <cstddef>
#include <functional>

namespace inforank {

// Thread count from INFORANK_THREADS, falling back to 1.
std::size_t default_thread_count();

// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
// visited exactly once; callers write results into per-index slots so the
// outcome never depends on scheduling. The first exception thrown by a body
// is rethrown after all workers stop.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace inforank
