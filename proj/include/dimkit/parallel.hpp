#pragma once

#include <cstddef>
#include <functional>

namespace dimkit {

// Worker count: DIMKIT_THREADS if set (clamped to >= 1), otherwise a small
// hardware-based default.
int thread_count();

// Runs fn(begin, end) over disjoint chunks of [0, n).  Chunking depends only
// on n and the worker count; callers must keep per-index outputs independent
// and reduce with order-independent operations (max, integer sums) so results
// do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace dimkit
