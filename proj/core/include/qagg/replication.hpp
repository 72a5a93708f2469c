#pragma once

#include <functional>

namespace qagg {

// Runs body(0), ..., body(count - 1) on up to `threads` workers. Each index
// owns its output slot and its own pre-derived seed, so results are identical
// under serial and parallel execution. The first exception, if any, is
// rethrown after all workers join.
void parallel_replications(int count, int threads, const std::function<void(int)>& body);

}  // namespace qagg
