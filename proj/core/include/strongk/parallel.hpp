#pragma once
#include <cstddef>
#include <functional>

namespace strongk {

/// Worker count: STRONGK_THREADS env var when set, else hardware
/// concurrency.  Always at least 1.
int worker_count();

/// Runs fn(i) for i in [0, count).  Results must be written to
/// index-addressed slots so the outcome is schedule-independent.  Nested
/// calls run serially in the calling thread.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

} // namespace strongk
