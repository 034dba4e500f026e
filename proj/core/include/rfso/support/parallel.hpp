#pragma once

#include <cstddef>
#include <functional>

namespace rfso::support {

/// Worker-thread count: RFSO_THREADS if set (>=1), otherwise the hardware
/// concurrency.
std::size_t thread_count();

/// Runs fn(i) for i in [0, n) across thread_count() workers. Tasks are
/// independent; callers own any ordering of the results (typically by writing
/// into a preallocated slot per index, then reducing in index order).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rfso::support
