#pragma once

#include <cstddef>
#include <functional>

namespace plateau {

/// Number of workers: PLATEAU_THREADS if set and valid, otherwise
/// hardware concurrency (at least 1).
int default_thread_count();

/// Runs fn(i) for i in [0, count). Tasks must be independent; results keyed
/// by index stay deterministic for any worker count. threads <= 0 means
/// default_thread_count().
void parallel_for_index(std::size_t count, int threads,
                        const std::function<void(std::size_t)>& fn);

}  // namespace plateau
