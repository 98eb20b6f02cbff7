#pragma once

#include <cstddef>
#include <functional>

namespace noma {

/// Worker count to use for a requested value; 0 means hardware concurrency.
unsigned resolve_workers(unsigned requested);

/// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks are
/// claimed in any order; callers write results into slot i so the merged
/// outcome is schedule-independent. The first exception is rethrown.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& task);

}  // namespace noma
