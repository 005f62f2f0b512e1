#pragma once

#include <cstddef>
#include <functional>

namespace dgcalc {

/// Number of worker threads, from DGCALC_THREADS (default 1).
unsigned worker_threads();

/// Run fn(0..n-1), possibly on worker_threads() threads. Results must be
/// written to per-index slots by the caller; iteration order is unspecified
/// but the caller-visible outcome is index-deterministic. The first exception
/// thrown by any index is rethrown after all workers finish.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace dgcalc
