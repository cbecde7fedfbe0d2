#pragma once

#include <cstddef>
#include <functional>

namespace mdred {

/// Worker count from MDRED_WORKERS, else the hardware concurrency (min 1).
std::size_t worker_count();

/// Runs body(k) for k in [0, count) across worker threads. Each index runs
/// exactly once; the first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace mdred
