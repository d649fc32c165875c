#pragma once

#include <cstddef>
#include <functional>

namespace adia {

// Worker count: hardware concurrency capped by ADIA_THREADS when set (>= 1).
unsigned worker_count();

// Runs fn(i) for i in [0, n) on up to worker_count() threads. The first exception is rethrown
// after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace adia
