#pragma once

#include <cstddef>
#include <functional>

namespace resloc {

// Worker count: RESLOC_THREADS if set, else the hardware concurrency.
unsigned worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. The first
// exception thrown by any task is rethrown after all workers finish.
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace resloc
