#pragma once

#include <functional>

namespace numspec {

// Worker count: hardware concurrency capped by the NUMSPEC_THREADS
// environment variable (>= 1).
int thread_budget();

// Runs fn(i) for i in [0, n); results must be written to per-index slots so
// the outcome is independent of scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace numspec
