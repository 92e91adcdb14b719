#pragma once

#include <cstddef>
#include <functional>

namespace wavekin {

/// Global worker count for parallel loops. Defaults to the hardware
/// concurrency; results are worker-count invariant (each index is
/// computed independently and written to its own slot).
void set_worker_count(int n);
int worker_count();

/// Run fn(i) for i in [0, n) on up to worker_count() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wavekin
