#pragma once

#include <cstddef>
#include <functional>

namespace specsup {

/// SPECSUP_WORKERS if set and positive, else the hardware concurrency.
int default_workers();

/// Calls fn(i) for i in [0, count) on up to `workers` threads (0 = default).
/// Indices are handed out in blocks; fn must only write to per-index state.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace specsup
