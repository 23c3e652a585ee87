#pragma once

#include <cstddef>
#include <functional>

namespace censtail {

// 0 maps to std::thread::hardware_concurrency() (at least 1).
int resolve_threads(int requested);

// Calls body(i) for i in [0, n) on up to `threads` workers. Indices are
// handed out dynamically; callers write results into per-index slots and
// reduce afterwards, so output never depends on scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace censtail
