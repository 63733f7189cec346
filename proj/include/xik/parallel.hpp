#pragma once

// Grid evaluation across threads. XI_KERNELS_THREADS caps the worker count;
// otherwise std::thread::hardware_concurrency() is used.

#include <cstddef>
#include <functional>

namespace xik {

std::size_t worker_count();

/// Calls body(i) for i in [0, n). Each index is visited exactly once; the
/// first exception thrown by any worker is rethrown after all have joined.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace xik
