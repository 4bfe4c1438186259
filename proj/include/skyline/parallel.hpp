#pragma once

#include <cstddef>
#include <functional>

namespace skyline {

// Runs fn(i) for every i in [0, count) on up to `workers` threads pulling
// indices from a shared atomic counter. fn must only write state owned by
// task i, which makes the combined result independent of scheduling order.
// The first exception thrown by any task is rethrown after all threads join.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace skyline
