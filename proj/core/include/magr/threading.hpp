#pragma once

#include <cstddef>
#include <functional>

namespace magr {

// Global thread count for data-parallel kernels (matrix products, column
// projections). Each index is processed by exactly one thread and the
// per-index arithmetic does not depend on the split, so results are
// bitwise identical for any thread count.
void set_num_threads(int n);
int num_threads();

// Runs fn(i) for i in [begin, end), split into contiguous chunks.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& fn);

}  // namespace magr
