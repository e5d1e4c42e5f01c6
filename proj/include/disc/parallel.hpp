#pragma once

#include <cstddef>
#include <functional>

namespace disc {

// Worker count used by parallel_for. Defaults to min(hardware_concurrency, 8).
int parallel_threads();
void set_parallel_threads(int n);

/// Runs body(begin, end) over a partition of [0, n).
///
/// Each index is processed by exactly one task and tasks write to disjoint
/// outputs, so results are identical for any thread count. Falls back to a
/// single inline call when n is small or only one thread is configured.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace disc
