#pragma once

#include <cstddef>
#include <functional>

namespace nucleon {

/// Worker cap: NUCLEON_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) over contiguous chunks on up to worker_count()
/// threads. Each index is visited exactly once; callers write to disjoint
/// output slots so results do not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace nucleon
