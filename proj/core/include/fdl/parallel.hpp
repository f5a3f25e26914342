#ifndef FDL_PARALLEL_HPP
#define FDL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace fdl {

/// Number of worker threads to use: hardware concurrency, capped by the
/// FDL_THREADS environment variable when it is set to a positive integer.
int thread_budget();

/// Runs body(i) for i in [0, n). Work is split into contiguous chunks over
/// the thread budget. Each index writes only to its own output slot, so
/// results do not depend on the schedule; any cross-index reduction must be
/// done by the caller afterwards in fixed index order to stay bit-stable.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace fdl

#endif
