#pragma once

#include <cstddef>
#include <functional>

namespace oft {

/// Number of worker threads for parallel regions. Reads OFT_THREADS on every
/// call so tests can toggle it at runtime; falls back to the hardware count.
int worker_count();

/// Runs fn(begin, end) over a deterministic partition of [0, n) into at most
/// worker_count() contiguous chunks. Chunk boundaries depend only on n and the
/// worker count, and workers write disjoint ranges, so results are bitwise
/// reproducible for any worker count as long as fn itself is. grain is the
/// minimum n worth threading; pass 1 when each item is already a large block
/// of work (a grid slab, a line bundle).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t grain = 2048);

/// Max-reduction over [0, n). fn returns the maximum over its chunk; chunk
/// results combine with std::max, which is order-independent, so the reduction
/// is exact and worker-count independent.
double parallel_max(std::size_t n, const std::function<double(std::size_t, std::size_t)>& fn);

} // namespace oft
