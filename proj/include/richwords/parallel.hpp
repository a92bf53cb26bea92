#pragma once

#include <cstdint>
#include <functional>

namespace richwords {

/// Splits [0, total) into at most `threads` contiguous chunks and runs
/// fn(chunk_index, lo, hi) for each, in parallel when threads > 1.
/// Deterministic chunking; merging per-chunk results is the caller's job.
void parallel_chunks(std::uint64_t total, int threads,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn);

int default_thread_count();

}  // namespace richwords
