#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace flatlab {

/// Worker count used by parallel loops. Defaults to FLATLAB_THREADS when set,
/// otherwise 1. Values below 1 are clamped to 1.
unsigned worker_count() noexcept;
void set_worker_count(unsigned threads) noexcept;

/// Splits [begin, end) into contiguous chunks, one per worker, and runs
/// body(chunk_begin, chunk_end, worker_index) concurrently. Chunk boundaries
/// depend only on the range and worker count, so callers merging per-worker
/// results in worker order get deterministic output.
void parallel_for(std::uint64_t begin, std::uint64_t end,
                  const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body);

}  // namespace flatlab
