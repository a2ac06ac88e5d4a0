#pragma once

// Deterministic data-parallel helper: work is cut into fixed-size chunks
// whose boundaries depend only on the totals, never on the thread count.
// Callers store per-chunk results by chunk index and combine them in a
// fixed order, so outputs match the sequential run bit for bit.

#include "expsumlab/common.hpp"

#include <functional>

namespace esl {

void for_each_chunk(u64 total, u64 chunk_size, unsigned threads,
                    const std::function<void(std::size_t chunk_idx, u64 lo, u64 hi)>& fn);

// number of chunks for_each_chunk will produce
inline std::size_t chunk_count(u64 total, u64 chunk_size) {
    return std::size_t((total + chunk_size - 1) / chunk_size);
}

}  // namespace esl
