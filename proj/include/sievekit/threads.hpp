// Thread budget and a deterministic block-parallel loop.
//
// The budget comes from SIEVEKIT_THREADS (defaulting to the hardware
// concurrency); modules never spawn unbounded work.
#pragma once

#include <cstddef>
#include <functional>

namespace sievekit {

// Number of worker threads to use; >= 1.  Read once from the environment.
unsigned thread_budget();

// Runs fn(begin, end) over disjoint blocks covering [0, count), possibly on
// several threads.  Callers own any merging; blocks are contiguous so a
// per-block accumulator merged in block order stays deterministic.
void parallel_blocks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace sievekit
