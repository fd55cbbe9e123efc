// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace framealias {

/// Worker count for data-parallel loops: hardware concurrency capped by the
/// FRAMEALIAS_THREADS environment variable (a value of 1 forces serial runs).
int worker_count();

/// Runs fn(i) for i in [0, count). Work is split into contiguous chunks, so
/// writes to disjoint per-index slots give results identical to a serial run.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  int max_workers = 0);

}  // namespace framealias
