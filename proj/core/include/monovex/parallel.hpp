#pragma once

#include <cstddef>
#include <functional>

namespace monovex {

/// Worker count: hardware concurrency capped by the MONOVEX_THREADS
/// environment variable (minimum 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads.
/// Exceptions from any worker are rethrown (the lowest index wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace monovex
