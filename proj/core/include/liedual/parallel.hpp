#pragma once

#include <cstddef>
#include <functional>

namespace liedual {

/// Worker count: LIEDUAL_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
int thread_budget();

/// Runs fn(i) for i in [0, count) across the thread budget. fn must be safe
/// to call concurrently for distinct i; iteration order is unspecified.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace liedual
