#pragma once

#include <cstddef>
#include <functional>

namespace bicm {

// Number of worker threads to use: hardware concurrency, capped by the
// BICM_RATES_THREADS environment variable when set.
unsigned thread_count();

// Runs body(i) for i in [0, n) across worker threads. Exceptions from the
// body are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace bicm
