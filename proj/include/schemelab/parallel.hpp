#pragma once

#include <cstddef>
#include <functional>

namespace schemelab {

// Worker count from SCHEME_LAB_THREADS, else the hardware concurrency.
std::size_t worker_count();

// Runs body(i) for i in [0, n); results must be written to per-index slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace schemelab
