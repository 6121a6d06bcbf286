#pragma once

#include <cstddef>
#include <functional>

namespace balance {

/// Caps the worker pool used by parallel_for; 0 restores machine parallelism.
void set_max_threads(std::size_t threads);
std::size_t max_threads();

/// Splits [0, count) into contiguous blocks and calls body(begin, end) on
/// each block from up to max_threads() workers. Blocks never overlap, so
/// bodies that write only to their own indices give scheduling-independent
/// results.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace balance
