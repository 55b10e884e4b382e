#pragma once

#include <cstddef>
#include <functional>

namespace abcodes::detail {

/// Worker count: ABCODES_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(chunk) for chunk in [0, chunks) across worker threads. Chunks are
/// claimed dynamically; callers merge per-chunk results in chunk order so the
/// outcome does not depend on scheduling.
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body);

} // namespace abcodes::detail
