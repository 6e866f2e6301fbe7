#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace engel {

struct Limits {
  std::uint64_t max_order_stored = 100000;
  std::uint64_t max_order_stream = 21000000;
  std::uint64_t max_field_size = 65536;
  // Upper bound for dense adjacency storage (bit matrices), in MiB.
  std::uint64_t memory_budget_mb = 1024;
  unsigned threads = 0;  // 0 = hardware concurrency

  // Built-in defaults overridden by ENGEL_MAX_ORDER_STORED, ENGEL_MAX_ORDER_STREAM,
  // ENGEL_MEMORY_MB and ENGEL_THREADS.
  static Limits from_environment();
  unsigned thread_count() const;
};

// Process-wide limits used when a caller does not pass its own.
const Limits& default_limits();
void set_default_limits(const Limits& limits);

// Runs body(begin, end) over disjoint chunks of [0, n). Chunks are fixed by n and the thread
// count, so any per-index output is deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace engel
