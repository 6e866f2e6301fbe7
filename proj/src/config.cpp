#include "engel/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace engel {
namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    // accepts "2.1e7" as well as plain integers
    double v = std::stod(raw);
    if (v < 0) return fallback;
    return static_cast<std::uint64_t>(v);
  } catch (...) {
    return fallback;
  }
}

std::mutex g_limits_mutex;
Limits g_limits = Limits::from_environment();

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  l.max_order_stored = env_or("ENGEL_MAX_ORDER_STORED", l.max_order_stored);
  l.max_order_stream = env_or("ENGEL_MAX_ORDER_STREAM", l.max_order_stream);
  l.memory_budget_mb = env_or("ENGEL_MEMORY_MB", l.memory_budget_mb);
  l.threads = static_cast<unsigned>(env_or("ENGEL_THREADS", 0));
  return l;
}

unsigned Limits::thread_count() const {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

const Limits& default_limits() {
  std::lock_guard<std::mutex> lock(g_limits_mutex);
  return g_limits;
}

void set_default_limits(const Limits& limits) {
  std::lock_guard<std::mutex> lock(g_limits_mutex);
  g_limits = limits;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  unsigned threads) {
  if (n == 0) return;
  if (threads == 0) threads = default_limits().thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1 || n < 64) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace engel
