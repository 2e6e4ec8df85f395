#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"

namespace bindex {

// Explicit request, then BINDEX_THREADS, then the hardware count.
inline std::size_t resolve_threads(std::optional<std::size_t> requested = std::nullopt) {
  if (requested) {
    if (*requested == 0)
      throw domain_error("thread count must be >= 1");
    return *requested;
  }
  if (const char* env = std::getenv("BINDEX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(shard) for shard in [0, shards) on up to `threads` workers and returns
// the results indexed by shard, so merging stays independent of scheduling.
template <class F>
auto map_shards(std::size_t shards, std::size_t threads, F&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(shards);
  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, shards));
  if (workers == 1) {
    for (std::size_t s = 0; s < shards; ++s)
      slots[s].emplace(fn(s));
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t s = next.fetch_add(1);
          if (s >= shards)
            return;
          try {
            slots[s].emplace(fn(s));
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure)
              failure = std::current_exception();
            next.store(shards);
          }
        }
      });
    for (auto& t : pool)
      t.join();
    if (failure)
      std::rethrow_exception(failure);
  }
  std::vector<R> out;
  out.reserve(shards);
  for (auto& s : slots)
    out.push_back(std::move(*s));
  return out;
}

} // namespace bindex
