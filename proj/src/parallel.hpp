#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "pisano/numth.hpp"

namespace pisano::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// out[i] = fn(first + i) for every i in [0, last - first], computed on
// `threads` workers pulling fixed-size chunks. The first exception thrown by
// any worker is rethrown on the calling thread.
template <typename T, typename Fn>
std::vector<T> parallel_map(u64 first, u64 last, unsigned threads, Fn fn) {
  std::vector<T> out;
  if (last < first) return out;
  const u64 count = last - first + 1;
  out.resize(count);

  constexpr u64 kChunk = 512;
  std::atomic<u64> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<bool> stop{false};

  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const u64 begin = next.fetch_add(kChunk);
      if (begin >= count) return;
      const u64 end = std::min(count, begin + kChunk);
      try {
        for (u64 i = begin; i < end; ++i) out[i] = fn(first + i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
    }
  };

  const unsigned n = static_cast<unsigned>(
      std::min<u64>(resolve_threads(threads), (count + kChunk - 1) / kChunk));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace pisano::detail
