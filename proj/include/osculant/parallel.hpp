#pragma once

// Chunked index-range parallelism with results merged in chunk order, so
// the outcome never depends on scheduling.

#include <algorithm>
#include <cstdint>
#include <future>
#include <thread>
#include <vector>

namespace osculant {

/// 0 means "use the hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs fn(begin, end) over a partition of [0, n) and returns the partial
/// results in ascending range order.
template <class Fn>
auto parallel_chunks(std::uint64_t n, unsigned threads, Fn fn) -> std::vector<decltype(fn(std::uint64_t{}, std::uint64_t{}))> {
  using R = decltype(fn(std::uint64_t{}, std::uint64_t{}));
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), n));
  std::vector<R> out;
  if (workers == 1) {
    out.push_back(fn(0, n));
    return out;
  }
  // a few chunks per worker keeps the tail short
  const std::uint64_t chunks = std::min<std::uint64_t>(n, workers * 4);
  std::vector<std::uint64_t> bounds(chunks + 1);
  for (std::uint64_t c = 0; c <= chunks; ++c) bounds[c] = n * c / chunks;
  // at most `workers` tasks in flight
  std::uint64_t next = 0;
  std::vector<std::future<R>> window;
  out.reserve(chunks);
  while (next < chunks || !window.empty()) {
    while (next < chunks && window.size() < workers) {
      const std::uint64_t b = bounds[next], e = bounds[next + 1];
      window.push_back(std::async(std::launch::async, [&fn, b, e] { return fn(b, e); }));
      ++next;
    }
    out.push_back(window.front().get());
    window.erase(window.begin());
  }
  return out;
}

}  // namespace osculant
