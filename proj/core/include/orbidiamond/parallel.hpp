#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace orbidiamond {

/// Thread count for the pure sweeps. 0 means hardware concurrency.
struct Parallelism {
  unsigned threads = 0;

  unsigned resolved() const {
    if (threads != 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
  }
};

/// Splits [0, count) into a fixed number of chunks (independent of the thread
/// count), evaluates `chunk_fn(begin, end)` for each, and folds the per-chunk
/// results in chunk order. The output is therefore identical for any number
/// of threads as long as `merge` is associative.
template <class Result, class ChunkFn, class Merge>
Result parallel_reduce(std::uint64_t count, Parallelism par, Result init, ChunkFn chunk_fn,
                       Merge merge) {
  constexpr std::uint64_t kMaxChunks = 256;
  if (count == 0) return init;
  const std::uint64_t chunks = std::min<std::uint64_t>(count, kMaxChunks);
  std::vector<Result> partial(chunks);
  auto bounds = [&](std::uint64_t c) { return c * count / chunks; };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(par.resolved(), chunks));
  if (threads <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) partial[c] = chunk_fn(bounds(c), bounds(c + 1));
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::uint64_t c = next++; c < chunks; c = next++)
            partial[c] = chunk_fn(bounds(c), bounds(c + 1));
        } catch (...) {
          errors[t] = std::current_exception();
          next = chunks;
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  Result acc = std::move(init);
  for (auto& p : partial) acc = merge(std::move(acc), std::move(p));
  return acc;
}

}  // namespace orbidiamond
